#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace thetakit::cli {

enum class SuiteId {
    latin_table,
    symplectic_table,
    chromatic_table,
    schrijver_table,
    counterexample,
    nics_construction,
    chang,
    tietze,
    hanoi_windmill,
    srg_named,
};

inline constexpr std::array kAllSuites = {
    SuiteId::latin_table,    SuiteId::symplectic_table,  SuiteId::chromatic_table, SuiteId::schrijver_table,
    SuiteId::counterexample, SuiteId::nics_construction, SuiteId::chang,           SuiteId::tietze,
    SuiteId::hanoi_windmill, SuiteId::srg_named,
};

std::string_view to_string(SuiteId id);
std::optional<SuiteId> parse_suite(std::string_view text);

struct SuiteOptions {
    double tol = 1e-3;             // SDP values
    std::int64_t budget_ms = 60000;  // per heavy row
    std::size_t n_max = 16;        // latin-table
    std::size_t k_max = 4;         // nics-construction
    std::size_t ell_max = 6;       // schrijver-table
    std::uint64_t seed = 1;
};

// Reads the fields above from a JSON object; unknown keys are rejected.
SuiteOptions suite_options_from_json(const nlohmann::json& j, SuiteOptions base = {});

enum class RowStatus { pass, fail, inconclusive };

struct SuiteRow {
    std::string item, quantity, expected, observed;
    double tolerance = 0;  // 0 for exact comparisons
    RowStatus status = RowStatus::fail;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteRow> rows;
    double elapsed_ms = 0;
    bool passed() const;
};

SuiteReport run_suite(SuiteId id, const SuiteOptions& options);

nlohmann::json to_json(const SuiteReport& r);
std::string to_csv(const SuiteReport& r);

}  // namespace thetakit::cli
