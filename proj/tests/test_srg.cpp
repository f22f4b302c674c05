#include <gtest/gtest.h>

#include "thetakit/errors.hpp"
#include "thetakit/families.hpp"
#include "thetakit/srg.hpp"
#include "thetakit/structure.hpp"
#include "thetakit/theta.hpp"

using namespace thetakit;

namespace {

const SrgParams kPetersen{10, 3, 0, 1};

TEST(QuadSurd, Arithmetic) {
    const QuadSurd phi(Rational(1, 2), Rational(1, 2), 5);
    EXPECT_EQ(phi * phi, phi + QuadSurd(Rational(1)));
    EXPECT_EQ(QuadSurd::sqrt(8), QuadSurd(0, 2, 2));
    EXPECT_TRUE(QuadSurd::sqrt(9).is_rational());
    EXPECT_EQ(QuadSurd::sqrt(9), QuadSurd(Rational(3)));
    EXPECT_LT(QuadSurd::sqrt(2), QuadSurd(Rational(3, 2)));
    EXPECT_EQ(QuadSurd::sqrt(5).floor(), 2);
    EXPECT_EQ(QuadSurd::sqrt(5).ceil(), 3);
    EXPECT_EQ((QuadSurd(Rational(1)) / QuadSurd::sqrt(2)), QuadSurd(0, Rational(1, 2), 2));
    EXPECT_NEAR(phi.to_double(), 1.6180339887, 1e-9);
    EXPECT_EQ(QuadSurd(Rational(5, 2)).to_string(), "5/2");
}

TEST(Srg, Feasibility) {
    EXPECT_TRUE(srg_feasible(kPetersen).feasible);
    EXPECT_TRUE(srg_feasible({5, 2, 0, 1}).feasible);
    EXPECT_TRUE(srg_feasible({16, 5, 0, 2}).feasible);
    EXPECT_TRUE(srg_feasible({50, 7, 0, 1}).feasible);
    const auto bad = srg_feasible({10, 3, 1, 1});
    EXPECT_FALSE(bad.feasible);
    EXPECT_FALSE(bad.violations.empty());
    // Counting identity holds, multiplicities are not integral.
    EXPECT_FALSE(srg_feasible({11, 6, 1, 6}).feasible);
    EXPECT_FALSE(srg_feasible({5, 4, 3, 0}).feasible);
    EXPECT_THROW(srg_theta({10, 3, 1, 1}), ParameterError);
}

TEST(Srg, Spectrum) {
    const auto s = srg_spectrum(kPetersen);
    EXPECT_EQ(s.d, 3);
    EXPECT_EQ(s.r, QuadSurd(Rational(1)));
    EXPECT_EQ(s.s, QuadSurd(Rational(-2)));
    EXPECT_EQ(s.m_r, 5);
    EXPECT_EQ(s.m_s, 4);
    const auto c = srg_spectrum({5, 2, 0, 1});
    EXPECT_TRUE(c.conference);
    EXPECT_EQ(c.m_r, 2);
}

TEST(Srg, Complement) {
    EXPECT_EQ(srg_complement(kPetersen), (SrgParams{10, 6, 3, 4}));
    EXPECT_EQ(srg_complement(srg_complement({27, 16, 10, 8})), (SrgParams{27, 16, 10, 8}));
    EXPECT_EQ(srg_t(kPetersen), QuadSurd(Rational(3)));
}

TEST(Srg, ThetaClosedForms) {
    const struct {
        SrgParams p;
        QuadSurd theta, theta_comp;
    } rows[] = {
        {kPetersen, Rational(4), Rational(5, 2)},
        {{5, 2, 0, 1}, QuadSurd::sqrt(5), QuadSurd::sqrt(5)},
        {{27, 16, 10, 8}, Rational(3), Rational(9)},
        {{100, 36, 14, 12}, Rational(10), Rational(10)},
        {{28, 12, 6, 4}, Rational(4), Rational(7)},
        {{50, 7, 0, 1}, Rational(15), Rational(10, 3)},
    };
    for (const auto& r : rows) {
        const SrgTheta t = srg_theta(r.p);
        EXPECT_EQ(t.theta_g, r.theta);
        EXPECT_EQ(t.theta_comp, r.theta_comp);
        EXPECT_EQ(t.theta_g * t.theta_comp, QuadSurd(Rational(r.p.n)));
        const SrgTheta swapped = srg_theta(srg_complement(r.p));
        EXPECT_EQ(swapped.theta_g, t.theta_comp);
        const auto vc = srg_vector_chromatic(r.p);
        EXPECT_EQ(vc.chi_g, t.theta_comp);
        EXPECT_EQ(vc.chi_g * vc.chi_comp, QuadSurd(Rational(r.p.n)));
    }
}

TEST(Srg, ClosedFormMatchesSdp) {
    for (const char* s : {"petersen", "shrikhande", "paley:13", "kneser:6:2", "symplectic:2:2", "latin-square:3:5"}) {
        const Graph g = construct_family(parse_family(s));
        const auto p = classify_srg(g);
        ASSERT_TRUE(p.has_value()) << s;
        const SrgTheta t = srg_theta(*p);
        ThetaSettings raw;
        raw.srg_cross_check = false;
        EXPECT_NEAR(lovasz_theta(g, raw).value, t.theta_g.to_double(), 1e-3) << s;
        EXPECT_NEAR(lovasz_theta(complement(g), raw).value, t.theta_comp.to_double(), 1e-3) << s;
    }
}

TEST(Srg, Bounds) {
    const SrgBounds b = srg_bounds(kPetersen);
    EXPECT_EQ(b.alpha_upper, 4);
    EXPECT_EQ(b.chi_comp_lower, 4);
    EXPECT_EQ(b.chi_f_lower, QuadSurd(Rational(5, 2)));
    EXPECT_EQ(b.chi_lower, 3);
}

TEST(Srg, FamilyParameters) {
    for (std::int64_t n = 3; n <= 16; ++n) {
        const auto fp = family_params(srg_family::LatinSquare{3, n});
        ASSERT_TRUE(fp.params.has_value());
        EXPECT_EQ(srg_complement(*fp.params), (SrgParams{n * n, (n - 2) * (n - 1), (n - 3) * (n - 3) + 1, (n - 3) * (n - 2)}));
    }
    const auto full = family_params(srg_family::LatinSquare{4, 3});
    EXPECT_FALSE(full.params.has_value());
    EXPECT_EQ(full.complete_order, 9);
    EXPECT_EQ(family_params(srg_family::Symplectic{2, 2}).params, (SrgParams{15, 6, 1, 3}));
    EXPECT_EQ(family_params(srg_family::Paley{13}).params, (SrgParams{13, 6, 2, 3}));
    EXPECT_EQ(family_params(srg_family::Conference{9}).params, (SrgParams{9, 4, 1, 2}));
    EXPECT_THROW(family_params(srg_family::Paley{7}), ParameterError);
    EXPECT_THROW(family_params(srg_family::Symplectic{2, 6}), ParameterError);
}

TEST(Srg, NumberTheory) {
    for (std::int64_t q : {2, 3, 4, 8, 9, 25, 27, 49, 121}) EXPECT_TRUE(is_prime_power(q)) << q;
    for (std::int64_t q : {1, 6, 10, 12, 36}) EXPECT_FALSE(is_prime_power(q)) << q;
    EXPECT_TRUE(sum_two_squares(13));
    EXPECT_TRUE(sum_two_squares(25));
    EXPECT_FALSE(sum_two_squares(21));
    EXPECT_TRUE(sc_vt_exists(5));
    EXPECT_TRUE(sc_vt_exists(13));
    EXPECT_FALSE(sc_vt_exists(21));
    EXPECT_FALSE(sc_vt_exists(4));
}

TEST(Srg, LatinCountBoundsBracketKnownCounts) {
    const long long known[] = {1, 2, 12, 576, 161280, 812851200};
    for (std::int64_t n = 1; n <= 6; ++n) {
        const auto b = latin_square_count_bounds(n);
        const BigInt count = known[n - 1];
        EXPECT_LE(b.lower, Rational(count)) << n;
        EXPECT_GE(b.upper_ceil, count) << n;
        EXPECT_FALSE(b.upper_decimal.empty());
    }
}

TEST(Srg, Serialization) {
    const auto j = srg_summary_json(kPetersen);
    EXPECT_EQ(j["n"], 10);
    EXPECT_EQ(j["theta"]["exact"], "4");
    const std::vector<SrgParams> rows{kPetersen, {16, 6, 2, 2}};
    const std::string csv = srg_table_csv(rows);
    EXPECT_NE(csv.find('\n'), std::string::npos);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

}  // namespace
