#include "thetakit/conic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Cholesky>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kDivergence = 1e12;

// Solves (A A') y = r, either by a diagonal shortcut (mutually orthogonal rows) or a dense Cholesky.
class NormalSolver {
public:
    explicit NormalSolver(const SparseRows& a) {
        Eigen::SparseMatrix<double> aat = (a * a.transpose()).pruned();
        const Eigen::Index m = a.rows();
        bool diagonal = true;
        for (Eigen::Index k = 0; k < aat.outerSize() && diagonal; ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(aat, k); it; ++it)
                if (it.row() != it.col()) {
                    diagonal = false;
                    break;
                }
        if (diagonal) {
            inv_diag_ = Eigen::VectorXd::Ones(m);
            for (Eigen::Index k = 0; k < aat.outerSize(); ++k)
                for (Eigen::SparseMatrix<double>::InnerIterator it(aat, k); it; ++it)
                    if (it.value() > 0) inv_diag_(it.row()) = 1.0 / it.value();
            diagonal_ = true;
            return;
        }
        Eigen::MatrixXd dense = Eigen::MatrixXd(aat);
        llt_.compute(dense);
        if (llt_.info() != Eigen::Success) {
            // Redundant rows: a small ridge keeps the factorization well defined.
            dense.diagonal().array() += 1e-10 * std::max(1.0, dense.diagonal().maxCoeff());
            llt_.compute(dense);
        }
    }

    Eigen::VectorXd solve(const Eigen::VectorXd& r) const {
        if (diagonal_) return inv_diag_.cwiseProduct(r);
        return llt_.solve(r);
    }

private:
    bool diagonal_ = false;
    Eigen::VectorXd inv_diag_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
};

// Splits v = s - mu x with s in the dual cone and x in the primal cone, orthogonal to each other.
class ConeSplitter {
public:
    explicit ConeSplitter(const ConeSpec& cone) : cone_(cone) {}

    void split(const Eigen::VectorXd& v, double mu, Eigen::VectorXd& s, Eigen::VectorXd& x) {
        std::size_t off = 0;
        for (std::size_t i = 0; i < cone_.zero_dim; ++i, ++off) {
            s(static_cast<Eigen::Index>(off)) = 0;
            x(static_cast<Eigen::Index>(off)) = -v(static_cast<Eigen::Index>(off)) / mu;
        }
        for (std::size_t i = 0; i < cone_.nonneg_dim; ++i, ++off) {
            double t = v(static_cast<Eigen::Index>(off));
            s(static_cast<Eigen::Index>(off)) = std::max(t, 0.0);
            x(static_cast<Eigen::Index>(off)) = std::max(-t, 0.0) / mu;
        }
        for (auto side : cone_.psd_sides) {
            const auto len = static_cast<Eigen::Index>(svec_size(side));
            const auto o = static_cast<Eigen::Index>(off);
            es_.compute(smat(v.segment(o, len), side));
            const auto& lam = es_.eigenvalues();
            const auto& q = es_.eigenvectors();
            const auto k = static_cast<Eigen::Index>(side);
            Eigen::Index neg = 0;
            while (neg < k && lam(neg) < 0) ++neg;
            Eigen::MatrixXd pos = q.rightCols(k - neg) * lam.tail(k - neg).asDiagonal() * q.rightCols(k - neg).transpose();
            Eigen::MatrixXd nega = q.leftCols(neg) * (-lam.head(neg)).asDiagonal() * q.leftCols(neg).transpose();
            s.segment(o, len) = svec(pos);
            x.segment(o, len) = svec(nega) / mu;
            off += static_cast<std::size_t>(len);
        }
    }

private:
    const ConeSpec& cone_;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_;
};

Residuals residuals_of(const SparseRows& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                       const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& s) {
    Residuals r;
    r.primal = (a * x - b).norm() / (1 + b.norm());
    r.dual = (a.transpose() * y + s - c).norm() / (1 + c.norm());
    double px = c.dot(x), dy = b.dot(y);
    r.gap = std::fabs(px - dy) / (1 + std::fabs(px) + std::fabs(dy));
    return r;
}

double worst(const Residuals& r) { return std::max({r.primal, r.dual, r.gap}); }

}  // namespace

std::size_t ConeSpec::dimension() const {
    std::size_t d = zero_dim + nonneg_dim;
    for (auto s : psd_sides) d += svec_size(s);
    return d;
}

void ConicProblem::validate() const {
    const auto dim = static_cast<Eigen::Index>(cone.dimension());
    if (c.size() != dim) throw ParameterError("objective length differs from the cone dimension");
    if (A.cols() != dim) throw ParameterError("constraint column count differs from the cone dimension");
    if (A.rows() != b.size()) throw ParameterError("constraint row count differs from the right-hand side length");
}

std::string_view to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::max_iters: return "max_iters";
        case SolveStatus::infeasible_detected: return "infeasible_detected";
    }
    return "?";
}

Eigen::VectorXd svec(const Eigen::MatrixXd& m) {
    const auto side = static_cast<std::size_t>(m.rows());
    Eigen::VectorXd v(static_cast<Eigen::Index>(svec_size(side)));
    for (std::size_t j = 0; j < side; ++j)
        for (std::size_t i = 0; i <= j; ++i) {
            double t = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            v(static_cast<Eigen::Index>(svec_index(i, j))) = i == j ? t : t * kSqrt2;
        }
    return v;
}

Eigen::MatrixXd smat(const Eigen::Ref<const Eigen::VectorXd>& v, std::size_t side) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side));
    for (std::size_t j = 0; j < side; ++j)
        for (std::size_t i = 0; i <= j; ++i) {
            double t = v(static_cast<Eigen::Index>(svec_index(i, j)));
            if (i != j) t /= kSqrt2;
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = t;
            m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = t;
        }
    return m;
}

Eigen::MatrixXd project_psd(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

ConicSolution solve(const ConicProblem& p, const ConicSettings& settings) {
    p.validate();
    const double sense = p.sense == Sense::maximize ? -1.0 : 1.0;
    const Eigen::VectorXd c = sense * p.c;
    const Eigen::Index m = p.A.rows(), dim = p.A.cols();

    // Row equilibration, then normalization of b and c.
    Eigen::VectorXd row_scale = Eigen::VectorXd::Ones(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        double nrm = p.A.row(i).norm();
        if (nrm > 0) row_scale(i) = 1.0 / nrm;
    }
    SparseRows a = row_scale.asDiagonal() * p.A;
    Eigen::VectorXd b = row_scale.cwiseProduct(p.b);
    const double sb = std::max(1.0, b.norm()), sc = std::max(1.0, c.norm());
    b /= sb;
    const Eigen::VectorXd cs = c / sc;
    const Eigen::SparseMatrix<double> at = a.transpose();

    NormalSolver normal(a);
    ConeSplitter splitter(p.cone);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(dim), s = Eigen::VectorXd::Zero(dim), y = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd v(dim), x_prev(dim), ax = Eigen::VectorXd::Zero(m);
    double mu = settings.scale > 0 ? settings.scale : 1.0;
    const double bnorm = b.norm(), cnorm = cs.norm();

    auto unscaled = [&](const Eigen::VectorXd& xs, const Eigen::VectorXd& ys, const Eigen::VectorXd& ss) {
        ConicSolution sol;
        sol.x = xs * sb;
        sol.y = sc * row_scale.cwiseProduct(ys);
        sol.s = sc * ss;
        sol.residuals = residuals_of(p.A, p.b, c, sol.x, sol.y, sol.s);
        sol.objective = sense * c.dot(sol.x);
        sol.dual_objective = sense * p.b.dot(sol.y);
        if (p.sense == Sense::maximize) sol.y = -sol.y;
        if (p.sense == Sense::maximize) sol.s = -sol.s;
        return sol;
    };

    Eigen::VectorXd best_x = x, best_y = y, best_s = s;
    double best_score = std::numeric_limits<double>::infinity();
    int dual_heavy = 0, primal_heavy = 0;
    std::size_t next_full_check = 0;

    for (std::size_t it = 1; it <= settings.max_iters; ++it) {
        Eigen::VectorXd rhs = mu * (b - ax) - a * (s - cs);
        y = normal.solve(rhs);
        v = cs - at * y - mu * x;
        x_prev = x;
        splitter.split(v, mu, s, x);
        ax = a * x;

        const double pres = (ax - b).norm() / (1 + bnorm);
        const double dres = mu * (x - x_prev).norm() / (1 + cnorm);
        const double px = cs.dot(x), dy = b.dot(y);
        const double gap = std::fabs(px - dy) / (1 + std::fabs(px) + std::fabs(dy));

        if (!std::isfinite(pres + dres + gap) || x.norm() > kDivergence || y.norm() > kDivergence) {
            ConicSolution sol = unscaled(best_x, best_y, best_s);
            sol.status = SolveStatus::infeasible_detected;
            sol.iterations = it;
            return sol;
        }

        if (std::max({pres, dres, gap}) <= settings.eps && it >= next_full_check) {
            ConicSolution sol = unscaled(x, y, s);
            if (worst(sol.residuals) <= settings.eps) {
                sol.status = SolveStatus::optimal;
                sol.iterations = it;
                return sol;
            }
            next_full_check = it + 25;
        }

        if (it % 50 == 0) {
            double score = std::max({pres, dres, gap});
            if (score < best_score) {
                best_score = score;
                best_x = x;
                best_y = y;
                best_s = s;
            }
        }

        // Balance the two residuals through the penalty parameter.
        if (dres > 10 * pres) {
            ++dual_heavy;
            primal_heavy = 0;
        } else if (pres > 10 * dres) {
            ++primal_heavy;
            dual_heavy = 0;
        } else {
            dual_heavy = primal_heavy = 0;
        }
        if (dual_heavy >= 20) {
            mu = std::max(mu * 0.5, 1e-6);
            dual_heavy = 0;
        } else if (primal_heavy >= 20) {
            mu = std::min(mu * 2.0, 1e6);
            primal_heavy = 0;
        }
    }
    ConicSolution sol = unscaled(x, y, s);
    ConicSolution best = unscaled(best_x, best_y, best_s);
    if (worst(best.residuals) < worst(sol.residuals)) sol = std::move(best);
    sol.status = SolveStatus::max_iters;
    sol.iterations = settings.max_iters;
    return sol;
}

nlohmann::json to_json(const ConicProblem& p) {
    nlohmann::json rows = nlohmann::json::array();
    Eigen::MatrixXd dense(p.A);
    for (Eigen::Index i = 0; i < dense.rows(); ++i) {
        std::vector<double> row(static_cast<std::size_t>(dense.cols()));
        for (Eigen::Index j = 0; j < dense.cols(); ++j) row[static_cast<std::size_t>(j)] = dense(i, j);
        rows.push_back(row);
    }
    return {{"c", std::vector<double>(p.c.data(), p.c.data() + p.c.size())},
            {"A", rows},
            {"b", std::vector<double>(p.b.data(), p.b.data() + p.b.size())},
            {"cone", {{"zero", p.cone.zero_dim}, {"nonneg", p.cone.nonneg_dim}, {"psd", p.cone.psd_sides}}},
            {"sense", p.sense == Sense::maximize ? "max" : "min"}};
}

ConicProblem conic_problem_from_json(const nlohmann::json& j) {
    ConicProblem p;
    auto c = j.at("c").get<std::vector<double>>();
    auto b = j.at("b").get<std::vector<double>>();
    p.c = Eigen::Map<Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size()));
    p.b = Eigen::Map<Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
    const auto& cone = j.at("cone");
    p.cone.zero_dim = cone.value("zero", std::size_t{0});
    p.cone.nonneg_dim = cone.value("nonneg", std::size_t{0});
    p.cone.psd_sides = cone.value("psd", std::vector<std::size_t>{});
    auto sense = j.value("sense", std::string("min"));
    if (sense != "min" && sense != "max") throw ParameterError("sense must be \"min\" or \"max\"");
    p.sense = sense == "max" ? Sense::maximize : Sense::minimize;
    const auto& rows = j.at("A");
    std::vector<Eigen::Triplet<double>> trips;
    Eigen::Index ncols = static_cast<Eigen::Index>(c.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto row = rows[i].get<std::vector<double>>();
        if (static_cast<Eigen::Index>(row.size()) != ncols) throw ParameterError("constraint row length differs from c");
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] != 0) trips.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k), row[k]);
    }
    p.A.resize(static_cast<Eigen::Index>(rows.size()), ncols);
    p.A.setFromTriplets(trips.begin(), trips.end());
    p.validate();
    return p;
}

}  // namespace thetakit
