#include <random>

#include <gtest/gtest.h>

#include "thetakit/conic.hpp"
#include "thetakit/errors.hpp"

using namespace thetakit;

namespace {

SparseRows rows(std::initializer_list<std::initializer_list<double>> dense) {
    const auto r = static_cast<Eigen::Index>(dense.size());
    const auto c = static_cast<Eigen::Index>(dense.begin()->size());
    Eigen::MatrixXd m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : dense) {
        Eigen::Index j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m.sparseView();
}

Eigen::VectorXd vec(std::initializer_list<double> v) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) out(i++) = x;
    return out;
}

// min <C, X> subject to trace X = 1, X psd.
ConicProblem min_eigenvalue_problem(const Eigen::MatrixXd& c) {
    const auto side = static_cast<std::size_t>(c.rows());
    ConicProblem p;
    p.cone.psd_sides = {side};
    p.c = svec(c);
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(c.rows(), c.cols());
    p.A = Eigen::MatrixXd(svec(id).transpose()).sparseView();
    p.b = vec({1});
    return p;
}

TEST(Conic, LinearProgram) {
    ConicProblem p;
    p.cone.nonneg_dim = 2;
    p.c = vec({1, 1});
    p.A = rows({{1, 2}});
    p.b = vec({2});
    const auto s = solve(p);
    EXPECT_EQ(s.status, SolveStatus::optimal);
    EXPECT_NEAR(s.objective, 1, 1e-6);
    EXPECT_NEAR(s.x(1), 1, 1e-5);
    EXPECT_LT(s.residuals.primal, 1e-6);
    EXPECT_LT(s.residuals.gap, 1e-6);
    // Dual certificate: A'y + s = c with s >= 0.
    const Eigen::VectorXd slack = p.c - Eigen::VectorXd(p.A.transpose() * s.y);
    EXPECT_GE(slack.minCoeff(), -1e-6);
    EXPECT_NEAR(s.dual_objective, 1, 1e-6);
}

TEST(Conic, MaximizeSense) {
    ConicProblem p;
    p.cone.nonneg_dim = 3;
    p.c = vec({3, 1, 0});
    p.A = rows({{1, 1, 1}});
    p.b = vec({4});
    p.sense = Sense::maximize;
    const auto s = solve(p);
    EXPECT_NEAR(s.objective, 12, 1e-5);
    EXPECT_NEAR(s.dual_objective, 12, 1e-5);
}

TEST(Conic, FreeVariables) {
    // min x1 + 2 x2  s.t.  x1 - x2 = -3,  x1 free, x2 >= 0.
    ConicProblem p;
    p.cone.zero_dim = 1;
    p.cone.nonneg_dim = 1;
    p.c = vec({1, 2});
    p.A = rows({{1, -1}});
    p.b = vec({-3});
    const auto s = solve(p);
    EXPECT_NEAR(s.objective, -3, 1e-5);
    EXPECT_NEAR(s.x(0), -3, 1e-5);
}

TEST(Conic, SmallestEigenvalueAgainstEigen) {
    std::mt19937_64 rng(29);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 5; ++trial) {
        const int side = 3 + trial;
        Eigen::MatrixXd m(side, side);
        for (int i = 0; i < side; ++i)
            for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = gauss(rng);
        const double expected = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues()(0);
        const auto s = solve(min_eigenvalue_problem(m));
        EXPECT_EQ(s.status, SolveStatus::optimal);
        EXPECT_NEAR(s.objective, expected, 1e-5);
        const Eigen::MatrixXd x = smat(s.x, static_cast<std::size_t>(side));
        EXPECT_NEAR(x.trace(), 1, 1e-6);
        EXPECT_GE(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(x).eigenvalues()(0), -1e-6);
    }
}

TEST(Conic, MixedCones) {
    // max <J, X> + t  s.t.  trace X + t = 1, X psd 2x2, t >= 0. Optimum 2 at X = J/2.
    ConicProblem p;
    p.cone.nonneg_dim = 1;
    p.cone.psd_sides = {2};
    p.sense = Sense::maximize;
    const Eigen::MatrixXd j = Eigen::MatrixXd::Ones(2, 2), id = Eigen::MatrixXd::Identity(2, 2);
    p.c.resize(4);
    p.c << 1, svec(j);
    Eigen::VectorXd row(4);
    row << 1, svec(id);
    p.A = Eigen::MatrixXd(row.transpose()).sparseView();
    p.b = vec({1});
    const auto s = solve(p);
    EXPECT_NEAR(s.objective, 2, 1e-6);
    EXPECT_NEAR(s.x(0), 0, 1e-5);
}

TEST(Conic, Deterministic) {
    Eigen::MatrixXd m(3, 3);
    m << 2, -1, 0, -1, 2, -1, 0, -1, 2;
    const auto a = solve(min_eigenvalue_problem(m)), b = solve(min_eigenvalue_problem(m));
    EXPECT_EQ(a.iterations, b.iterations);
    EXPECT_EQ(a.x, b.x);
}

TEST(Conic, Validation) {
    ConicProblem p;
    p.cone.nonneg_dim = 2;
    p.c = vec({1, 1, 1});
    p.A = rows({{1, 1}});
    p.b = vec({1});
    EXPECT_THROW(p.validate(), ParameterError);
    EXPECT_THROW(solve(p), ParameterError);
}

TEST(Svec, RoundTripAndInnerProduct) {
    Eigen::MatrixXd a(3, 3), b(3, 3);
    a << 1, 2, 3, 2, 4, 5, 3, 5, 6;
    b << 0, 1, -1, 1, 2, 0, -1, 0, 3;
    EXPECT_EQ(svec(a).size(), 6);
    EXPECT_TRUE(smat(svec(a), 3).isApprox(a));
    EXPECT_NEAR(svec(a).dot(svec(b)), (a * b).trace(), 1e-12);
    EXPECT_EQ(svec_index(0, 2), svec_index(2, 0));
    EXPECT_EQ(svec_index(2, 2), 5U);
}

TEST(Svec, ProjectPsd) {
    Eigen::MatrixXd m(2, 2);
    m << 1, 2, 2, 1;  // eigenvalues 3, -1
    const Eigen::MatrixXd p = project_psd(m);
    EXPECT_GE(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(p).eigenvalues()(0), -1e-12);
    EXPECT_TRUE(project_psd(p).isApprox(p));
    EXPECT_TRUE(p.isApprox(Eigen::MatrixXd::Constant(2, 2, 1.5)));
}

TEST(Conic, JsonRoundTrip) {
    ConicProblem p;
    p.cone.zero_dim = 1;
    p.cone.nonneg_dim = 1;
    p.cone.psd_sides = {2};
    p.c = vec({1, 0, 1, 0, 1});
    p.A = rows({{1, 1, 0, 0, 0}, {0, 0, 1, 0, 1}});
    p.b = vec({1, 1});
    const auto j = to_json(p);
    EXPECT_EQ(j["cone"]["psd"], nlohmann::json::array({2}));
    const ConicProblem q = conic_problem_from_json(j);
    EXPECT_EQ(q.cone, p.cone);
    EXPECT_EQ(q.c, p.c);
    EXPECT_EQ(q.b, p.b);
    EXPECT_TRUE(Eigen::MatrixXd(q.A).isApprox(Eigen::MatrixXd(p.A)));
    EXPECT_EQ(q.sense, p.sense);
}

}  // namespace
