#include "thetakit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>

#include "thetakit/errors.hpp"
#include "thetakit/isomorphism.hpp"

namespace thetakit {

namespace mp = boost::multiprecision;

std::string_view to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::A: return "A";
        case MatrixKind::L: return "L";
        case MatrixKind::Q: return "Q";
        case MatrixKind::NormL: return "NormL";
    }
    return "?";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view text) {
    for (auto k : kAllMatrixKinds)
        if (text == to_string(k)) return k;
    if (text == "normalized" || text == "normL" || text == "N") return MatrixKind::NormL;
    return std::nullopt;
}

Eigen::MatrixXd graph_matrix(const Graph& g, MatrixKind kind) {
    const auto n = static_cast<Eigen::Index>(g.order());
    Eigen::MatrixXd a = g.adjacency_matrix();
    Eigen::VectorXd deg = a.rowwise().sum();
    switch (kind) {
        case MatrixKind::A: return a;
        case MatrixKind::L: return Eigen::MatrixXd(deg.asDiagonal()) - a;
        case MatrixKind::Q: return Eigen::MatrixXd(deg.asDiagonal()) + a;
        case MatrixKind::NormL: {
            Eigen::VectorXd s(n);
            for (Eigen::Index i = 0; i < n; ++i) s(i) = deg(i) > 0 ? 1.0 / std::sqrt(deg(i)) : 0.0;
            Eigen::MatrixXd m = -(s.asDiagonal() * a * s.asDiagonal());
            for (Eigen::Index i = 0; i < n; ++i) m(i, i) = deg(i) > 0 ? 1.0 : 0.0;
            return m;
        }
    }
    return a;
}

std::vector<double> eigenvalues(const Graph& g, MatrixKind kind) {
    if (g.order() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(graph_matrix(g, kind), Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    if (kind == MatrixKind::A || kind == MatrixKind::Q) std::reverse(ev.begin(), ev.end());
    return ev;
}

SpectrumReport spectrum_report(const Graph& g) {
    return {eigenvalues(g, MatrixKind::A), eigenvalues(g, MatrixKind::L), eigenvalues(g, MatrixKind::Q),
            eigenvalues(g, MatrixKind::NormL)};
}

// ---------------------------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs, BigInt denominator)
    : coeffs_(std::move(coeffs)), denominator_(std::move(denominator)) {
    if (denominator_ == 0) throw ParameterError("polynomial denominator must be nonzero");
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (denominator_ < 0) {
        denominator_ = -denominator_;
        for (auto& c : coeffs_) c = -c;
    }
    BigInt g = denominator_;
    for (const auto& c : coeffs_) g = mp::gcd(g, c);
    if (g > 1) {
        denominator_ /= g;
        for (auto& c : coeffs_) c /= g;
    }
}

double IntPolynomial::evaluate(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc / denominator_.convert_to<double>();
}

Rational IntPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc / Rational(denominator_);
}

std::size_t IntPolynomial::root_multiplicity(const Rational& r) const {
    std::vector<Rational> p(coeffs_.begin(), coeffs_.end());
    std::size_t mult = 0;
    while (p.size() > 1) {
        // Synthetic division by (x - r); the remainder is p(r).
        std::vector<Rational> q(p.size() - 1);
        Rational acc = 0;
        for (std::size_t i = p.size(); i-- > 0;) {
            acc = acc * r + p[i];
            if (i > 0) q[i - 1] = acc;
        }
        if (acc != 0) break;
        ++mult;
        p = std::move(q);
    }
    return mult;
}

std::string IntPolynomial::to_string() const {
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = mp::abs(c);
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        if (mag != 1 || i == 0) out += mag.str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    if (out.empty()) out = "0";
    if (denominator_ != 1) out = "(" + out + ")/" + denominator_.str();
    return out;
}

// ---------------------------------------------------------------------------------------------
// Characteristic polynomials

namespace {

// Sparse integer matrix: off-diagonal entries given by adjacency with a fixed sign, plus a diagonal.
struct IntMatrix {
    std::vector<std::vector<std::size_t>> nbrs;
    std::vector<long> diag;
    long off = 1;
};

IntMatrix integer_matrix(const Graph& g, MatrixKind kind) {
    IntMatrix m;
    const std::size_t n = g.order();
    m.nbrs.resize(n);
    m.diag.assign(n, 0);
    for (auto [i, j] : g.edges()) {
        m.nbrs[i].push_back(j);
        m.nbrs[j].push_back(i);
    }
    if (kind == MatrixKind::L || kind == MatrixKind::Q)
        for (std::size_t i = 0; i < n; ++i) m.diag[i] = static_cast<long>(m.nbrs[i].size());
    if (kind == MatrixKind::L) m.off = -1;
    return m;
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
std::vector<BigInt> faddeev_leverrier(const IntMatrix& a) {
    const std::size_t n = a.diag.size();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    std::vector<BigInt> am(n * n, 0), m(n * n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = am;
        for (std::size_t i = 0; i < n; ++i) m[i * n + i] += c[n - k + 1];
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                BigInt s = 0;
                for (auto l : a.nbrs[i]) s += m[l * n + j];
                if (a.off < 0) s = -s;
                if (a.diag[i] != 0) s += a.diag[i] * m[i * n + j];
                am[i * n + j] = std::move(s);
            }
        for (std::size_t i = 0; i < n; ++i) trace += am[i * n + i];
        c[n - k] = -trace / static_cast<long>(k);
    }
    return c;
}

// Coefficients of the degree-k polynomial taking value values[x] at x = 0..k.
std::vector<BigInt> interpolate_integer_points(const std::vector<BigInt>& values) {
    const std::size_t k = values.size();
    // Newton divided differences on nodes 0..k-1.
    std::vector<Rational> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
    // Expand sum dd[i] * prod_{j<i} (x - j) by Horner from the top.
    std::vector<Rational> poly{dd[k - 1]};
    for (std::size_t i = k - 1; i-- > 0;) {
        // poly = poly * (x - i) + dd[i]
        std::vector<Rational> next(poly.size() + 1, 0);
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t + 1] += poly[t];
            next[t] -= poly[t] * Rational(static_cast<long>(i));
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    std::vector<BigInt> out;
    out.reserve(poly.size());
    for (const auto& r : poly) {
        if (mp::denominator(r) != 1) throw std::logic_error("non-integral interpolation");
        out.push_back(mp::numerator(r));
    }
    return out;
}

IntPolynomial normalized_laplacian_poly(const Graph& g) {
    std::vector<std::size_t> live;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) live.push_back(v);
    const std::size_t k = live.size();
    const std::size_t isolated = g.order() - k;
    // det(yD - L) restricted to non-isolated vertices, sampled at y = 0..k.
    std::vector<BigInt> samples;
    samples.reserve(k + 1);
    for (std::size_t y = 0; y <= k; ++y) {
        std::vector<BigInt> m(k * k, 0);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                if (a == b) {
                    auto d = static_cast<long>(g.degree(live[a]));
                    m[a * k + b] = static_cast<long>(y) * d - d;
                } else if (g.adjacent(live[a], live[b])) {
                    m[a * k + b] = 1;
                }
            }
        samples.push_back(determinant(std::move(m), k));
    }
    std::vector<BigInt> coeffs = k == 0 ? std::vector<BigInt>{1} : interpolate_integer_points(samples);
    BigInt det_d = 1;
    for (auto v : live) det_d *= static_cast<long>(g.degree(v));
    coeffs.insert(coeffs.begin(), isolated, BigInt(0));
    return IntPolynomial(std::move(coeffs), det_d);
}

}  // namespace

IntPolynomial char_poly_exact(const Graph& g, MatrixKind kind) {
    if (kind == MatrixKind::NormL) return normalized_laplacian_poly(g);
    return IntPolynomial(faddeev_leverrier(integer_matrix(g, kind)));
}

std::vector<CospectralEntry> cospectral(const Graph& g, const Graph& h, std::span<const MatrixKind> kinds) {
    std::vector<CospectralEntry> out;
    for (auto kind : kinds) out.push_back({kind, cospectral(g, h, kind)});
    return out;
}

bool cospectral(const Graph& g, const Graph& h, MatrixKind kind) {
    if (g.order() != h.order()) return false;
    if (kind != MatrixKind::NormL && g.size() != h.size()) return false;
    return char_poly_exact(g, kind) == char_poly_exact(h, kind);
}

// ---------------------------------------------------------------------------------------------
// Enumeration

namespace {

class ClassCollector {
public:
    explicit ClassCollector(std::vector<Graph>& out) : out_(out) {}

    void offer(Graph g) {
        auto& bucket = buckets_[invariant_hash(g)];
        for (auto idx : bucket)
            if (is_isomorphic(out_[idx], g)) return;
        bucket.push_back(out_.size());
        out_.push_back(std::move(g));
    }

private:
    std::vector<Graph>& out_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

// Labelled d-regular graphs with N(0) = {1..d} and N(1) normalized, completed by choosing the
// neighbourhood of the lowest deficient vertex. Every isomorphism class appears at least once.
class RegularGenerator {
public:
    RegularGenerator(std::size_t n, std::size_t d, const Budget& budget, std::function<void(const Graph&)> emit)
        : n_(n), d_(d), budget_(budget), emit_(std::move(emit)), rows_(n, 0), deg_(n, 0) {}

    bool run() {
        if (d_ == 0) {
            emit_(Graph(n_));
            return true;
        }
        for (std::size_t v = 1; v <= d_; ++v) link(0, v);
        // Vertex 1 needs d-1 more neighbours: j from {2..d}, the rest from {d+1..n-1}.
        for (std::size_t j = 0; j + 1 <= d_; ++j) {
            std::size_t rest = d_ - 1 - j;
            if (j > d_ - 1 || rest > n_ - 1 - d_) continue;
            for (std::size_t t = 0; t < j; ++t) link(1, 2 + t);
            for (std::size_t t = 0; t < rest; ++t) link(1, d_ + 1 + t);
            fill();
            for (std::size_t t = 0; t < j; ++t) unlink(1, 2 + t);
            for (std::size_t t = 0; t < rest; ++t) unlink(1, d_ + 1 + t);
            if (stopped_) return false;
        }
        return true;
    }

private:
    void link(std::size_t a, std::size_t b) {
        rows_[a] |= 1U << b;
        rows_[b] |= 1U << a;
        ++deg_[a];
        ++deg_[b];
    }
    void unlink(std::size_t a, std::size_t b) {
        rows_[a] &= ~(1U << b);
        rows_[b] &= ~(1U << a);
        --deg_[a];
        --deg_[b];
    }

    void fill() {
        if (stopped_) return;
        if ((++nodes_ & 1023U) == 0 && budget_.expired()) {
            stopped_ = true;
            return;
        }
        std::size_t v = 0;
        while (v < n_ && deg_[v] == d_) ++v;
        if (v == n_) {
            GraphBuilder b(n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i + 1; j < n_; ++j)
                    if ((rows_[i] >> j) & 1U) b.add_edge(i, j);
            emit_(std::move(b).build());
            return;
        }
        std::vector<std::size_t> cand;
        for (std::size_t w = v + 1; w < n_; ++w)
            if (deg_[w] < d_ && !((rows_[v] >> w) & 1U)) cand.push_back(w);
        choose(v, cand, 0, d_ - deg_[v]);
    }

    void choose(std::size_t v, const std::vector<std::size_t>& cand, std::size_t from, std::size_t need) {
        if (need == 0) {
            fill();
            return;
        }
        for (std::size_t i = from; i + need <= cand.size() && !stopped_; ++i) {
            link(v, cand[i]);
            choose(v, cand, i + 1, need - 1);
            unlink(v, cand[i]);
        }
    }

    std::size_t n_, d_;
    const Budget& budget_;
    std::function<void(const Graph&)> emit_;
    std::vector<std::uint32_t> rows_;
    std::vector<std::size_t> deg_;
    std::size_t nodes_ = 0;
    bool stopped_ = false;
};

}  // namespace

std::vector<Graph> enumerate_graphs(std::size_t n, std::optional<std::size_t> degree, const Budget& budget,
                                    bool* complete) {
    std::vector<Graph> classes;
    ClassCollector collect(classes);
    bool done = true;
    if (!degree) {
        if (n > 7) throw SizeRefusal("exhaustive enumeration of all graphs is limited to n <= 7");
        std::vector<Edge> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        const std::uint64_t total = std::uint64_t{1} << pairs.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if ((mask & 4095U) == 0 && budget.expired()) {
                done = false;
                break;
            }
            GraphBuilder b(n);
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if ((mask >> e) & 1U) b.add_edge(pairs[e].first, pairs[e].second);
            collect.offer(std::move(b).build());
        }
    } else {
        const std::size_t d = *degree;
        if (n > 12) throw SizeRefusal("regular-graph enumeration is limited to n <= 12");
        if (n > 0 && d >= n) throw ParameterError("degree must be less than the vertex count");
        if ((n * d) % 2 == 0 && n > 0) {
            // Generate the sparser of the graph and its complement.
            const bool flip = 2 * d > n - 1;
            const std::size_t gen_d = flip ? n - 1 - d : d;
            RegularGenerator gen(n, gen_d, budget, [&](const Graph& g) { collect.offer(flip ? complement(g) : g); });
            done = gen.run();
        }
    }
    if (complete) *complete = done;
    return classes;
}

NicsSearch enumerate_and_find_nics(std::size_t n, std::optional<std::size_t> degree, MatrixKind kind,
                                   const Budget& budget) {
    NicsSearch result;
    result.classes = enumerate_graphs(n, degree, budget, &result.complete);
    std::map<std::pair<std::vector<BigInt>, BigInt>, std::size_t> index;
    std::vector<NicsGroup> all;
    for (const auto& g : result.classes) {
        IntPolynomial p = char_poly_exact(g, kind);
        auto key = std::make_pair(p.coeffs(), p.denominator());
        auto [it, inserted] = index.try_emplace(key, all.size());
        if (inserted) all.push_back({std::move(p), {}});
        all[it->second].graphs.push_back(g);
    }
    for (auto& grp : all) {
        if (grp.graphs.size() < 2) continue;
        result.pair_count += grp.graphs.size() * (grp.graphs.size() - 1) / 2;
        result.groups.push_back(std::move(grp));
    }
    return result;
}

// ---------------------------------------------------------------------------------------------
// Counts

InertiaEnergy inertia_and_energies(const Graph& g) {
    InertiaEnergy r;
    const std::size_t n = g.order();
    if (n == 0) return r;
    IntPolynomial p = char_poly_exact(g, MatrixKind::A);
    const auto& c = p.coeffs();
    while (r.n_zero < c.size() && c[r.n_zero] == 0) ++r.n_zero;
    // Real-rooted, so Descartes' rule is exact on both half-lines.
    auto sign_changes = [&](bool negate_odd) {
        std::size_t changes = 0;
        int last = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            int s = c[i] > 0 ? 1 : (c[i] < 0 ? -1 : 0);
            if (negate_odd && (i % 2 == 1)) s = -s;
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    };
    r.n_plus = sign_changes(false);
    r.n_minus = sign_changes(true);
    auto ev = eigenvalues(g, MatrixKind::A);
    for (std::size_t i = 0; i < r.n_plus; ++i) r.s_plus += ev[i] * ev[i];
    for (std::size_t i = n - r.n_minus; i < n; ++i) r.s_minus += ev[i] * ev[i];
    return r;
}

BigInt count_spanning_trees(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) return 0;
    const std::size_t k = n - 1;
    std::vector<BigInt> m(k * k, 0);
    for (std::size_t a = 0; a < k; ++a) {
        m[a * k + a] = static_cast<long>(g.degree(a + 1));
        for (std::size_t b = 0; b < k; ++b)
            if (g.adjacent(a + 1, b + 1)) m[a * k + b] = -1;
    }
    return determinant(std::move(m), k);
}

BigInt walk_count(const Graph& g, std::size_t i, std::size_t j, std::size_t length) {
    const std::size_t n = g.order();
    if (i >= n || j >= n) throw ParameterError("walk endpoint out of range");
    std::vector<BigInt> v(n, 0), next(n);
    v[i] = 1;
    for (std::size_t step = 0; step < length; ++step) {
        for (std::size_t u = 0; u < n; ++u) {
            BigInt s = 0;
            VertexSet nb = g.neighbors(u);
            for (auto w = nb.first(); w < n; w = nb.next(w + 1)) s += v[w];
            next[u] = std::move(s);
        }
        std::swap(v, next);
    }
    return v[j];
}

bool line_graph_spectrum_check(const Graph& g, double tol) {
    const std::size_t n = g.order(), m = g.size();
    if (m == 0) return true;
    auto lhs = eigenvalues(line_graph(g), MatrixKind::A);
    auto rhs = eigenvalues(g, MatrixKind::Q);
    for (auto& x : rhs) x -= 2;
    if (m >= n) {
        rhs.insert(rhs.end(), m - n, -2.0);
    } else {
        // The n - m smallest shifted values must be -2 and are dropped.
        for (std::size_t t = 0; t < n - m; ++t) {
            if (std::fabs(rhs.back() + 2) > tol) return false;
            rhs.pop_back();
        }
    }
    std::sort(rhs.begin(), rhs.end(), std::greater<>());
    for (std::size_t i = 0; i < m; ++i)
        if (std::fabs(lhs[i] - rhs[i]) > tol) return false;
    return true;
}

nlohmann::json to_json(const IntPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return {{"coeffs", coeffs}, {"denominator", p.denominator().str()}, {"text", p.to_string()}};
}

nlohmann::json spectrum_json(const Graph& g, MatrixKind kind) {
    auto poly = char_poly_exact(g, kind);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(c.str());
    return {{"kind", std::string(to_string(kind))},
            {"coeffs", coeffs},
            {"denominator", poly.denominator().str()},
            {"eigenvalues", eigenvalues(g, kind)}};
}

}  // namespace thetakit
