#include "thetakit/invariants.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "thetakit/conic.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/isomorphism.hpp"
#include "thetakit/spectral.hpp"
#include "thetakit/structure.hpp"
#include "thetakit/theta.hpp"

namespace thetakit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

std::vector<std::vector<std::size_t>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<std::size_t>> out(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) out[v] = g.neighbors(v).members();
    return out;
}

ExactOrBound exact_int(std::size_t v, std::vector<std::size_t> witness = {}) {
    ExactOrBound r;
    r.value = r.lower = r.upper = Rational(static_cast<long long>(v));
    r.exact = true;
    r.witness = std::move(witness);
    return r;
}

// ---------------------------------------------------------------------------------------------
// Maximum clique

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, const CliqueOptions& opt) : opt_(opt), n_(g.order()), stride_(words_for(n_)) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        auto deg = g.degrees();
        std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) { return deg[a] > deg[b]; });
        adj_.assign(n_ * stride_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (g.adjacent(order_[i], order_[j])) adj_[i * stride_ + j / kWordBits] |= Word{1} << (j % kWordBits);
    }

    void seed(std::span<const std::size_t> original) {
        if (original.size() <= best_.size()) return;
        std::vector<std::size_t> inv(n_);
        for (std::size_t i = 0; i < n_; ++i) inv[order_[i]] = i;
        best_.clear();
        for (auto v : original) best_.push_back(inv[v]);
    }

    void run() {
        std::vector<Word> all(stride_, 0);
        for (std::size_t v = 0; v < n_; ++v) all[v / kWordBits] |= Word{1} << (v % kWordBits);
        if (reached()) return;
        expand(all, true);
    }

    std::vector<std::size_t> best() const {
        std::vector<std::size_t> out;
        for (auto v : best_) out.push_back(order_[v]);
        std::sort(out.begin(), out.end());
        return out;
    }
    bool aborted() const { return aborted_; }
    bool stopped() const { return stopped_; }
    std::size_t root_bound() const { return root_bound_; }

private:
    bool reached() {
        if (opt_.stop_at && best_.size() >= *opt_.stop_at) stopped_ = true;
        return stopped_;
    }

    static bool any(std::span<const Word> s) {
        return std::any_of(s.begin(), s.end(), [](Word w) { return w != 0; });
    }
    static std::size_t first(std::span<const Word> s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i]) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(s[i]));
        return s.size() * kWordBits;
    }
    const Word* row(std::size_t v) const { return adj_.data() + v * stride_; }

    void expand(std::vector<Word>& p, bool root = false) {
        if ((++nodes_ & 1023U) == 0 && opt_.budget.expired()) aborted_ = true;
        if (aborted_ || stopped_) return;

        // Greedy sequential colouring; only vertices whose colour can still beat the incumbent
        // become branching candidates.
        const std::size_t kmin = best_.size() >= current_.size() ? best_.size() - current_.size() + 1 : 1;
        std::vector<std::size_t> verts, colours;
        std::vector<Word> u = p, q(stride_);
        std::size_t colour = 0;
        while (any(u)) {
            ++colour;
            q = u;
            while (any(q)) {
                const std::size_t v = first(q);
                const Word bit = Word{1} << (v % kWordBits);
                u[v / kWordBits] &= ~bit;
                q[v / kWordBits] &= ~bit;
                const Word* r = row(v);
                for (std::size_t w = 0; w < stride_; ++w) q[w] &= ~r[w];
                if (colour >= kmin) {
                    verts.push_back(v);
                    colours.push_back(colour);
                }
            }
        }
        if (root) root_bound_ = colour;

        std::vector<Word> next(stride_);
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current_.size() + colours[i] <= best_.size()) return;
            const std::size_t v = verts[i];
            current_.push_back(v);
            const Word* r = row(v);
            for (std::size_t w = 0; w < stride_; ++w) next[w] = p[w] & r[w];
            if (!any(next)) {
                if (current_.size() > best_.size()) best_ = current_;
                if (reached()) return;
            } else {
                std::vector<Word> child = next;
                expand(child);
            }
            current_.pop_back();
            p[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
            if (aborted_ || stopped_) return;
        }
    }

    const CliqueOptions& opt_;
    std::size_t n_, stride_;
    std::vector<std::size_t> order_;
    std::vector<Word> adj_;
    std::vector<std::size_t> best_, current_;
    std::size_t nodes_ = 0, root_bound_ = 0;
    bool aborted_ = false, stopped_ = false;
};

// ---------------------------------------------------------------------------------------------
// Colouring

class Colourer {
public:
    Colourer(const Graph& g, const Budget& budget)
        : n_(g.order()), nbrs_(adjacency_lists(g)), budget_(budget), colour_(n_, -1),
          count_(n_ * n_, 0), sat_(n_, 0) {}

    std::vector<int> greedy() {
        std::vector<int> out(n_, -1);
        std::vector<std::vector<char>> seen(n_);
        std::vector<std::size_t> sat(n_, 0);
        for (std::size_t step = 0; step < n_; ++step) {
            std::size_t v = pick(out, sat);
            int c = 0;
            while (c < static_cast<int>(seen[v].size()) && seen[v][c]) ++c;
            out[v] = c;
            for (auto u : nbrs_[v]) {
                if (seen[u].size() <= static_cast<std::size_t>(c)) seen[u].resize(c + 1, 0);
                if (!seen[u][c]) {
                    seen[u][c] = 1;
                    ++sat[u];
                }
            }
        }
        return out;
    }

    void solve(std::span<const std::size_t> clique, std::vector<int> upper) {
        best_ = upper;
        best_count_ = count_colours(upper);
        lower_ = clique.size();
        std::size_t done = 0;
        for (std::size_t i = 0; i < clique.size(); ++i, ++done) assign(clique[i], static_cast<int>(i));
        if (best_count_ > lower_) search(done, static_cast<int>(clique.size()));
    }

    const std::vector<int>& best() const { return best_; }
    std::size_t best_count() const { return best_count_; }
    std::size_t lower() const { return lower_; }
    bool aborted() const { return aborted_; }

private:
    static std::size_t count_colours(const std::vector<int>& c) {
        int m = -1;
        for (int x : c) m = std::max(m, x);
        return static_cast<std::size_t>(m + 1);
    }

    template <class Sat>
    std::size_t pick(const std::vector<int>& col, const Sat& sat) const {
        std::size_t best = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (col[v] >= 0) continue;
            if (best == n_ || sat[v] > sat[best] || (sat[v] == sat[best] && nbrs_[v].size() > nbrs_[best].size())) best = v;
        }
        return best;
    }

    void assign(std::size_t v, int c) {
        colour_[v] = c;
        for (auto u : nbrs_[v])
            if (count_[u * n_ + static_cast<std::size_t>(c)]++ == 0) ++sat_[u];
    }
    void unassign(std::size_t v) {
        const auto c = static_cast<std::size_t>(colour_[v]);
        colour_[v] = -1;
        for (auto u : nbrs_[v])
            if (--count_[u * n_ + c] == 0) --sat_[u];
    }

    void search(std::size_t coloured, int used) {
        if ((++nodes_ & 1023U) == 0 && budget_.expired()) aborted_ = true;
        if (aborted_ || static_cast<std::size_t>(used) >= best_count_) return;
        if (coloured == n_) {
            best_ = colour_;
            best_count_ = static_cast<std::size_t>(used);
            return;
        }
        const std::size_t v = pick(colour_, sat_);
        for (int c = 0; c < used; ++c) {
            if (count_[v * n_ + static_cast<std::size_t>(c)]) continue;
            assign(v, c);
            search(coloured + 1, used);
            unassign(v);
            if (aborted_ || best_count_ <= lower_) return;
        }
        if (static_cast<std::size_t>(used) + 1 < best_count_) {
            assign(v, used);
            search(coloured + 1, used + 1);
            unassign(v);
        }
    }

    std::size_t n_;
    std::vector<std::vector<std::size_t>> nbrs_;
    const Budget& budget_;
    std::vector<int> colour_;
    std::vector<int> count_;
    std::vector<std::size_t> sat_;
    std::vector<int> best_;
    std::size_t best_count_ = 0, lower_ = 0, nodes_ = 0;
    bool aborted_ = false;
};

// ---------------------------------------------------------------------------------------------
// Maximal independent sets

class MisEnumerator {
public:
    MisEnumerator(const Graph& g, const Budget& budget, std::size_t cap)
        : n_(g.order()), budget_(budget), cap_(cap) {
        const Graph c = complement(g);
        for (std::size_t v = 0; v < n_; ++v) nbr_.push_back(c.neighbors(v));
    }

    void run() { recurse(VertexSet(n_), VertexSet::full(n_), VertexSet(n_)); }

    std::vector<VertexSet> sets;
    bool complete = true;

private:
    void recurse(VertexSet r, VertexSet p, VertexSet x) {
        if (!complete) return;
        if ((++nodes_ & 255U) == 0 && budget_.expired()) complete = false;
        if (p.empty()) {
            if (x.empty()) {
                if (sets.size() >= cap_) complete = false;
                else sets.push_back(r);
            }
            return;
        }
        std::size_t pivot = 0, most = 0;
        bool have = false;
        for (const VertexSet* s : {&p, &x})
            for (auto u : s->members()) {
                const std::size_t c = intersection_count(p.words(), nbr_[u].words());
                if (!have || c > most) {
                    pivot = u;
                    most = c;
                    have = true;
                }
            }
        VertexSet cand = p;
        cand.subtract(nbr_[pivot]);
        for (auto v : cand.members()) {
            VertexSet r2 = r;
            r2.set(v);
            recurse(r2, p & nbr_[v], x & nbr_[v]);
            if (!complete) return;
            p.reset(v);
            x.set(v);
        }
    }

    std::size_t n_;
    const Budget& budget_;
    std::size_t cap_;
    std::vector<VertexSet> nbr_;
    std::size_t nodes_ = 0;
};

// Solves M z = rhs by Gauss-Jordan elimination, fixing non-pivot unknowns at `guess`.
std::optional<std::vector<Rational>> solve_with_guess(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                                                     const std::vector<Rational>& guess) {
    const std::size_t rows = m.size(), cols = guess.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& e : m[r]) e *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rational> z = guess;
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivot_col) is_pivot[c] = 1;
    for (std::size_t i = 0; i < r; ++i) {
        Rational v = rhs[i];
        for (std::size_t c = 0; c < cols; ++c)
            if (!is_pivot[c] && m[i][c] != 0) v -= m[i][c] * guess[c];
        z[pivot_col[i]] = v;
    }
    return z;
}

Rational round_to(double v, std::int64_t den) {
    if (v <= 0) return 0;
    if (auto s = snap_rational(v, den, 1e-7)) return *s;
    return Rational(static_cast<long long>(std::llround(v * static_cast<double>(den))), den);
}

// Fixed denominator, so sums of many entries stay small.
Rational fixed_round(double v, std::int64_t den) {
    if (v <= 0) return 0;
    return Rational(static_cast<long long>(std::llround(v * static_cast<double>(den))), den);
}

double golden_min(auto f, double lo, double hi, double tol, double& arg) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    arg = (a + b) / 2;
    return f(arg);
}

__extension__ typedef unsigned __int128 Wide;

BigInt from_wide(Wide w) {
    BigInt out = static_cast<std::uint64_t>(w >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(w);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------------------------

std::vector<std::size_t> local_search_independent_set(const Graph& g, std::size_t target, const Budget& budget,
                                                      std::uint64_t seed, std::size_t max_rounds) {
    const std::size_t n = g.order();
    if (n == 0) return {};
    const auto nbrs = adjacency_lists(g);
    std::mt19937_64 rng(seed);
    std::vector<char> in(n, 0);
    std::vector<std::size_t> tight(n, 0), moved(n, 0);
    std::size_t size = 0, clock = 0;

    auto insert = [&](std::size_t v) {
        in[v] = 1;
        ++size;
        moved[v] = clock;
        for (auto u : nbrs[v]) ++tight[u];
    };
    auto remove = [&](std::size_t v) {
        in[v] = 0;
        --size;
        moved[v] = clock;
        for (auto u : nbrs[v]) --tight[u];
    };
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto fill_free = [&] {
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto v : perm)
            if (!in[v] && tight[v] == 0) insert(v);
    };
    auto members = [&] {
        std::vector<std::size_t> s;
        for (std::size_t v = 0; v < n; ++v)
            if (in[v]) s.push_back(v);
        return s;
    };
    auto restore = [&](const std::vector<std::size_t>& s) {
        for (std::size_t v = 0; v < n; ++v)
            if (in[v]) remove(v);
        for (auto v : s) insert(v);
    };
    // Replace one member by two vertices whose only neighbour in the set is that member.
    auto two_improvement = [&] {
        auto s = members();
        std::shuffle(s.begin(), s.end(), rng);
        for (auto x : s) {
            std::vector<std::size_t> cand;
            for (auto u : nbrs[x])
                if (tight[u] == 1) cand.push_back(u);
            for (std::size_t i = 0; i < cand.size(); ++i)
                for (std::size_t j = i + 1; j < cand.size(); ++j)
                    if (!g.adjacent(cand[i], cand[j])) {
                        remove(x);
                        insert(cand[i]);
                        insert(cand[j]);
                        fill_free();
                        return true;
                    }
        }
        return false;
    };

    fill_free();
    auto best = members();
    for (std::size_t round = 0; round < max_rounds && best.size() < target; ++round) {
        ++clock;
        if ((round & 63U) == 0 && budget.expired()) break;
        while (two_improvement()) {
        }
        if (size > best.size()) best = members();
        if (best.size() >= target) break;
        if (size + 1 < best.size()) restore(best);

        // Force in the least recently moved of a few random outsiders.
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::size_t v = n;
        for (int t = 0; t < 4; ++t) {
            std::size_t c = pick(rng);
            if (in[c]) continue;
            if (v == n || moved[c] < moved[v]) v = c;
        }
        if (v == n) continue;
        for (auto u : nbrs[v])
            if (in[u]) remove(u);
        insert(v);
        fill_free();
    }
    if (size > best.size()) best = members();
    return best;
}

ExactOrBound max_clique(const Graph& g, const CliqueOptions& options) {
    const auto start = Clock::now();
    const std::size_t n = g.order();
    if (n == 0) return exact_int(0);
    CliqueSearch search(g, options);
    {
        const Graph c = complement(g);
        const std::size_t target = options.stop_at.value_or(n);
        Budget warm = options.budget.slice(options.budget.limited() ? options.budget.remaining_ms() / 10 + 1 : 2000);
        search.seed(local_search_independent_set(c, target, warm, options.seed, 20 * n + 100));
    }
    search.run();

    ExactOrBound r;
    r.witness = search.best();
    r.value = r.lower = Rational(static_cast<long long>(r.witness.size()));
    r.elapsed_ms = ms_since(start);
    if (search.aborted() || search.stopped()) {
        r.budget_hit = search.aborted();
        r.exact = false;
        r.upper = Rational(static_cast<long long>(std::max(search.root_bound(), r.witness.size())));
        if (search.stopped()) r.note = "stopped at the requested size";
        if (r.upper == r.lower) r.exact = true;
    } else {
        r.exact = true;
        r.upper = r.value;
    }
    return r;
}

ExactOrBound clique_number(const Graph& g, const Budget& budget) {
    CliqueOptions o;
    o.budget = budget;
    return max_clique(g, o);
}

ExactOrBound independence_number(const Graph& g, const Budget& budget) { return clique_number(complement(g), budget); }

ExactOrBound chromatic_number(const Graph& g, const Budget& budget) {
    const auto start = Clock::now();
    const std::size_t n = g.order();
    if (n == 0) return exact_int(0);
    if (g.size() == 0) return exact_int(1, std::vector<std::size_t>(n, 0));

    const ExactOrBound omega = clique_number(g, budget.slice(budget.limited() ? budget.remaining_ms() / 4 + 1 : 60000));
    Colourer col(g, budget);
    col.solve(omega.witness, col.greedy());

    ExactOrBound r;
    for (int c : col.best()) r.witness.push_back(static_cast<std::size_t>(c));
    r.value = r.upper = Rational(static_cast<long long>(col.best_count()));
    r.lower = Rational(static_cast<long long>(col.lower()));
    r.budget_hit = col.aborted();
    r.exact = !col.aborted() || r.lower == r.upper;
    if (r.exact) r.lower = r.upper;
    r.elapsed_ms = ms_since(start);
    return r;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 30) throw SizeRefusal("maximal independent set enumeration is limited to 30 vertices");
    Budget unlimited = Budget::unlimited();
    MisEnumerator e(g, unlimited, std::numeric_limits<std::size_t>::max());
    e.run();
    std::size_t cap = 2;
    for (std::size_t i = 0; i < n / 3; ++i) cap *= 3;
    if (e.sets.size() > cap) throw std::logic_error("maximal independent set count exceeds 2 * 3^(n/3)");
    return std::move(e.sets);
}

ExactOrBound fractional_chromatic(const Graph& g, const Budget& budget) {
    const auto start = Clock::now();
    const std::size_t n = g.order();
    if (n == 0) return exact_int(0);
    if (g.size() == 0) return exact_int(1);

    MisEnumerator e(g, budget, 200000);
    e.run();
    const auto& sets = e.sets;
    const std::size_t m = sets.size();

    ConicProblem p;
    p.cone.nonneg_dim = m + n;
    p.c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m + n));
    p.c.head(static_cast<Eigen::Index>(m)).setOnes();
    std::vector<Eigen::Triplet<double>> t;
    for (std::size_t i = 0; i < m; ++i)
        for (auto v : sets[i].members()) t.emplace_back(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(i), 1.0);
    for (std::size_t v = 0; v < n; ++v)
        t.emplace_back(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(m + v), -1.0);
    p.A.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m + n));
    p.A.setFromTriplets(t.begin(), t.end());
    p.b = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
    ConicSettings cs;
    cs.eps = 1e-9;
    const ConicSolution sol = solve(p, cs);

    ExactOrBound r;
    r.budget_hit = !e.complete;
    const double lp = sol.objective;
    const std::optional<Rational> snap = snap_rational(lp, 10000, 1e-6);

    std::vector<std::size_t> support;
    double xmax = 0;
    for (std::size_t i = 0; i < m; ++i) xmax = std::max(xmax, sol.x(static_cast<Eigen::Index>(i)));
    for (std::size_t i = 0; i < m; ++i)
        if (sol.x(static_cast<Eigen::Index>(i)) > 1e-6 * xmax) support.push_back(i);
    std::vector<std::size_t> tight;
    for (std::size_t v = 0; v < n; ++v)
        if (sol.y(static_cast<Eigen::Index>(v)) > 1e-6) tight.push_back(v);

    // Upper bound: an exactly feasible cover with value `snap`, else a rescaled rounding.
    std::optional<Rational> upper;
    std::vector<Rational> x(support.size());
    if (snap) {
        std::vector<std::vector<Rational>> mat;
        std::vector<Rational> rhs, guess;
        for (auto v : tight) {
            std::vector<Rational> row;
            for (auto i : support) row.push_back(sets[i].test(v) ? 1 : 0);
            mat.push_back(std::move(row));
            rhs.push_back(1);
        }
        mat.emplace_back(support.size(), Rational(1));
        rhs.push_back(*snap);
        for (auto i : support) guess.push_back(round_to(sol.x(static_cast<Eigen::Index>(i)), 10000));
        if (auto z = solve_with_guess(mat, rhs, guess)) {
            bool ok = std::all_of(z->begin(), z->end(), [](const Rational& q) { return q >= 0; });
            for (std::size_t v = 0; ok && v < n; ++v) {
                Rational cover = 0;
                for (std::size_t k = 0; k < support.size(); ++k)
                    if (sets[support[k]].test(v)) cover += (*z)[k];
                ok = cover >= 1;
            }
            if (ok) {
                upper = *snap;
                x = *z;
            }
        }
    }
    if (!upper) {
        Rational total = 0, cmin = -1;
        for (std::size_t k = 0; k < support.size(); ++k) {
            x[k] = fixed_round(sol.x(static_cast<Eigen::Index>(support[k])), 1000000);
            total += x[k];
        }
        for (std::size_t v = 0; v < n; ++v) {
            Rational cover = 0;
            for (std::size_t k = 0; k < support.size(); ++k)
                if (sets[support[k]].test(v)) cover += x[k];
            if (cmin < 0 || cover < cmin) cmin = cover;
        }
        upper = cmin > 0 ? total / cmin : Rational(static_cast<long long>(n));
    }

    // Lower bound: an exactly feasible fractional clique. Needs every maximal set.
    std::optional<Rational> lower;
    if (e.complete) {
        auto clique_ok = [&](const std::vector<Rational>& y) {
            for (const auto& s : sets) {
                Rational w = 0;
                for (std::size_t k = 0; k < tight.size(); ++k)
                    if (s.test(tight[k])) w += y[k];
                if (w > 1) return false;
            }
            return std::all_of(y.begin(), y.end(), [](const Rational& q) { return q >= 0; });
        };
        if (snap) {
            std::vector<std::vector<Rational>> mat;
            std::vector<Rational> rhs, guess;
            for (auto i : support) {
                std::vector<Rational> row;
                for (auto v : tight) row.push_back(sets[i].test(v) ? 1 : 0);
                mat.push_back(std::move(row));
                rhs.push_back(1);
            }
            mat.emplace_back(tight.size(), Rational(1));
            rhs.push_back(*snap);
            for (auto v : tight) guess.push_back(round_to(sol.y(static_cast<Eigen::Index>(v)), 10000));
            if (auto z = solve_with_guess(mat, rhs, guess); z && clique_ok(*z)) lower = *snap;
        }
        if (!lower) {
            std::vector<Rational> y;
            Rational total = 0, heaviest = 0;
            for (auto v : tight) {
                y.push_back(fixed_round(sol.y(static_cast<Eigen::Index>(v)), 1000000));
                total += y.back();
            }
            for (const auto& s : sets) {
                Rational w = 0;
                for (std::size_t k = 0; k < tight.size(); ++k)
                    if (s.test(tight[k])) w += y[k];
                heaviest = std::max(heaviest, w);
            }
            if (heaviest > 0) lower = total / heaviest;
        }
    }

    // Combinatorial bounds: a colouring above, n / alpha below once every maximal set is known.
    Colourer col(g, budget);
    const auto colours = col.greedy();
    const Rational colour_count(static_cast<long long>(*std::max_element(colours.begin(), colours.end()) + 1));
    bool combinatorial = false;
    if (colour_count < *upper) {
        upper = colour_count;
        x.assign(support.size(), Rational(0));
        combinatorial = true;
    }
    if (e.complete) {
        std::size_t alpha = 0;
        for (const auto& s : sets) alpha = std::max(alpha, s.count());
        const Rational ratio(static_cast<long long>(n), static_cast<long long>(alpha));
        if (!lower || *lower < ratio) lower = ratio;
    }

    r.upper = *upper;
    r.lower = lower.value_or(Rational(1));
    r.exact = lower && *lower == *upper;
    if (combinatorial && !r.exact) r.note = "upper bound from a colouring";
    r.value = r.exact ? r.upper : snap.value_or(r.upper);
    if (!r.exact && r.note.empty()) r.note = e.complete ? "unverified" : "upper bound over a partial enumeration";
    for (std::size_t k = 0; k < support.size(); ++k)
        if (x[k] > 0) r.witness.push_back(support[k]);
    r.elapsed_ms = ms_since(start);
    return r;
}

CapacityReport capacity_report(const Graph& g, std::size_t k_max, const Budget& budget) {
    if (k_max < 1) throw ParameterError("capacity needs k_max >= 1");
    CapacityReport rep;
    const std::size_t n = g.order();
    if (n == 0) return rep;
    Graph power = g;
    for (std::size_t k = 1; k <= k_max; ++k) {
        if (k > 1) {
            if (power.order() * n > 4096) break;
            power = strong_product(power, g);
        }
        const std::int64_t share = budget.limited() ? budget.remaining_ms() / static_cast<std::int64_t>(k_max - k + 1) : 60000;
        CapacityRow row;
        row.k = k;
        row.alpha = independence_number(power, budget.slice(std::max<std::int64_t>(share, 1)));
        row.root = std::pow(to_double(row.alpha.value), 1.0 / static_cast<double>(k));
        if (row.root > rep.lower + 1e-12) {
            rep.lower = row.root;
            rep.witness_k = k;
            rep.witness_size = row.alpha.witness.size();
        }
        rep.rows.push_back(std::move(row));
    }
    rep.upper = lovasz_theta(g).value;
    const auto sym = symmetry_report(g, budget.slice(10000));
    rep.self_complementary = sym.self_complementary.value_or(false);
    if (rep.self_complementary) {
        const double nn = static_cast<double>(n);
        rep.lower = std::max(rep.lower, std::sqrt(nn));
        const double a = to_double(rep.rows.front().alpha.value);
        rep.self_complementary_upper = 16 * std::pow(nn, (a - 1) / (a + 1));
    }
    return rep;
}

BigInt permanent(std::span<const std::uint8_t> entries, std::size_t side) {
    if (entries.size() != side * side) throw ParameterError("permanent needs a square matrix");
    if (side > 28) throw SizeRefusal("permanent is limited to side 28");
    if (side == 0) return 1;
    for (std::size_t i = 0; i < side; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < side; ++j) any = any || entries[i * side + j];
        if (!any) return 0;
    }
    // Row sums over the current column subset; the signed sum is accumulated modulo 2^128,
    // which is exact because |per| <= side! < 2^127.
    std::vector<std::int64_t> rs(side, 0);
    Wide total = 0;
    const std::uint64_t subsets = std::uint64_t{1} << side;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const auto j = static_cast<std::size_t>(std::countr_zero(k));
        gray ^= std::uint64_t{1} << j;
        const bool added = (gray >> j) & 1U;
        for (std::size_t i = 0; i < side; ++i)
            if (entries[i * side + j]) rs[i] += added ? 1 : -1;
        Wide prod = 1;
        for (std::size_t i = 0; i < side && prod; ++i) prod *= static_cast<Wide>(rs[i]);
        if (std::popcount(gray) % 2 == 1) total -= prod;
        else total += prod;
    }
    if (side % 2 == 1) total = Wide{0} - total;
    return from_wide(total);
}

BigInt adjacency_permanent(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint8_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = g.adjacent(i, j) ? 1 : 0;
    return permanent(e, n);
}

bool NsNnsReport::all_hold() const {
    return std::all_of(rows.begin(), rows.end(), [](const JoinRelation& r) { return r.holds; });
}

NsNnsReport ns_nns_invariant_report(const Graph& g1, const Graph& g2, const Budget& budget) {
    NsNnsReport rep;
    if (g1.order() <= 28) {
        rep.per_g1 = adjacency_permanent(g1);
        rep.per_g1_complement = adjacency_permanent(complement(g1));
    }
    const double n1 = static_cast<double>(g1.order());
    const ExactOrBound a2 = independence_number(g2, budget);
    const ExactOrBound w1 = clique_number(g1, budget), w2 = clique_number(g2, budget);
    const ExactOrBound c1 = chromatic_number(g1, budget), c2 = chromatic_number(g2, budget);
    const double th2 = lovasz_theta(g2).value;
    rep.alpha_equals_theta_g2 = a2.exact && std::fabs(to_double(a2.value) - th2) <= 1e-3;
    const bool per_pos = rep.per_g1 && *rep.per_g1 > 0;
    const bool per_c_pos = rep.per_g1_complement && *rep.per_g1_complement > 0;
    rep.ns_theta_certified = per_pos;
    rep.nns_theta_certified = per_c_pos;
    rep.ns_alpha_certified = per_pos && rep.alpha_equals_theta_g2;
    rep.nns_alpha_certified = per_c_pos && rep.alpha_equals_theta_g2;

    for (auto kind : {SplitJoinKind::NS, SplitJoinKind::NNS}) {
        if (budget.expired()) {
            rep.complete = false;
            break;
        }
        const bool ns = kind == SplitJoinKind::NS;
        const std::string tag = ns ? "NS" : "NNS";
        const Graph j = split_join(kind, g1, g2);
        const ExactOrBound a = independence_number(j, budget), w = clique_number(j, budget), c = chromatic_number(j, budget);
        if (!a.exact || !w.exact || !c.exact) rep.complete = false;
        const double th = lovasz_theta(j).value;
        const bool alpha_eq = ns ? rep.ns_alpha_certified : rep.nns_alpha_certified;
        const bool theta_eq = ns ? rep.ns_theta_certified : rep.nns_theta_certified;
        auto add = [&](std::string name, double lhs, double rhs, bool eq, double tol) {
            const bool ok = eq ? std::fabs(lhs - rhs) <= tol : lhs >= rhs - tol;
            rep.rows.push_back({std::move(name), lhs, rhs, eq, ok});
        };
        add("alpha(" + tag + ") vs |V1| + alpha(G2)", to_double(a.value), n1 + to_double(a2.value), alpha_eq, 0);
        add("omega(" + tag + ") = omega(G1) + omega(G2)", to_double(w.value), to_double(w1.value + w2.value), true, 0);
        add("chi(" + tag + ") = chi(G1) + chi(G2)", to_double(c.value), to_double(c1.value + c2.value), true, 0);
        add("theta(" + tag + ") vs |V1| + theta(G2)", th, n1 + th2, theta_eq, 1e-3);
    }
    return rep;
}

Rational shearer_f(std::size_t k) {
    Rational f = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const auto ii = static_cast<long long>(i);
        f = (1 + Rational(ii * ii - ii) * f) / Rational(ii * ii + 1);
    }
    return f;
}

PirotSereni pirot_sereni_bound(std::size_t max_degree, std::size_t k_max) {
    PirotSereni best;
    best.value = std::numeric_limits<double>::infinity();
    const double delta = static_cast<double>(max_degree);
    for (std::size_t k = 1; k <= k_max; ++k) {
        const double kk = static_cast<double>(k);
        auto h = [&](double l) { return (std::pow(1 + l, kk) + l * (1 + l) * delta) / (l * (1 + kk * l)); };
        double arg = 0;
        const double v = 1 + golden_min(h, 1e-9, 8.0, 1e-9, arg);
        if (v < best.value) best = {v, k, arg};
    }
    return best;
}

MaxCut max_cut_exact(const Graph& g, std::optional<double> chi_v) {
    const std::size_t n = g.order();
    if (n > 24) throw SizeRefusal("exact max cut is limited to 24 vertices");
    MaxCut out;
    const double m = static_cast<double>(g.size());
    if (n >= 2) {
        std::vector<std::uint32_t> nb(n, 0);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u)
                if (g.adjacent(u, v)) nb[v] |= std::uint32_t{1} << u;
        // Vertex n-1 stays on side 0; Gray code over the others.
        std::uint32_t side = 0, best_side = 0;
        std::int64_t cut = 0, best = 0;
        const std::uint64_t masks = std::uint64_t{1} << (n - 1);
        for (std::uint64_t k = 1; k < masks; ++k) {
            const auto v = static_cast<std::size_t>(std::countr_zero(k));
            const std::uint32_t same = nb[v] & ((side >> v) & 1U ? side : ~side);
            const std::uint32_t other = nb[v] & ~same;
            cut += std::popcount(same) - std::popcount(other);
            side ^= std::uint32_t{1} << v;
            if (cut > best) {
                best = cut;
                best_side = side;
            }
        }
        out.value = static_cast<std::size_t>(best);
        for (std::size_t v = 0; v < n; ++v)
            if ((best_side >> v) & 1U) out.side.push_back(v);
    }
    out.surplus = static_cast<double>(out.value) - m / 2;
    if (chi_v && *chi_v > 1) {
        out.surplus_bound = m / (std::numbers::pi * (*chi_v - 1));
        out.surplus_bound_holds = out.surplus >= *out.surplus_bound - 1e-9;
    }
    return out;
}

const BoundEntry* BoundReport::find(std::string_view id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

BoundReport bound_library(const Graph& g, std::optional<ThetaPair> theta) {
    BoundReport rep;
    const std::size_t n = g.order();
    const double nn = static_cast<double>(n), m = static_cast<double>(g.size());
    const auto deg = g.degrees();
    const StructureReport st = structure_report(g);
    const bool has_edges = g.size() > 0;
    const bool complete = n > 0 && 2 * g.size() == n * (n - 1);

    auto add = [&](std::string id, BoundTarget t, BoundSide s, double v, bool ok, std::string detail = {}) {
        rep.entries.push_back({std::move(id), t, s, ok ? v : 0.0, ok, std::move(detail)});
    };
    using T = BoundTarget;
    using S = BoundSide;

    double wei_a = 0, wei_w = 0;
    for (auto d : deg) {
        wei_a += 1.0 / (1.0 + static_cast<double>(d));
        wei_w += 1.0 / (nn - static_cast<double>(d));
    }
    add("wei_alpha", T::alpha, S::lower, wei_a, n > 0, n > 0 ? "" : "needs a vertex");
    add("wei_omega", T::omega, S::lower, wei_w, n > 0, n > 0 ? "" : "needs a vertex");

    std::vector<double> ev = n > 0 ? eigenvalues(g, MatrixKind::A) : std::vector<double>{};
    const double l1 = n ? ev.front() : 0, ln = n ? ev.back() : 0;
    add("nikiforov_omega", T::omega, S::lower, 2 * m / (2 * m - l1 * l1), has_edges, has_edges ? "" : "needs an edge");
    {
        const double mc = nn * (nn - 1) / 2 - m;
        const bool ok = mc > 0;
        double lc = 0;
        if (ok) lc = eigenvalues(complement(g), MatrixKind::A).front();
        add("nikiforov_alpha", T::alpha, S::lower, 2 * mc / (2 * mc - lc * lc), ok, ok ? "" : "needs a non-edge");
    }

    if (st.triangle_free && n > 0) {
        Rational sum = 0;
        for (auto d : deg) sum += shearer_f(d);
        add("shearer_alpha", T::alpha, S::lower, to_double(sum), true, to_string(sum));
        const PirotSereni ps = pirot_sereni_bound(g.max_degree());
        add("pirot_sereni_chi_f", T::chi_f, S::upper, ps.value, true,
            "k = " + std::to_string(ps.k) + ", lambda = " + std::to_string(ps.lambda));
        add("triangle_free_theta", T::theta, S::lower, std::pow(nn, 2.0 / 3.0) / 16, true);
    } else {
        const char* why = n ? "needs a triangle-free graph" : "needs a vertex";
        add("shearer_alpha", T::alpha, S::lower, 0, false, why);
        add("pirot_sereni_chi_f", T::chi_f, S::upper, 0, false, why);
        add("triangle_free_theta", T::theta, S::lower, 0, false, why);
    }

    if (n > 0 && (!st.girth || *st.girth >= 7)) {
        const double delta = static_cast<double>(g.max_degree());
        double best = std::numeric_limits<double>::infinity();
        std::size_t arg = 1;
        for (std::size_t k = 1; k <= 64; ++k) {
            const double v = 1 + (2 * delta + std::pow(2.0, static_cast<double>(k) - 3)) / static_cast<double>(k);
            if (v < best) {
                best = v;
                arg = k;
            }
        }
        add("large_girth_chi_f", T::chi_f, S::upper, best, true, "k = " + std::to_string(arg));
    } else {
        add("large_girth_chi_f", T::chi_f, S::upper, 0, false, "needs girth at least 7");
    }

    add("galtman_chi_v", T::chi_v, S::lower, has_edges ? 1 - l1 / ln : 0, has_edges, has_edges ? "" : "needs an edge");

    if (has_edges) {
        const InertiaEnergy ie = inertia_and_energies(g);
        const double sp = ie.s_plus, sm = ie.s_minus;
        add("guo_sapiro_chi_f", T::chi_f, S::lower, 1 + std::max(sp / sm, sm / sp), true);
        const double np = static_cast<double>(ie.n_plus), nm = static_cast<double>(ie.n_minus);
        add("inertial_chi", T::chi, S::lower, 1 + std::max(np / nm, nm / np), true);
        add("inertial_chi_f", T::chi_f, S::lower, 1 + std::max(np / nm, nm / np), ie.n_zero == 0,
            ie.n_zero == 0 ? "" : "needs a nonsingular adjacency matrix");
    } else {
        for (auto [id, t] : {std::pair{"guo_sapiro_chi_f", T::chi_f}, {"inertial_chi", T::chi}, {"inertial_chi_f", T::chi_f}})
            add(id, t, S::lower, 0, false, "needs an edge");
    }

    if (has_edges && st.connected) {
        const auto q = eigenvalues(g, MatrixKind::Q);  // descending
        const auto l = eigenvalues(g, MatrixKind::L);  // ascending
        const double nu1 = q.front(), nun = q.back(), mun = l.back();
        add("wocjan_chi_v", T::chi_v, S::lower, 1 + 2 * m / (2 * m - nn * nun), true);
        add("wocjan_chi_v_2", T::chi_v, S::lower, 1 + l1 / (l1 - nu1 + mun), true);
    } else {
        add("wocjan_chi_v", T::chi_v, S::lower, 0, false, "needs a connected graph with an edge");
        add("wocjan_chi_v_2", T::chi_v, S::lower, 0, false, "needs a connected graph with an edge");
    }

    if (theta) {
        const bool ok = n >= 2 && has_edges && !complete;
        const double ln_n = std::log(nn);
        auto from_theta = [&](double th_same, double th_other) {
            const double a = std::pow(nn, 3 / (th_other + 1)) / (10 * std::sqrt(ln_n));
            const double b = 2 * ln_n / std::log(16 * nn / th_same) - 1;
            return std::max(a, b);
        };
        const char* why = "needs a graph that is neither complete nor edgeless";
        add("alpha_from_theta", T::alpha, S::lower, ok ? from_theta(theta->theta_g, theta->theta_comp) : 0, ok, ok ? "" : why);
        add("omega_from_theta", T::omega, S::lower, ok ? from_theta(theta->theta_comp, theta->theta_g) : 0, ok, ok ? "" : why);
        add("chi_f_from_theta", T::chi_f, S::lower, theta->theta_comp, n > 0);
        const bool sp_ok = has_edges && theta->theta_comp > 1;
        add("surplus_from_theta", T::surplus, S::lower, sp_ok ? m / (std::numbers::pi * (theta->theta_comp - 1)) : 0, sp_ok,
            sp_ok ? "" : "needs an edge");
    }

    if (st.regular && n > 0) {
        const double d = static_cast<double>(deg.front());
        add("van_der_waerden_permanent", T::permanent, S::lower, std::exp(std::lgamma(nn + 1) + nn * std::log(d / nn)), d > 0,
            d > 0 ? "" : "needs an edge");
    } else {
        add("van_der_waerden_permanent", T::permanent, S::lower, 0, false, "needs a regular graph");
    }
    return rep;
}

std::string_view to_string(BoundTarget t) {
    switch (t) {
        case BoundTarget::alpha: return "alpha";
        case BoundTarget::omega: return "omega";
        case BoundTarget::chi: return "chi";
        case BoundTarget::chi_f: return "chi_f";
        case BoundTarget::chi_v: return "chi_v";
        case BoundTarget::theta: return "theta";
        case BoundTarget::surplus: return "surplus";
        case BoundTarget::permanent: return "permanent";
    }
    return "?";
}

nlohmann::json to_json(const ExactOrBound& v) {
    nlohmann::json j = {{"value", to_string(v.value)},
                        {"exact", v.exact},
                        {"lower", to_string(v.lower)},
                        {"upper", to_string(v.upper)},
                        {"elapsed_ms", v.elapsed_ms},
                        {"budget_hit", v.budget_hit},
                        {"witness", v.witness}};
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json j = {{"bound_id", e.id},
                            {"target", std::string(to_string(e.target))},
                            {"side", e.side == BoundSide::lower ? "lower" : "upper"},
                            {"applicable", e.applicable}};
        if (e.applicable) j["value"] = e.value;
        if (!e.detail.empty()) j[e.applicable ? "detail" : "precondition"] = e.detail;
        out.push_back(std::move(j));
    }
    return out;
}

nlohmann::json to_json(const CapacityReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"k", row.k}, {"alpha", to_json(row.alpha)}, {"root", row.root}});
    nlohmann::json j = {{"lower", r.lower},
                        {"lower_witness", {{"k", r.witness_k}, {"size", r.witness_size}}},
                        {"upper", r.upper},
                        {"self_complementary", r.self_complementary},
                        {"rows", rows}};
    if (r.self_complementary_upper) j["self_complementary_upper"] = *r.self_complementary_upper;
    return j;
}

}  // namespace thetakit
