#include "thetakit/srg.hpp"

#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace mp = boost::multiprecision;

namespace {

std::string describe(const SrgParams& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

void require_feasible(const SrgParams& p) {
    auto f = srg_feasible(p);
    if (!f.feasible) throw ParameterError(describe(p) + " is not feasible: " + f.violations.front());
}

BigInt ipow(std::int64_t base, std::int64_t e) { return mp::pow(BigInt(base), static_cast<unsigned>(e)); }

std::int64_t to_i64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw ParameterError("parameter exceeds 64-bit range");
    return v.convert_to<std::int64_t>();
}

}  // namespace

SrgFeasibility srg_feasible(const SrgParams& p) {
    SrgFeasibility f;
    auto fail = [&](std::string why) { f.violations.push_back(std::move(why)); };
    const auto [n, d, l, m] = p;
    if (n < 0 || d < 0 || l < 0 || m < 0) fail("parameters must be nonnegative");
    if (!(0 < d && d < n - 1)) fail("requires 0 < d < n - 1");
    if ((n - d - 1) * m != d * (d - l - 1)) fail("identity (n-d-1) mu = d (d-lambda-1) fails");
    if (f.violations.empty()) {
        const std::int64_t disc = (l - m) * (l - m) + 4 * (d - m);
        const std::int64_t num = 2 * d + (n - 1) * (l - m);
        if (disc <= 0) {
            fail("t must be positive");
        } else if (num == 0) {
            if ((n - 1) % 2 != 0) fail("balanced multiplicities need n odd");
        } else if (!is_square(disc)) {
            fail("t is irrational while 2d + (n-1)(lambda-mu) != 0");
        } else {
            const auto t = isqrt(disc).convert_to<std::int64_t>();
            const std::int64_t a = (n - 1) * t - num, b = (n - 1) * t + num;
            if (a % (2 * t) != 0 || b % (2 * t) != 0) fail("eigenvalue multiplicities are not integers");
            else if (a < 0 || b < 0) fail("eigenvalue multiplicities are negative");
        }
    }
    f.feasible = f.violations.empty();
    return f;
}

QuadSurd srg_t(const SrgParams& p) {
    return QuadSurd::sqrt(BigInt((p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.d - p.mu)));
}

SrgSpectrum srg_spectrum(const SrgParams& p) {
    require_feasible(p);
    SrgSpectrum s;
    s.d = p.d;
    const QuadSurd t = srg_t(p);
    const Rational half(1, 2);
    s.r = (QuadSurd(Rational(p.lambda - p.mu)) + t) * QuadSurd(half);
    s.s = (QuadSurd(Rational(p.lambda - p.mu)) - t) * QuadSurd(half);
    const std::int64_t num = 2 * p.d + (p.n - 1) * (p.lambda - p.mu);
    if (num == 0) {
        s.conference = true;
        s.m_r = s.m_s = (p.n - 1) / 2;
    } else {
        const auto ti = t.rational_part();  // t is an integer here
        const auto tv = mp::numerator(ti).convert_to<std::int64_t>();
        s.m_r = ((p.n - 1) * tv - num) / (2 * tv);
        s.m_s = ((p.n - 1) * tv + num) / (2 * tv);
    }
    return s;
}

SrgParams srg_complement(const SrgParams& p) {
    return {p.n, p.n - p.d - 1, p.n - 2 * p.d + p.mu - 2, p.n - 2 * p.d + p.lambda};
}

SrgTheta srg_theta(const SrgParams& p) {
    require_feasible(p);
    const QuadSurd t = srg_t(p);
    const QuadSurd base = t + QuadSurd(Rational(p.mu - p.lambda));
    SrgTheta th;
    th.theta_g = QuadSurd(Rational(p.n)) * base / (QuadSurd(Rational(2 * p.d)) + base);
    th.theta_comp = QuadSurd(Rational(1)) + QuadSurd(Rational(2 * p.d)) / base;
    return th;
}

SrgBounds srg_bounds(const SrgParams& p) {
    const SrgTheta th = srg_theta(p);
    const QuadSurd ratio = th.theta_comp - QuadSurd(Rational(1));  // 2d / (t + mu - lambda)
    SrgBounds b;
    b.alpha_upper = th.theta_g.floor();
    b.alpha_f_lower = th.theta_g;
    b.omega_upper = 1 + ratio.floor();
    b.omega_f_lower = th.theta_comp;
    b.chi_lower = 1 + ratio.ceil();
    b.chi_f_lower = th.theta_comp;
    b.chi_comp_lower = th.theta_g.ceil();
    b.chi_f_comp_lower = th.theta_g;
    return b;
}

SrgVectorChromatic srg_vector_chromatic(const SrgParams& p) {
    const SrgTheta th = srg_theta(p);
    return {th.theta_comp, th.theta_g};
}

bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;
}

SrgFamilyParams family_params(const SrgFamily& family) {
    SrgFamilyParams out;
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, srg_family::LatinSquare>) {
                if (f.n < 2 || f.m < 2 || f.m > f.n + 1) throw ParameterError("Latin square parameters need 2 <= m <= n + 1");
                if (f.m == f.n + 1) {
                    out.complete_order = f.n * f.n;
                    return;
                }
                out.params = SrgParams{f.n * f.n, f.m * (f.n - 1), f.m * f.m - 3 * f.m + f.n, f.m * (f.m - 1)};
            } else if constexpr (std::is_same_v<T, srg_family::Symplectic>) {
                if (f.n < 1) throw ParameterError("symplectic graphs need n >= 1");
                if (!is_prime_power(f.q)) throw ParameterError("symplectic graphs need q to be a prime power");
                const BigInt q = f.q;
                const BigInt v = (ipow(f.q, 2 * f.n) - 1) / (q - 1);
                const BigInt mu = (ipow(f.q, 2 * f.n - 2) - 1) / (q - 1);
                out.params = SrgParams{to_i64(v), to_i64(q * mu), to_i64(mu - 2), to_i64(mu)};
            } else if constexpr (std::is_same_v<T, srg_family::Conference>) {
                if (f.n < 5 || f.n % 4 != 1) throw ParameterError("conference parameters need n = 1 mod 4, n >= 5");
                out.params = SrgParams{f.n, (f.n - 1) / 2, (f.n - 5) / 4, (f.n - 1) / 4};
            } else {
                if (!is_prime_power(f.q) || f.q % 4 != 1) throw ParameterError("Paley graphs need a prime power q = 1 mod 4");
                out.params = SrgParams{f.q, (f.q - 1) / 2, (f.q - 5) / 4, (f.q - 1) / 4};
            }
        },
        family);
    return out;
}

bool sum_two_squares(std::int64_t n) {
    if (n < 1) throw ParameterError("sum_two_squares needs n >= 1");
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (p % 4 == 3 && e % 2 == 1) return false;
    }
    return n % 4 != 3;
}

bool sc_vt_exists(std::int64_t n) { return n % 4 == 1 && sum_two_squares(n); }

LatinCountBounds latin_square_count_bounds(std::int64_t n) {
    if (n < 1) throw ParameterError("Latin square counts need n >= 1");
    if (n > 40) throw SizeRefusal("Latin square count bounds are evaluated for n <= 40");
    using BigFloat = mp::number<mp::cpp_bin_float<2000>>;
    LatinCountBounds out;
    BigInt fact = 1;
    for (std::int64_t k = 2; k <= n; ++k) fact *= k;
    out.lower = Rational(mp::pow(fact, static_cast<unsigned>(2 * n)), ipow(n, n * n));

    // prod_k (k!)^(n/k): the integral part of each exponent exactly, the fractional part in floating point.
    BigInt whole = 1;
    BigFloat frac = 1;
    bool integral = true;
    BigInt kf = 1;
    for (std::int64_t k = 1; k <= n; ++k) {
        kf *= k;
        whole *= mp::pow(kf, static_cast<unsigned>(n / k));
        if (n % k != 0 && kf > 1) {
            integral = false;
            frac *= mp::pow(BigFloat(kf), BigFloat(n % k) / BigFloat(k));
        }
    }
    if (integral) {
        out.upper_ceil = whole;
        out.upper_is_integer = true;
        out.upper_decimal = whole.str();
        return out;
    }
    BigFloat u = BigFloat(whole) * frac;
    BigFloat c = mp::ceil(u);
    out.upper_ceil = c.convert_to<BigInt>();
    out.upper_decimal = u.str(40, std::ios_base::scientific);
    return out;
}

nlohmann::json to_json(const SrgParams& p) {
    return {{"n", p.n}, {"d", p.d}, {"lambda", p.lambda}, {"mu", p.mu}};
}

nlohmann::json srg_summary_json(const SrgParams& p) {
    nlohmann::json j = to_json(p);
    auto f = srg_feasible(p);
    j["feasible"] = f.feasible;
    if (!f.feasible) {
        j["violations"] = f.violations;
        return j;
    }
    auto sp = srg_spectrum(p);
    auto th = srg_theta(p);
    auto b = srg_bounds(p);
    j["spectrum"] = {{"d", sp.d},
                     {"r", sp.r.to_string()},
                     {"s", sp.s.to_string()},
                     {"m_r", sp.m_r},
                     {"m_s", sp.m_s},
                     {"conference", sp.conference}};
    j["complement"] = to_json(srg_complement(p));
    j["theta"] = {{"exact", th.theta_g.to_string()}, {"value", th.theta_g.to_double()}};
    j["theta_complement"] = {{"exact", th.theta_comp.to_string()}, {"value", th.theta_comp.to_double()}};
    j["bounds"] = {{"alpha_upper", b.alpha_upper.str()},
                   {"omega_upper", b.omega_upper.str()},
                   {"chi_lower", b.chi_lower.str()},
                   {"chi_complement_lower", b.chi_comp_lower.str()},
                   {"alpha_f_lower", b.alpha_f_lower.to_double()},
                   {"omega_f_lower", b.omega_f_lower.to_double()},
                   {"chi_f_lower", b.chi_f_lower.to_double()},
                   {"chi_f_complement_lower", b.chi_f_comp_lower.to_double()}};
    return j;
}

std::string srg_table_csv(std::span<const SrgParams> rows) {
    std::ostringstream os;
    os << "n,d,lambda,mu,feasible,theta,theta_complement\n";
    for (const auto& p : rows) {
        os << p.n << ',' << p.d << ',' << p.lambda << ',' << p.mu << ',';
        if (!srg_feasible(p).feasible) {
            os << "false,,\n";
            continue;
        }
        auto th = srg_theta(p);
        os << "true," << th.theta_g.to_string() << ',' << th.theta_comp.to_string() << '\n';
    }
    return os.str();
}

}  // namespace thetakit
