#include "thetakit/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace thetakit {

namespace mp = boost::multiprecision;

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
    if (mp::denominator(v) == 1) return mp::numerator(v).str();
    return mp::numerator(v).str() + "/" + mp::denominator(v).str();
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

BigInt isqrt(const BigInt& v) {
    if (v < 0) throw std::domain_error("isqrt of a negative number");
    return mp::sqrt(v);
}

bool is_square(const BigInt& v) {
    if (v < 0) return false;
    BigInt r = isqrt(v);
    return r * r == v;
}

BigInt iroot(const BigInt& v, unsigned k) {
    if (v < 0) throw std::domain_error("iroot of a negative number");
    if (k == 1 || v < 2) return v;
    // Bisection on [0, 2^(bits/k + 1)].
    BigInt lo = 0, hi = BigInt(1) << (static_cast<unsigned>(mp::msb(v)) / k + 1);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (mp::pow(mid, k) <= v) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

BigInt floor(const Rational& v) {
    BigInt q = mp::numerator(v) / mp::denominator(v);
    if (q * mp::denominator(v) > mp::numerator(v)) --q;
    return q;
}

BigInt ceil(const Rational& v) { return -floor(-v); }

BigInt determinant(std::vector<BigInt> m, std::size_t n) {
    if (n == 0) return 1;
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

std::optional<Rational> snap_rational(double value, std::int64_t max_den, double tol) {
    if (!std::isfinite(value)) return std::nullopt;
    // Continued-fraction convergents and semiconvergents.
    double x = value;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    std::optional<Rational> best;
    double best_err = tol;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(x);
        if (std::fabs(a) > 1e15) break;
        auto ai = static_cast<std::int64_t>(a);
        std::int64_t p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den) {
            std::int64_t t = (max_den - q0) / q1;
            std::int64_t ps = t * p1 + p0, qs = t * q1 + q0;
            if (qs > 0) {
                double err = std::fabs(value - static_cast<double>(ps) / static_cast<double>(qs));
                if (err <= best_err) best = Rational(ps, qs);
            }
            break;
        }
        double err = std::fabs(value - static_cast<double>(p2) / static_cast<double>(q2));
        if (err <= best_err) {
            best = Rational(p2, q2);
            best_err = err;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = x - a;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    return best;
}

QuadSurd::QuadSurd(Rational a, Rational b, BigInt radicand) : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
    if (d_ < 0) throw std::domain_error("negative radicand");
    if (b_ != 0 && d_ <= std::numeric_limits<std::uint64_t>::max()) {
        // Pull small square factors out of the radicand.
        auto d = d_.convert_to<std::uint64_t>();
        for (std::uint64_t p = 2; p * p <= d && p < 100000; ++p)
            while (d % (p * p) == 0) {
                d /= p * p;
                b_ *= p;
            }
        d_ = d;
    }
    normalize();
}

QuadSurd::QuadSurd(Rational a, Rational b, BigInt radicand, Reduced)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
    normalize();
}

void QuadSurd::normalize() {
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
        return;
    }
    if (is_square(d_)) {
        a_ += b_ * isqrt(d_);
        b_ = 0;
        d_ = 0;
    }
}

BigInt QuadSurd::common_radicand(const QuadSurd& x, const QuadSurd& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0 || x.d_ == y.d_) return x.d_;
    throw std::domain_error("quadratic surds with different radicands");
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    return QuadSurd(x.a_ + y.a_, x.b_ + y.b_, QuadSurd::common_radicand(x, y), QuadSurd::Reduced{});
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    BigInt d = QuadSurd::common_radicand(x, y);
    return QuadSurd(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d, QuadSurd::Reduced{});
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
    BigInt d = QuadSurd::common_radicand(x, y);
    Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
    if (norm == 0) throw std::domain_error("division by zero surd");
    QuadSurd conj(y.a_, -y.b_, d, QuadSurd::Reduced{});
    QuadSurd num = x * conj;
    return QuadSurd(num.a_ / norm, num.b_ / norm, d, QuadSurd::Reduced{});
}

int QuadSurd::sign() const {
    auto sgn = [](const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); };
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 against b^2 d.
    Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

BigInt QuadSurd::floor() const {
    if (is_rational()) return thetakit::floor(a_);
    auto guess = BigInt(static_cast<long long>(std::floor(to_double())));
    while (!(QuadSurd(Rational(guess)) <= *this)) --guess;
    while (QuadSurd(Rational(guess + 1)) <= *this) ++guess;
    return guess;
}

BigInt QuadSurd::ceil() const { return -(-*this).floor(); }

double QuadSurd::to_double() const {
    return thetakit::to_double(a_) + thetakit::to_double(b_) * std::sqrt(d_.convert_to<double>());
}

std::string QuadSurd::to_string() const {
    if (is_rational()) return thetakit::to_string(a_);
    std::string s;
    if (a_ != 0) s = thetakit::to_string(a_) + " + ";
    return s + "(" + thetakit::to_string(b_) + ")*sqrt(" + d_.str() + ")";
}

}  // namespace thetakit
