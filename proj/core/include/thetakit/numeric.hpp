#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thetakit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);  // "p/q", or "p" when integral
double to_double(const Rational& v);

BigInt isqrt(const BigInt& v);  // floor of the square root, v >= 0
bool is_square(const BigInt& v);
BigInt iroot(const BigInt& v, unsigned k);  // floor of the k-th root, v >= 0
BigInt floor(const Rational& v);
BigInt ceil(const Rational& v);

// Determinant of an n x n row-major integer matrix by fraction-free (Bareiss) elimination.
BigInt determinant(std::vector<BigInt> m, std::size_t n);

// Best rational approximation with denominator <= max_den, kept only when it lies within tol.
std::optional<Rational> snap_rational(double value, std::int64_t max_den, double tol);

// a + b * sqrt(radicand) with rational a, b and a nonnegative integer radicand.
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadSurd(Rational a, Rational b, BigInt radicand);
    static QuadSurd sqrt(const BigInt& radicand) { return QuadSurd(0, 1, radicand); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    const BigInt& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    double to_double() const;
    std::string to_string() const;

    int sign() const;
    BigInt floor() const;
    BigInt ceil() const;

    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator-(const QuadSurd& x) { return QuadSurd(-x.a_, -x.b_, x.d_, Reduced{}); }
    friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() == 0; }
    friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() <= 0; }

private:
    struct Reduced {};
    QuadSurd(Rational a, Rational b, BigInt radicand, Reduced);
    void normalize();
    static BigInt common_radicand(const QuadSurd& x, const QuadSurd& y);

    Rational a_ = 0, b_ = 0;
    BigInt d_ = 0;
};

}  // namespace thetakit
