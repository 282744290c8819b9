#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ew/rational.hpp"

namespace ew {

/// An exact element a + b*sqrt2 + c*sqrt3 + d*sqrt6 of Q(sqrt2, sqrt3).
///
/// {1, sqrt2, sqrt3, sqrt6} is a Q-basis, so two scalars are equal exactly
/// when their four rational coordinates agree. No ordering is defined; code
/// that needs a sign looks at the rational coordinate explicitly.
class Scalar {
public:
    enum Basis { kOne = 0, kSqrt2 = 1, kSqrt3 = 2, kSqrt6 = 3 };

    Scalar() = default;
    Scalar(std::int64_t v) : c_{Rational(v), {}, {}, {}} {}  // NOLINT
    Scalar(Rational v) : c_{std::move(v), {}, {}, {}} {}      // NOLINT
    Scalar(Rational a, Rational b, Rational c, Rational d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static Scalar sqrt2() { return {0, 1, 0, 0}; }
    static Scalar sqrt3() { return {0, 0, 1, 0}; }
    static Scalar sqrt6() { return {0, 0, 0, 1}; }
    static Scalar frac(std::int64_t n, std::int64_t d) { return Scalar(Rational(n, d)); }

    /// Accepts "p/q + r/s*sqrt2 + t/u*sqrt3 + v/w*sqrt6" with zero terms
    /// omitted, in any order, with "-" in place of "+ -" and an implicit 1
    /// coefficient allowed ("sqrt3", "-1/2*sqrt2"). "0" is zero.
    static Scalar parse(std::string_view text);
    std::string to_string() const;

    const Rational& coeff(Basis b) const { return c_[b]; }
    const Rational& rational_part() const { return c_[kOne]; }

    bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    bool is_one() const { return c_[0].is_one() && is_rational(); }

    /// Throws ZeroDivision on zero.
    Scalar inverse() const;
    /// Galois conjugates: flip the sign of sqrt2 (resp. sqrt3).
    Scalar conj2() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }
    Scalar conj3() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }

    Scalar operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }
    Scalar& operator+=(const Scalar& y);
    Scalar& operator-=(const Scalar& y);
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.c_ == y.c_; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    std::size_t hash() const;

private:
    std::array<Rational, 4> c_;
};

using Vec = std::vector<Scalar>;

Scalar dot(const Vec& x, const Vec& y);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(const Scalar& s, const Vec& x);
std::string to_string(const Vec& v);
std::size_t hash_vec(const Vec& v);

struct VecHash {
    std::size_t operator()(const Vec& v) const noexcept { return hash_vec(v); }
};

}  // namespace ew

template <>
struct std::hash<ew::Scalar> {
    std::size_t operator()(const ew::Scalar& s) const noexcept { return s.hash(); }
};
