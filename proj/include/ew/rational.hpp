#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ew {

struct ZeroDivision : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact rational number. Values whose lowest-terms numerator and denominator
// fit in 63 bits are stored inline; anything larger spills to a GMP rational.
// The representation is canonical: a value is big iff it does not fit inline,
// so equality never has to compare across representations.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design of the numeric tower
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_)
    {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o)
    {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
            else big_.reset();
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    bool is_big() const { return static_cast<bool>(big_); }
    int sign() const;

    mpq_class to_mpq() const;
    std::string to_string() const;
    std::size_t hash() const;

    // Valid only when !is_big().
    std::int64_t small_num() const { return num_; }
    std::int64_t small_den() const { return den_; }

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    static Rational from_wide(__int128 n, unsigned __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace ew

template <>
struct std::hash<ew::Rational> {
    std::size_t operator()(const ew::Rational& r) const noexcept { return r.hash(); }
};
