#include "ew/rational.hpp"

#include <cctype>
#include <climits>
#include <numeric>

namespace ew {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = INT64_MAX;

u128 gcd128(u128 a, u128 b)
{
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0)
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t uabs(std::int64_t v) { return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v); }

mpz_class mpz_from_u128(u128 v)
{
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
    hi <<= 64;
    hi += static_cast<unsigned long>(static_cast<std::uint64_t>(v));
    return hi;
}

bool fits_small(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN; }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0) throw ZeroDivision("rational with zero denominator");
    *this = from_wide(d < 0 ? -static_cast<i128>(n) : static_cast<i128>(n), uabs(d));
}

Rational::Rational(const mpq_class& q)
{
    mpq_class c(q);
    c.canonicalize();
    if (fits_small(c.get_num()) && fits_small(c.get_den())) {
        num_ = c.get_num().get_si();
        den_ = c.get_den().get_si();
    } else {
        big_ = std::make_unique<mpq_class>(std::move(c));
    }
}

Rational Rational::from_wide(i128 n, u128 d)
{
    if (n == 0) return Rational();
    u128 an = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
    u128 g = gcd128(an, d);
    if (g != 1) {
        an /= g;
        d /= g;
    }
    if (an <= static_cast<u128>(kMax) && d <= static_cast<u128>(kMax)) {
        Rational r;
        r.num_ = n < 0 ? -static_cast<std::int64_t>(an) : static_cast<std::int64_t>(an);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpz_class zn = mpz_from_u128(an);
    if (n < 0) zn = -zn;
    return Rational(mpq_class(zn, mpz_from_u128(d)));
}

mpq_class Rational::to_mpq() const
{
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

bool Rational::is_integer() const
{
    if (big_) return big_->get_den() == 1;
    return den_ == 1;
}

int Rational::sign() const
{
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

std::string Rational::to_string() const
{
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const
{
    if (big_) return std::hash<std::string>{}(big_->get_str());
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational Rational::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto is_int = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = trim(text.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
    if (!is_int(num, true) || !is_int(den, false)) throw ParseError("malformed rational '" + std::string(text) + "'");
    std::string ns(num);
    if (!ns.empty() && ns.front() == '+') ns.erase(0, 1);
    mpz_class zn(ns, 10);
    mpz_class zd(std::string(den), 10);
    if (zd == 0) throw ZeroDivision("rational with zero denominator");
    return Rational(mpq_class(zn, zd));
}

Rational Rational::operator-() const
{
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero()) throw ZeroDivision("inverse of zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = static_cast<std::int64_t>(uabs(num_));
    return r;
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != INT64_MIN) return Rational(s);
    }
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_));
    if (g == 1) {
        i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
        u128 d = static_cast<u128>(a.den_) * static_cast<u128>(b.den_);
        return Rational::from_wide(n, d);
    }
    const std::int64_t ad = a.den_ / static_cast<std::int64_t>(g);
    const std::int64_t bd = b.den_ / static_cast<std::int64_t>(g);
    i128 t = static_cast<i128>(a.num_) * bd + static_cast<i128>(b.num_) * ad;
    return Rational::from_wide(t, static_cast<u128>(ad) * static_cast<u128>(b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    if (a.is_zero() || b.is_zero()) return Rational();
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t p;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != INT64_MIN) return Rational(p);
    }
    const std::uint64_t g1 = std::gcd(uabs(a.num_), static_cast<std::uint64_t>(b.den_));
    const std::uint64_t g2 = std::gcd(uabs(b.num_), static_cast<std::uint64_t>(a.den_));
    const std::int64_t an = a.num_ / static_cast<std::int64_t>(g1);
    const std::int64_t bn = b.num_ / static_cast<std::int64_t>(g2);
    const std::int64_t ad = a.den_ / static_cast<std::int64_t>(g2);
    const std::int64_t bd = b.den_ / static_cast<std::int64_t>(g1);
    std::int64_t n, d;
    if (!__builtin_mul_overflow(an, bn, &n) && n != INT64_MIN && !__builtin_mul_overflow(ad, bd, &d)) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }
    return Rational::from_wide(static_cast<i128>(an) * bn, static_cast<u128>(ad) * static_cast<u128>(bd));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) return false;
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

}  // namespace ew
