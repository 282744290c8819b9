#include "ew/scalar.hpp"

#include <cctype>

namespace ew {

namespace {

// Products of basis surds: sqrt_i * sqrt_j = factor * sqrt_k.
struct Mul {
    int target;
    int factor;
};
constexpr Mul kTable[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, 2}, {3, 1}, {2, 2}},
    {{2, 1}, {3, 1}, {0, 3}, {1, 3}},
    {{3, 1}, {2, 2}, {1, 3}, {0, 6}},
};

const char* kSurdName[4] = {"", "sqrt2", "sqrt3", "sqrt6"};

}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y)
{
    Scalar r = x;
    r += y;
    return r;
}

Scalar operator-(const Scalar& x, const Scalar& y)
{
    Scalar r = x;
    r -= y;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& y)
{
    for (int i = 0; i < 4; ++i)
        if (!y.c_[i].is_zero()) c_[i] += y.c_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& y)
{
    for (int i = 0; i < 4; ++i)
        if (!y.c_[i].is_zero()) c_[i] -= y.c_[i];
    return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y)
{
    Scalar r;
    for (int i = 0; i < 4; ++i) {
        if (x.c_[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (y.c_[j].is_zero()) continue;
            const Mul m = kTable[i][j];
            Rational p = x.c_[i] * y.c_[j];
            if (m.factor != 1) p *= Rational(m.factor);
            r.c_[m.target] += p;
        }
    }
    return r;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw ZeroDivision("inverse of zero scalar");
    if (is_rational()) return Scalar(c_[0].inverse());
    // x * conj3(x) lies in Q(sqrt2); multiplying by its sqrt2-conjugate lands in Q.
    Scalar num = conj3();
    Scalar t = *this * num;
    Scalar t2 = t.conj2();
    num = num * t2;
    Rational norm = (t * t2).c_[0];
    Rational inv = norm.inverse();
    for (auto& c : num.c_) c *= inv;
    return num;
}

std::size_t Scalar::hash() const
{
    std::size_t h = 0;
    for (const auto& c : c_) h = h * 1000003ULL ^ c.hash();
    return h;
}

std::string Scalar::to_string() const
{
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i < 4; ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + "*";
            out += kSurdName[i];
        }
    }
    return out;
}

Scalar Scalar::parse(std::string_view text)
{
    const std::string s(text);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip_ws();
    if (pos == s.size()) throw ParseError("empty scalar");

    Scalar out;
    bool seen[4] = {false, false, false, false};
    bool first = true;
    while (pos < s.size()) {
        bool neg = false;
        if (s[pos] == '+' || s[pos] == '-') {
            neg = s[pos] == '-';
            ++pos;
            skip_ws();
            // "a + -b" is accepted as well as "a - b".
            if (!first && pos < s.size() && s[pos] == '-') {
                neg = !neg;
                ++pos;
            }
        } else if (!first) {
            throw ParseError("expected '+' or '-' in '" + s + "'");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-' && !std::isspace(static_cast<unsigned char>(s[end])))
            ++end;
        std::string_view term(s.data() + pos, end - pos);
        if (term.empty()) throw ParseError("empty term in '" + s + "'");
        int basis = 0;
        Rational coeff(1);
        auto star = term.find('*');
        std::string_view surd = term;
        if (star != std::string_view::npos) {
            coeff = Rational::parse(term.substr(0, star));
            surd = term.substr(star + 1);
        }
        if (surd.rfind("sqrt", 0) == 0) {
            if (surd == "sqrt2") basis = 1;
            else if (surd == "sqrt3") basis = 2;
            else if (surd == "sqrt6") basis = 3;
            else throw ParseError("unknown surd '" + std::string(surd) + "'");
        } else if (star != std::string_view::npos) {
            throw ParseError("expected surd after '*' in '" + s + "'");
        } else {
            coeff = Rational::parse(term);
        }
        if (seen[basis]) throw ParseError("repeated basis term in '" + s + "'");
        seen[basis] = true;
        out.c_[basis] = neg ? -coeff : coeff;
        pos = end;
        skip_ws();
        first = false;
    }
    return out;
}

Scalar dot(const Vec& x, const Vec& y)
{
    Scalar r;
    const std::size_t n = x.size() < y.size() ? x.size() : y.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) r += x[i] * y[i];
    return r;
}

Vec operator+(const Vec& x, const Vec& y)
{
    Vec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

Vec operator-(const Vec& x, const Vec& y)
{
    Vec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

Vec operator*(const Scalar& s, const Vec& x)
{
    Vec r;
    r.reserve(x.size());
    for (const auto& v : x) r.push_back(s * v);
    return r;
}

std::string to_string(const Vec& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

std::size_t hash_vec(const Vec& v)
{
    std::size_t h = v.size();
    for (const auto& x : v) h = h * 0x100000001b3ULL ^ x.hash();
    return h;
}

}  // namespace ew
