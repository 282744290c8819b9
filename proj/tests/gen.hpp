#pragma once

// Hand-rolled generators for the property tests. Seeds are fixed so failures
// reproduce.

#include <cstdint>
#include <random>

#include "ew/linalg.hpp"
#include "ew/scalar.hpp"
#include "ew/tables.hpp"

namespace gen {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 g(0x5eed'2024'0b5e55ULL);
    return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline ew::Rational rational()
{
    switch (uniform(0, 9)) {
    case 0:
    case 1: return {};
    case 2: {
        // Large enough to spill into the arbitrary-precision path.
        ew::Rational big(uniform(1, INT64_MAX / 2), uniform(1, 1000));
        return big * ew::Rational(uniform(INT64_MAX / 4, INT64_MAX / 2));
    }
    default: return {uniform(-20, 20), uniform(1, 12)};
    }
}

inline ew::Scalar scalar() { return {rational(), rational(), rational(), rational()}; }

inline ew::Scalar nonzero_scalar()
{
    for (;;) {
        ew::Scalar s = scalar();
        if (!s.is_zero()) return s;
    }
}

/// Small rational entries, with a bias toward rank deficiency.
inline ew::ExactMatrix matrix(std::size_t rows, std::size_t cols)
{
    ew::ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = uniform(0, 2) == 0 ? ew::Scalar() : ew::Scalar::frac(uniform(-3, 3), uniform(1, 3));
    if (rows > 1 && uniform(0, 2) == 0) {
        // Copy a combination of two rows into a third.
        const auto a = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(rows) - 1));
        const auto b = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(rows) - 1));
        const auto t = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(rows) - 1));
        for (std::size_t c = 0; c < cols; ++c) m(t, c) = m(a, c) + ew::Scalar(2) * m(b, c);
    }
    return m;
}

inline ew::WeylWord word(int rank, std::size_t max_len)
{
    ew::WeylWord w(static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_len))));
    for (auto& l : w) l = static_cast<int>(uniform(1, rank));
    return w;
}

}  // namespace gen
