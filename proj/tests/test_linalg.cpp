#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "ew/linalg.hpp"
#include "ew/root_system.hpp"
#include "ew/tables.hpp"
#include "ew/weyl.hpp"
#include "gen.hpp"

using ew::ExactMatrix;
using ew::Scalar;
using ew::Vec;

namespace {

// Cofactor expansion along the first row.
Scalar det(const ExactMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Scalar s;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        Scalar t = m(0, j) * det(minor);
        s = j % 2 ? s - t : s + t;
    }
    return s;
}

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == k) return f(idx);
        for (std::size_t i = from; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

// Largest k with a nonzero k x k minor.
std::size_t rank_by_minors(const ExactMatrix& m)
{
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        bool found = false;
        subsets(m.rows(), k, [&](const auto& rows) {
            if (found) return;
            subsets(m.cols(), k, [&](const auto& cols) {
                if (found) return;
                ExactMatrix s(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) s(i, j) = m(rows[i], cols[j]);
                found = !det(s).is_zero();
            });
        });
        if (found) return k;
    }
    return 0;
}

ExactMatrix id_minus(const ExactMatrix& w)
{
    ExactMatrix a = ExactMatrix::identity(w.rows());
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) a(i, j) -= w(i, j);
    return a;
}

}  // namespace

TEST_CASE("echelon examples")
{
    CHECK(ew::echelon(ExactMatrix(6, 6)).rank == 0);
    auto e6 = ew::build_root_system(ew::FactorType::e6());
    CHECK(ew::echelon(id_minus(ew::simple_reflection(e6, 6))).rank == 1);
}

TEST_CASE("echelon is reduced and matches the minor oracle")
{
    for (int i = 0; i < 1000; ++i) {
        const auto rows = static_cast<std::size_t>(gen::uniform(1, 5));
        const auto cols = static_cast<std::size_t>(gen::uniform(1, 5));
        ExactMatrix m = gen::matrix(rows, cols);
        auto e = ew::echelon(m);
        REQUIRE(e.rank == rank_by_minors(m));
        REQUIRE(e.pivot_cols.size() == e.rank);
        for (std::size_t r = 0; r < e.rank; ++r) {
            REQUIRE(e.matrix(r, e.pivot_cols[r]) == Scalar(1));
            for (std::size_t o = 0; o < rows; ++o)
                if (o != r) REQUIRE(e.matrix(o, e.pivot_cols[r]).is_zero());
        }
        for (std::size_t r = e.rank; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) REQUIRE(e.matrix(r, c).is_zero());
    }
}

TEST_CASE("tracked transform reproduces the echelon form")
{
    for (int i = 0; i < 300; ++i) {
        ExactMatrix m = gen::matrix(static_cast<std::size_t>(gen::uniform(1, 5)), static_cast<std::size_t>(gen::uniform(1, 5)));
        auto t = ew::echelon_tracked(m);
        REQUIRE(t.transform * m == t.form.matrix);
        REQUIRE(ew::echelon(m).matrix == t.form.matrix);
    }
}

TEST_CASE("augment agrees with a fresh elimination")
{
    for (int i = 0; i < 500; ++i) {
        const auto rows = static_cast<std::size_t>(gen::uniform(1, 5));
        ExactMatrix m = gen::matrix(rows, static_cast<std::size_t>(gen::uniform(1, 5)));
        Vec b(rows);
        if (gen::uniform(0, 1)) {
            Vec x(m.cols());
            for (auto& v : x) v = Scalar::frac(gen::uniform(-3, 3), gen::uniform(1, 2));
            b = m.apply(x);
        } else {
            for (auto& v : b) v = Scalar::frac(gen::uniform(-3, 3), 1);
        }
        auto fresh = ew::echelon(m.with_column(b));
        auto inc = ew::augment(ew::echelon_tracked(m), b);
        REQUIRE(inc.rank == fresh.rank);
        REQUIRE(inc.pivot_cols == fresh.pivot_cols);
        REQUIRE(inc.matrix == fresh.matrix);
    }
}

TEST_CASE("rank_with_row")
{
    ExactMatrix z(3, 3);
    auto ez = ew::echelon(z);
    Vec r{Scalar(1), Scalar(0), Scalar::sqrt2()};
    CHECK(ew::rank_with_row(ez, r) == 1);
    CHECK(ew::rank_with_row(ez, Vec(3)) == 0);
    CHECK_THROWS_AS(ew::rank_with_row(ez, Vec(2)), ew::DimensionMismatch);

    for (int i = 0; i < 1000; ++i) {
        const auto rows = static_cast<std::size_t>(gen::uniform(1, 5));
        const auto cols = static_cast<std::size_t>(gen::uniform(1, 5));
        ExactMatrix m = gen::matrix(rows, cols);
        auto e = ew::echelon(m);
        Vec row(cols);
        if (gen::uniform(0, 1)) {
            // A combination of existing rows stays in the row space.
            for (std::size_t k = 0; k < rows; ++k) {
                Scalar c = Scalar::frac(gen::uniform(-2, 2), 1);
                for (std::size_t j = 0; j < cols; ++j) row[j] += c * m(k, j);
            }
            REQUIRE(ew::rank_with_row(e, row) == e.rank);
        } else {
            for (auto& v : row) v = Scalar::frac(gen::uniform(-3, 3), 1);
        }
        const std::size_t got = ew::rank_with_row(e, row);
        REQUIRE((got == e.rank || got == e.rank + 1));
        REQUIRE(got == rank_by_minors(m.with_row(row)));
    }
}

TEST_CASE("sample_solution")
{
    // Unique solution of a full-rank square system.
    ExactMatrix a = ExactMatrix::from_rows({{Scalar(2), Scalar(1)}, {Scalar(1), Scalar::sqrt3()}});
    Vec b{Scalar(1), Scalar(0)};
    auto s = ew::sample_solution(ew::echelon(a.with_column(b)));
    REQUIRE(s);
    CHECK(a.apply(*s) == b);

    ExactMatrix sing = ExactMatrix::from_rows({{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}});
    CHECK_FALSE(ew::sample_solution(ew::echelon(sing.with_column({Scalar(1), Scalar(3)}))));

    for (int i = 0; i < 1000; ++i) {
        const auto rows = static_cast<std::size_t>(gen::uniform(1, 5));
        ExactMatrix m = gen::matrix(rows, static_cast<std::size_t>(gen::uniform(1, 5)));
        Vec b(rows);
        for (auto& v : b) v = Scalar::frac(gen::uniform(-3, 3), 1);
        auto aug = ew::echelon(m.with_column(b));
        auto x = ew::sample_solution(aug);
        const bool consistent = ew::echelon(m).rank == aug.rank;
        REQUIRE(x.has_value() == consistent);
        if (x) REQUIRE(m.apply(*x) == b);
        for (const auto& k : ew::kernel_basis(ew::echelon(m))) REQUIRE(m.apply(k) == Vec(rows));
    }
}

TEST_CASE("reflection identity forces the alpha6 pairing")
{
    auto rs = ew::build_root_system(ew::FactorType::e6());
    const ew::Root& a6 = rs.simple_roots[5];
    ExactMatrix a = id_minus(ew::simple_reflection(rs, 6));
    auto aug = ew::augment(ew::echelon_tracked(a), a6.vec);
    Vec row = a6.coroot;
    row.emplace_back(1);
    CHECK(ew::rank_with_row(aug, row) == aug.rank);
    auto lam = ew::sample_solution(aug);
    REQUIRE(lam);
    CHECK(ew::pairing(*lam, a6) == Scalar(1));
}
