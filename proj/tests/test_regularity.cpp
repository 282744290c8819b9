#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ew/regularity.hpp"
#include "ew/weyl.hpp"
#include "gen.hpp"

using ew::CharacterRep;
using ew::FactorType;
using ew::OrbitKind;
using ew::Scalar;
using ew::Vec;

namespace {

std::vector<FactorType> factors()
{
    return {FactorType::a(1, 1), FactorType::a(3, 2), FactorType::a(4, 1), FactorType::b(2), FactorType::b(3),
            FactorType::c(3),    FactorType::d_r(4),  FactorType::d_h(4), FactorType::d_h(5), FactorType::e6(),
            FactorType::e7()};
}

// Small integer combination of the simple roots plus a multiple of lambda0.
Vec random_weight(const ew::RootSystem& rs, int spread)
{
    Vec v = Scalar::frac(gen::uniform(-2 * spread, 2 * spread), 2) * rs.lambda0;
    for (const auto& s : rs.simple_roots) v = v + Scalar(gen::uniform(-spread, spread)) * s.vec;
    return v;
}

Vec random_image(const ew::RootSystem& rs, const Vec& v, const std::vector<int>& gens)
{
    if (gens.empty()) return v;
    ew::WeylWord w(static_cast<std::size_t>(gen::uniform(0, 25)));
    for (auto& l : w) l = gens[static_cast<std::size_t>(gen::uniform(0, static_cast<std::int64_t>(gens.size()) - 1))];
    return ew::apply_word(rs, w, v);
}

// W carries the n^std coroots onto every coroot of the same length, so the
// orbit condition is a condition on lambda against all roots.
bool g_regular_by_roots(const ew::RootSystem& rs, const Vec& lambda)
{
    for (const auto& r : rs.all_roots)
        if (ew::forbidden(r, ew::pairing(lambda, r))) return false;
    return true;
}

void check_witness(const ew::RootSystem& rs, const ew::RegularityVerdict& v, const Vec& shift)
{
    REQUIRE_FALSE(v.regular);
    REQUIRE(v.witness);
    const auto& r = rs.nstd_roots.at(static_cast<std::size_t>(v.witness->root));
    CHECK(ew::pairing(v.witness->element + shift, r) == v.witness->value);
    CHECK(ew::forbidden(r, v.witness->value));
}

}  // namespace

TEST_CASE("forbidden values")
{
    auto b2 = ew::build_root_system(FactorType::b(2));
    for (const auto& r : b2.nstd_roots) {
        CHECK(ew::forbidden(r, Scalar(1)));
        CHECK(ew::forbidden(r, Scalar(2)) == r.shorter);
        CHECK_FALSE(ew::forbidden(r, Scalar(0)));
        CHECK_FALSE(ew::forbidden(r, Scalar(-1)));
        CHECK_FALSE(ew::forbidden(r, Scalar(3)));
        CHECK_FALSE(ew::forbidden(r, Scalar(1) + Scalar::sqrt2()));
    }
}

TEST_CASE("shift values")
{
    auto e6 = ew::build_root_system(FactorType::e6());
    Vec s6(6);
    s6[5] = Scalar(4) * Scalar::sqrt3();
    CHECK(ew::det_nstd_half_shift(e6) == s6);
    CHECK(s6 == Scalar(6) * e6.lambda0);
    auto e7 = ew::build_root_system(FactorType::e7());
    Vec s7(7);
    s7[0] = Scalar(9);
    s7[6] = Scalar::frac(9, 2) * Scalar::sqrt2();
    CHECK(ew::det_nstd_half_shift(e7) == s7);
    CHECK(s7 == Scalar(9) * e7.lambda0);
    CHECK(ew::det_nstd_half_shift(ew::build_root_system(FactorType::b(2))) == Vec{Scalar::frac(3, 2), Scalar(0)});

    for (const auto& f : factors()) {
        CAPTURE(f.name());
        auto rs = ew::build_root_system(f);
        Vec d = ew::det_nstd_half_shift(rs) - Scalar::frac(rs.dual_coxeter, 2) * rs.lambda0;
        for (const auto& x : d) CHECK(x == (f.family == ew::Family::A ? d.front() : Scalar(0)));
    }
}

TEST_CASE("zero weight is regular everywhere")
{
    for (const auto& f : factors()) {
        CAPTURE(f.name());
        auto rs = ew::build_root_system(f);
        auto g = ew::is_g_regular(rs, {Vec(rs.dim), OrbitKind::G});
        CHECK(g.regular);
        CHECK(g.orbit_size == 1);
        // m-character whose shifted weight is zero.
        auto m = ew::is_m_regular(rs, {Scalar(-1) * ew::det_nstd_half_shift(rs), OrbitKind::M});
        CHECK(m.regular);
    }
}

TEST_CASE("B(2) m-regularity examples")
{
    auto rs = ew::build_root_system(FactorType::b(2));
    const Vec shift = ew::det_nstd_half_shift(rs);
    // Shifted weight (1, 0).
    auto v = ew::is_m_regular(rs, {Vec{Scalar::frac(-1, 2), Scalar(0)}, OrbitKind::M});
    check_witness(rs, v, shift);
    // Both (e1+e2, 1) and (e1, 2) are valid witnesses at the shifted weight itself.
    const Vec shifted{Scalar(1), Scalar(0)};
    for (const auto& r : rs.nstd_roots) {
        if (r.vec == Vec{Scalar(1), Scalar(1)}) CHECK(ew::pairing(shifted, r) == Scalar(1));
        if (r.vec == Vec{Scalar(1), Scalar(0)}) CHECK(ew::pairing(shifted, r) == Scalar(2));
    }
}

TEST_CASE("B(2) weight with large pairings is g-regular")
{
    auto rs = ew::build_root_system(FactorType::b(2));
    auto v = ew::is_g_regular(rs, {Vec{Scalar(3), Scalar(0)}, OrbitKind::G});
    CHECK(v.regular);
    CHECK(v.orbit_size == 4);
}

TEST_CASE("minuscule weights are not g-regular")
{
    for (const auto& f : {FactorType::e6(), FactorType::e7()}) {
        auto rs = ew::build_root_system(f);
        auto v = ew::is_g_regular(rs, {rs.lambda0, OrbitKind::G});
        check_witness(rs, v, Vec(rs.dim));
        // lambda0 already pairs to 1 with every n^std coroot.
        CHECK(v.witness->element == rs.lambda0);
    }
}

TEST_CASE("orbit cap")
{
    auto rs = ew::build_root_system(FactorType::e6());
    Vec v{Scalar(10), Scalar(20), Scalar(30), Scalar(40), Scalar(50), Scalar(1000) * Scalar::sqrt3()};
    CHECK_THROWS_AS(ew::is_g_regular(rs, {v, OrbitKind::G}, 10), ew::OrbitBudgetExceeded);
    auto full = ew::is_g_regular(rs, {v, OrbitKind::G});
    CHECK(full.regular);
    CHECK(full.orbit_size == 51840);
    auto m = ew::is_m_regular(rs, {v, OrbitKind::M});
    CHECK(m.orbit_size == 1920);
    CHECK_THROWS_AS(ew::is_g_regular(rs, {Vec(5), OrbitKind::G}), ew::DimensionMismatch);
}

TEST_CASE("g-regularity agrees with the all-roots oracle")
{
    for (const auto& f : factors()) {
        if (f.family == ew::Family::E7) continue;  // full orbits are too large here
        CAPTURE(f.name());
        auto rs = ew::build_root_system(f);
        const int samples = f.family == ew::Family::E6 ? 20 : 100;
        int regular = 0;
        for (int i = 0; i < samples; ++i) {
            // Pairings of 5 * lam are multiples of 5/2, which keeps some samples regular.
            Vec lam = Scalar(i % 2 ? 5 : 1) * random_weight(rs, 2);
            auto v = ew::is_g_regular(rs, {lam, OrbitKind::G});
            REQUIRE(v.regular == g_regular_by_roots(rs, lam));
            if (!v.regular) check_witness(rs, v, Vec(rs.dim));
            regular += v.regular;
        }
        MESSAGE(f.name() << ": " << regular << "/" << samples << " regular");
    }
}

TEST_CASE("verdicts do not depend on the orbit representative")
{
    for (const auto& f : factors()) {
        CAPTURE(f.name());
        auto rs = ew::build_root_system(f);
        const bool big = f.exceptional();
        for (int i = 0; i < 100; ++i) {
            Vec lam = random_weight(rs, 2);
            Vec mu = random_image(rs, lam, rs.wm_generators);
            REQUIRE(ew::is_m_regular(rs, {lam, OrbitKind::M}).regular == ew::is_m_regular(rs, {mu, OrbitKind::M}).regular);
            if (big && i % 10 != 0) continue;
            if (f.family == ew::Family::E7) {
                // Representative independence on E7 through the oracle only.
                Vec nu = random_image(rs, lam, ew::all_generators(rs));
                REQUIRE(g_regular_by_roots(rs, lam) == g_regular_by_roots(rs, nu));
                continue;
            }
            Vec nu = random_image(rs, lam, ew::all_generators(rs));
            REQUIRE(ew::is_g_regular(rs, {lam, OrbitKind::G}).regular ==
                    ew::is_g_regular(rs, {nu, OrbitKind::G}).regular);
        }
    }
}

TEST_CASE("sign conventions agree")
{
    // Roots of n are the negatives of the n^std roots; the shift is -1/2 the sum
    // of the roots of n, and the forbidden values are negated.
    for (const auto& f : factors()) {
        CAPTURE(f.name());
        auto rs = ew::build_root_system(f);
        Vec det_n(rs.dim);
        for (const auto& r : rs.nstd_roots) det_n = det_n + Scalar(-1) * r.vec;
        for (int i = 0; i < 50; ++i) {
            Vec lam = random_weight(rs, 3);
            for (const auto& r : rs.nstd_roots) {
                const Vec neg = Scalar(-1) * r.vec;
                const Scalar other = ew::dot(lam - Scalar::frac(1, 2) * det_n, ew::coroot(neg));
                const bool other_bad = other == Scalar(-1) || (r.shorter && other == Scalar(-2));
                const bool ours_bad = ew::forbidden(r, ew::pairing(lam + ew::det_nstd_half_shift(rs), r));
                REQUIRE(other_bad == ours_bad);
            }
        }
    }
}

TEST_CASE("extend_character")
{
    SUBCASE("E6 minuscule weight")
    {
        auto rs = ew::build_root_system(FactorType::e6());
        auto e = ew::extend_character(rs, {rs.lambda0, OrbitKind::G});
        auto orb = ew::orbit(rs, rs.lambda0, ew::all_generators(rs));
        bool inside = false;
        for (const auto& v : *orb) inside = inside || v == e.orbit_representative;
        CHECK(inside);
        for (const auto& r : rs.nstd_roots) CHECK(ew::pairing(e.orbit_representative, r).rational_part().sign() <= 0);
        CHECK(e.m_character.kind == OrbitKind::M);
        CHECK(ew::is_m_regular(rs, e.m_character).regular);
    }
    SUBCASE("B(2)")
    {
        auto rs = ew::build_root_system(FactorType::b(2));
        auto e = ew::extend_character(rs, {Vec{Scalar::frac(5, 2), Scalar::frac(1, 2)}, OrbitKind::G});
        CHECK(e.orbit_representative == Vec{Scalar::frac(-5, 2), Scalar::frac(-1, 2)});
        CHECK(ew::is_m_regular(rs, e.m_character).regular);
        const Vec shift = ew::det_nstd_half_shift(rs);
        CHECK(e.m_character.weight + shift == e.orbit_representative);
    }
    SUBCASE("already in the chamber")
    {
        auto rs = ew::build_root_system(FactorType::c(3));
        Vec lam{Scalar(-3), Scalar(-2), Scalar(-1)};
        CHECK(ew::extend_character(rs, {lam, OrbitKind::G}).orbit_representative == lam);
    }
    SUBCASE("irrational pairings are rejected")
    {
        auto rs = ew::build_root_system(FactorType::e6());
        Vec lam(6);
        lam[0] = Scalar::sqrt2();
        CHECK_THROWS_AS(ew::extend_character(rs, {lam, OrbitKind::G}), ew::IrrationalPairings);
        // Irrational coordinates are fine when every pairing is rational.
        CHECK_NOTHROW(ew::extend_character(rs, {rs.lambda0, OrbitKind::G}));
    }
    SUBCASE("random characters")
    {
        for (const auto& f : factors()) {
            CAPTURE(f.name());
            auto rs = ew::build_root_system(f);
            for (int i = 0; i < 30; ++i) {
                Vec lam = random_weight(rs, 3);
                auto e = ew::extend_character(rs, {lam, OrbitKind::G});
                for (const auto& r : rs.nstd_roots)
                    REQUIRE(ew::pairing(e.orbit_representative, r).rational_part().sign() <= 0);
                REQUIRE(ew::is_m_regular(rs, e.m_character).regular);
                // Same answer from another representative.
                auto e2 = ew::extend_character(rs, {random_image(rs, lam, ew::all_generators(rs)), OrbitKind::G});
                REQUIRE(e2.orbit_representative == e.orbit_representative);
            }
        }
    }
}
