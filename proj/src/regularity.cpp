#include "ew/regularity.hpp"

#include <deque>
#include <unordered_set>

#include "ew/linalg.hpp"
#include "ew/weyl.hpp"

namespace ew {

Vec det_nstd_half_shift(const RootSystem& rs)
{
    Vec s(rs.dim);
    for (const auto& r : rs.nstd_roots) s = s + r.vec;
    return Scalar::frac(1, 2) * s;
}

bool forbidden(const Root& alpha, const Scalar& v) { return v == Scalar(1) || (alpha.shorter && v == Scalar(2)); }

namespace {

std::optional<Witness> first_hit(const RootSystem& rs, const Vec& element, const Vec& shifted)
{
    for (std::size_t k = 0; k < rs.nstd_roots.size(); ++k) {
        Scalar v = pairing(shifted, rs.nstd_roots[k]);
        if (forbidden(rs.nstd_roots[k], v)) return Witness{element, static_cast<int>(k), v};
    }
    return std::nullopt;
}

// Breadth-first closure that stops at the first witness; only the frontier and
// the visited set are kept.
RegularityVerdict scan_orbit(const RootSystem& rs, const Vec& seed, const std::vector<int>& gens, const Vec* shift,
                             std::size_t cap)
{
    if (seed.size() != rs.dim)
        throw DimensionMismatch("weight has " + std::to_string(seed.size()) + " coordinates, " + rs.ftype.name() +
                                " needs " + std::to_string(rs.dim));
    RegularityVerdict out;
    std::unordered_set<Vec, VecHash> seen{seed};
    std::deque<Vec> frontier{seed};
    while (!frontier.empty()) {
        Vec v = std::move(frontier.front());
        frontier.pop_front();
        auto hit = first_hit(rs, v, shift ? v + *shift : v);
        if (hit) {
            out.regular = false;
            out.witness = std::move(hit);
            out.orbit_size = seen.size();
            return out;
        }
        for (int g : gens) {
            Vec u = apply_word(rs, {g}, v);
            if (seen.count(u)) continue;
            if (seen.size() >= cap)
                throw OrbitBudgetExceeded("orbit of " + to_string(seed) + " exceeds " + std::to_string(cap) + " elements");
            seen.insert(u);
            frontier.push_back(std::move(u));
        }
    }
    out.orbit_size = seen.size();
    return out;
}

}  // namespace

RegularityVerdict is_m_regular(const RootSystem& rs, const CharacterRep& ch)
{
    const Vec shift = det_nstd_half_shift(rs);
    return scan_orbit(rs, ch.weight, rs.wm_generators, &shift, SIZE_MAX);
}

RegularityVerdict is_g_regular(const RootSystem& rs, const CharacterRep& ch, std::size_t cap)
{
    if (cap == 0) cap = static_cast<std::size_t>(rs.weyl_order());
    return scan_orbit(rs, ch.weight, all_generators(rs), nullptr, cap);
}

Extension extend_character(const RootSystem& rs, const CharacterRep& ch)
{
    if (ch.weight.size() != rs.dim) throw DimensionMismatch("weight dimension does not match " + rs.ftype.name());
    // W permutes the coroots, so checking one representative covers the orbit.
    for (const auto& r : rs.all_roots) {
        Scalar p = pairing(ch.weight, r);
        if (!p.is_rational())
            throw IrrationalPairings("pairing with coroot of " + to_string(r.vec) + " is " + p.to_string());
    }
    // Reflect while some simple coroot pairs positively; each step lowers the
    // weight, so this ends in the chamber where every positive coroot pairs <= 0.
    Vec lam = ch.weight;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
            Scalar p = pairing(lam, rs.simple_roots[i]);
            if (p.rational_part() > Rational(0)) {
                lam = lam - p * rs.simple_roots[i].vec;
                moved = true;
            }
        }
    }
    Extension e;
    e.orbit_representative = lam;
    e.m_character = {lam - det_nstd_half_shift(rs), OrbitKind::M};
    return e;
}

}  // namespace ew
