#include "ew/root_system.hpp"

#include <bit>
#include <deque>
#include <unordered_set>

#include "ew/linalg.hpp"
#include "ew/tables.hpp"

namespace ew {

namespace {

Vec unit(std::size_t dim, std::size_t i, Scalar s = 1)
{
    Vec v(dim);
    v[i] = std::move(s);
    return v;
}

Vec e_pm(std::size_t dim, std::size_t i, std::size_t j, int sign)
{
    Vec v(dim);
    v[i] = 1;
    v[j] = sign;
    return v;
}

Vec reflect(const Vec& v, const Vec& alpha, const Vec& alpha_vee)
{
    Scalar p = dot(v, alpha_vee);
    if (p.is_zero()) return v;
    return v - p * alpha;
}

const Scalar kHalf = Scalar::frac(1, 2);

// (h_0, ..., h_{k-1}, last) with h_i = +1/2 when bit i of mask is set.
Vec half_vector(std::size_t k, unsigned mask, std::size_t offset, std::size_t dim, const Scalar& last)
{
    Vec v(dim);
    for (std::size_t i = 0; i < k; ++i) v[offset + i] = (mask >> i) & 1U ? kHalf : -kHalf;
    v[dim - 1] = last;
    return v;
}

std::vector<Root> make_roots(const std::vector<Vec>& vecs)
{
    std::vector<Root> out;
    for (const auto& v : vecs) out.push_back({v, coroot(v), false});
    return out;
}

}  // namespace

FactorType FactorType::from_tag(const std::string& tag, int rank, int node)
{
    FactorType f;
    if (tag == "a") f = a(rank, node);
    else if (tag == "b") f = b(rank);
    else if (tag == "c") f = c(rank);
    else if (tag == "d-r") f = d_r(rank);
    else if (tag == "d-h") f = d_h(rank);
    else if (tag == "e6") f = e6();
    else if (tag == "e7") f = e7();
    else throw UnsupportedRank("unknown factor type '" + tag + "'");
    f.validate();
    return f;
}

std::string FactorType::tag() const
{
    switch (family) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::C: return "c";
    case Family::DR: return "d-r";
    case Family::DH: return "d-h";
    case Family::E6: return "e6";
    case Family::E7: return "e7";
    }
    return "?";
}

std::string FactorType::name() const
{
    const std::string n = std::to_string(rank);
    switch (family) {
    case Family::A: return "A(" + n + "," + std::to_string(node) + ")";
    case Family::B: return "B(" + n + ")";
    case Family::C: return "C(" + n + ")";
    case Family::DR: return "D_R(" + n + ")";
    case Family::DH: return "D_H(" + n + ")";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    }
    return "?";
}

void FactorType::validate() const
{
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw UnsupportedRank(name() + ": " + what);
    };
    switch (family) {
    case Family::A:
        need(rank >= 1, "type A needs n >= 1");
        need(node >= 1 && node <= rank, "type A needs 1 <= node <= n");
        break;
    case Family::B:
    case Family::C: need(rank >= 2, "types B and C need n >= 2"); break;
    case Family::DR:
    case Family::DH: need(rank >= 3, "type D needs n >= 3"); break;
    case Family::E6: need(rank == 6, "E6 has rank 6"); break;
    case Family::E7: need(rank == 7, "E7 has rank 7"); break;
    }
    // Keeps |W| inside 64 bits and the enumeration sane.
    need(exceptional() || rank <= 12, "classical rank above 12 is not supported");
}

Vec coroot(const Vec& alpha)
{
    Scalar n = dot(alpha, alpha);
    return (Scalar(2) * n.inverse()) * alpha;
}

Scalar pairing(const Vec& lambda, const Root& alpha)
{
    if (lambda.size() != alpha.coroot.size())
        throw DimensionMismatch("weight has " + std::to_string(lambda.size()) + " coordinates, root has " +
                                std::to_string(alpha.coroot.size()));
    return dot(lambda, alpha.coroot);
}

std::uint64_t RootSystem::weyl_order() const
{
    const auto n = static_cast<std::uint64_t>(ftype.rank);
    std::uint64_t fact = 1;
    for (std::uint64_t i = 2; i <= n; ++i) fact *= i;
    switch (ftype.family) {
    case Family::A: return fact * (n + 1);
    case Family::B:
    case Family::C: return fact << n;
    case Family::DR:
    case Family::DH: return fact << (n - 1);
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    }
    return 0;
}

std::uint64_t RootSystem::elimination_bound() const
{
    return weyl_order() * (1 + v0_differences.size() * (nstd_roots.size() + 1));
}

int RootSystem::find_root(const Vec& v) const
{
    for (std::size_t i = 0; i < all_roots.size(); ++i)
        if (all_roots[i].vec == v) return static_cast<int>(i);
    return -1;
}

std::vector<Vec> root_closure(const RootSystem& rs)
{
    std::unordered_set<Vec, VecHash> seen;
    std::vector<Vec> out;
    std::deque<Vec> queue;
    for (const auto& r : rs.simple_roots)
        if (seen.insert(r.vec).second) {
            out.push_back(r.vec);
            queue.push_back(r.vec);
        }
    while (!queue.empty()) {
        Vec v = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : rs.simple_roots) {
            Vec u = reflect(v, s.vec, s.coroot);
            if (seen.insert(u).second) {
                out.push_back(u);
                queue.push_back(std::move(u));
            }
        }
    }
    return out;
}

namespace {

void build_classical(RootSystem& rs)
{
    const auto n = static_cast<std::size_t>(rs.ftype.rank);
    const Family fam = rs.ftype.family;
    const std::size_t dim = fam == Family::A ? n + 1 : n;
    rs.dim = dim;

    std::vector<Vec> simple;
    for (std::size_t i = 0; i + 1 < dim; ++i) simple.push_back(e_pm(dim, i, i + 1, -1));
    if (fam == Family::B) simple.push_back(unit(dim, n - 1));
    if (fam == Family::C) simple.push_back(unit(dim, n - 1, 2));
    if (fam == Family::DR || fam == Family::DH) simple.push_back(e_pm(dim, n - 2, n - 1, 1));

    std::vector<Vec> all;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            all.push_back(e_pm(dim, i, j, -1));
            all.push_back(-Scalar(1) * e_pm(dim, i, j, -1));
            if (fam != Family::A) {
                all.push_back(e_pm(dim, i, j, 1));
                all.push_back(-Scalar(1) * e_pm(dim, i, j, 1));
            }
        }
    for (std::size_t i = 0; i < dim; ++i) {
        if (fam == Family::B) {
            all.push_back(unit(dim, i));
            all.push_back(unit(dim, i, -1));
        }
        if (fam == Family::C) {
            all.push_back(unit(dim, i, 2));
            all.push_back(unit(dim, i, -2));
        }
    }

    std::vector<Vec> nstd;
    std::vector<int> wm;
    switch (fam) {
    case Family::A: {
        const auto r = static_cast<std::size_t>(rs.ftype.node);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = r; j < dim; ++j) nstd.push_back(e_pm(dim, i, j, -1));
        rs.lambda0 = Vec(dim);
        for (std::size_t i = 0; i < r; ++i) rs.lambda0[i] = 1;
        rs.hermitian_node = rs.ftype.node;
        rs.dual_coxeter = static_cast<int>(n + 1);
        // +1 entries before the semicolon, -1 after, equally many and nonzero.
        const std::size_t m = dim - r;
        for (unsigned s = 1; s < (1U << r); ++s)
            for (unsigned t = 1; t < (1U << m); ++t) {
                if (std::popcount(s) != std::popcount(t)) continue;
                Vec d(dim);
                for (std::size_t i = 0; i < r; ++i)
                    if ((s >> i) & 1U) d[i] = 1;
                for (std::size_t j = 0; j < m; ++j)
                    if ((t >> j) & 1U) d[r + j] = -1;
                rs.v0_differences.push_back(std::move(d));
            }
        break;
    }
    case Family::B:
        nstd.push_back(unit(dim, 0));
        for (std::size_t i = 1; i < n; ++i) {
            nstd.push_back(e_pm(dim, 0, i, 1));
            nstd.push_back(e_pm(dim, 0, i, -1));
        }
        rs.lambda0 = unit(dim, 0);
        rs.hermitian_node = 1;
        rs.dual_coxeter = static_cast<int>(2 * n - 1);
        rs.v0_differences.push_back(unit(dim, 0, 2));
        rs.v0_differences.push_back(unit(dim, 0));
        for (std::size_t i = 1; i < n; ++i) {
            rs.v0_differences.push_back(e_pm(dim, 0, i, 1));
            rs.v0_differences.push_back(e_pm(dim, 0, i, -1));
        }
        break;
    case Family::C: {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) nstd.push_back(i == j ? unit(dim, i, 2) : e_pm(dim, i, j, 1));
        rs.lambda0 = Vec(dim, Scalar(1));
        rs.hermitian_node = static_cast<int>(n);
        rs.dual_coxeter = static_cast<int>(n + 1);
        // Entries in {0,1,2} with evenly many 1s, not all zero; base-3 order.
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        for (std::size_t code = 1; code < total; ++code) {
            Vec d(dim);
            std::size_t ones = 0;
            std::size_t c = code;
            for (std::size_t i = 0; i < n; ++i, c /= 3) {
                d[i] = static_cast<std::int64_t>(c % 3);
                ones += c % 3 == 1;
            }
            if (ones % 2 == 0) rs.v0_differences.push_back(std::move(d));
        }
        break;
    }
    case Family::DR:
        for (std::size_t i = 1; i < n; ++i) {
            nstd.push_back(e_pm(dim, 0, i, 1));
            nstd.push_back(e_pm(dim, 0, i, -1));
        }
        rs.lambda0 = unit(dim, 0);
        rs.hermitian_node = 1;
        rs.dual_coxeter = static_cast<int>(2 * n - 2);
        rs.v0_differences.push_back(unit(dim, 0, 2));
        for (std::size_t i = 1; i < n; ++i) {
            rs.v0_differences.push_back(e_pm(dim, 0, i, 1));
            rs.v0_differences.push_back(e_pm(dim, 0, i, -1));
        }
        break;
    case Family::DH:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) nstd.push_back(e_pm(dim, i, j, 1));
        rs.lambda0 = Vec(dim, kHalf);
        rs.hermitian_node = static_cast<int>(n);
        rs.dual_coxeter = static_cast<int>(2 * n - 2);
        for (unsigned s = 1; s < (1U << n); ++s) {
            if (std::popcount(s) % 2) continue;
            Vec d(dim);
            for (std::size_t i = 0; i < n; ++i)
                if ((s >> i) & 1U) d[i] = 1;
            rs.v0_differences.push_back(std::move(d));
        }
        break;
    default: break;
    }
    for (int i = 1; i <= rs.ftype.rank; ++i)
        if (i != rs.hermitian_node) wm.push_back(i);

    rs.simple_roots = make_roots(simple);
    rs.all_roots = make_roots(all);
    rs.nstd_roots = make_roots(nstd);
    rs.wm_generators = std::move(wm);
}

void build_exceptional(RootSystem& rs)
{
    const bool e6 = rs.ftype.family == Family::E6;
    const std::size_t dim = e6 ? 6 : 7;
    rs.dim = dim;

    const WeightTable& outer = e6 ? e6_table() : e7_outer_table();
    std::vector<const WeightTable*> tables{&outer};
    if (!e6) tables.push_back(&e7_inner_table());
    rs.simple_roots = make_roots(reconstruct_simple_roots(tables, rs.ftype.rank));
    rs.lambda0 = outer.base();

    // W-images of lambda0 along the tabulated words.
    for (std::size_t row = 1; row < outer.rows.size(); ++row) {
        Vec v = rs.lambda0;
        WeylWord w = outer.word(row);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const Root& s = rs.simple_roots[static_cast<std::size_t>(*it - 1)];
            v = reflect(v, s.vec, s.coroot);
        }
        rs.v0_differences.push_back(rs.lambda0 - v);
    }

    std::vector<Vec> all;
    std::vector<Vec> nstd;
    const std::size_t k = e6 ? 5 : 6;  // D_k on the leading coordinates
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (int s : {-1, 1}) {
                all.push_back(e_pm(dim, i, j, s));
                all.push_back(-Scalar(1) * e_pm(dim, i, j, s));
            }
    if (e6) {
        const Scalar h = Scalar::frac(1, 2) * Scalar::sqrt3();
        for (unsigned m = 0; m < 32; ++m) {
            const bool even = std::popcount(m) % 2 == 0;
            all.push_back(half_vector(5, m, 0, dim, even ? h : -h));
            if (even) nstd.push_back(half_vector(5, m, 0, dim, h));
        }
        rs.hermitian_node = 6;
        rs.dual_coxeter = 12;
    } else {
        const Scalar h = Scalar::frac(1, 2) * Scalar::sqrt2();
        all.push_back(unit(dim, 6, Scalar::sqrt2()));
        all.push_back(unit(dim, 6, -Scalar::sqrt2()));
        // Negation keeps the parity of six signs, so both signs of the last
        // coordinate go with evenly many +1/2.
        for (unsigned m = 0; m < 64; ++m)
            if (std::popcount(m) % 2 == 0) {
                all.push_back(half_vector(6, m, 0, dim, h));
                all.push_back(half_vector(6, m, 0, dim, -h));
            }
        for (std::size_t j = 1; j < 6; ++j) {
            nstd.push_back(e_pm(dim, 0, j, 1));
            nstd.push_back(e_pm(dim, 0, j, -1));
        }
        // First coordinate +1/2; evenly many +1/2 overall among the six.
        for (unsigned m = 0; m < 32; ++m)
            if (std::popcount(m) % 2 == 1) nstd.push_back(half_vector(6, 1U | (m << 1), 0, dim, h));
        nstd.push_back(unit(dim, 6, Scalar::sqrt2()));
        rs.hermitian_node = 1;
        rs.dual_coxeter = 18;
    }
    rs.all_roots = make_roots(all);
    rs.nstd_roots = make_roots(nstd);
    for (int i = 1; i <= rs.ftype.rank; ++i)
        if (i != rs.hermitian_node) rs.wm_generators.push_back(i);
}

}  // namespace

RootSystem build_root_system(const FactorType& ftype)
{
    ftype.validate();
    RootSystem rs;
    rs.ftype = ftype;
    if (ftype.exceptional()) build_exceptional(rs);
    else build_classical(rs);

    Scalar longest;
    for (const auto& r : rs.all_roots) {
        Scalar n = dot(r.vec, r.vec);
        if (n.rational_part() > longest.rational_part()) longest = n;
    }
    auto mark = [&](std::vector<Root>& roots) {
        for (auto& r : roots) r.shorter = dot(r.vec, r.vec) != longest;
    };
    mark(rs.simple_roots);
    mark(rs.all_roots);
    mark(rs.nstd_roots);
    return rs;
}

}  // namespace ew
