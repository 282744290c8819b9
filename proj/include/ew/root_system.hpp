#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ew/scalar.hpp"

namespace ew {

struct UnsupportedRank : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Family { A, B, C, DR, DH, E6, E7 };

/// A C-simple factor type together with its Hermitian node. For A(n, r) the
/// node r sits between the r-th and (r+1)-th coordinates.
struct FactorType {
    Family family = Family::E6;
    int rank = 6;
    int node = 0;  // type A only

    static FactorType a(int n, int r) { return {Family::A, n, r}; }
    static FactorType b(int n) { return {Family::B, n, 0}; }
    static FactorType c(int n) { return {Family::C, n, 0}; }
    static FactorType d_r(int n) { return {Family::DR, n, 0}; }
    static FactorType d_h(int n) { return {Family::DH, n, 0}; }
    static FactorType e6() { return {Family::E6, 6, 0}; }
    static FactorType e7() { return {Family::E7, 7, 0}; }

    /// "a", "b", "c", "d-r", "d-h", "e6", "e7". Rank and node are taken from
    /// the arguments only where the family needs them. Throws UnsupportedRank.
    static FactorType from_tag(const std::string& tag, int rank, int node);
    std::string tag() const;
    /// "A(3,2)", "B(3)", "D_H(4)", "E6".
    std::string name() const;
    bool exceptional() const { return family == Family::E6 || family == Family::E7; }
    /// Throws UnsupportedRank.
    void validate() const;

    friend bool operator==(const FactorType&, const FactorType&) = default;
};

struct Root {
    Vec vec;
    Vec coroot;
    bool shorter = false;
};

/// 2 alpha / (alpha, alpha).
Vec coroot(const Vec& alpha);

class RootSystem {
public:
    FactorType ftype;
    std::size_t dim = 0;  // ambient coordinates
    std::vector<Root> simple_roots;
    std::vector<Root> all_roots;
    std::vector<Root> nstd_roots;
    Vec lambda0;
    std::vector<Vec> v0_differences;
    std::vector<int> wm_generators;  // 1-based simple-root indices
    int hermitian_node = 0;
    int dual_coxeter = 0;

    std::uint64_t weyl_order() const;
    std::size_t dim_v0() const { return v0_differences.size() + 1; }
    /// |W| * [1 + (dim V0 - 1)(d + 1)]
    std::uint64_t elimination_bound() const;
    /// Index into all_roots, or -1.
    int find_root(const Vec& v) const;
};

/// Throws UnsupportedRank.
RootSystem build_root_system(const FactorType& ftype);

/// (lambda, alpha^vee). Throws DimensionMismatch.
Scalar pairing(const Vec& lambda, const Root& alpha);

/// Closure of the simple roots under the simple reflections, in discovery order.
std::vector<Vec> root_closure(const RootSystem& rs);

}  // namespace ew
