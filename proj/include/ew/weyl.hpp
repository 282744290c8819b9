#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ew/linalg.hpp"
#include "ew/root_system.hpp"
#include "ew/tables.hpp"

namespace ew {

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct UnsupportedType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// w e_j = sign[j] e_{perm[j]}.
struct SignedPerm {
    std::vector<std::size_t> perm;
    std::vector<int> sign;

    ExactMatrix matrix() const;
    /// "[2,-1,3]": entry j is the signed 1-based image of e_j.
    std::string to_string() const;
    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

/// The signed permutation with this matrix, if it is one.
std::optional<SignedPerm> as_signed_perm(const ExactMatrix& m);

using WeylElement = ExactMatrix;

/// lambda -> lambda - (lambda, alpha_i^vee) alpha_i. Throws IndexOutOfRange.
WeylElement simple_reflection(const RootSystem& rs, int i);
/// Product of simple reflections, rightmost letter acting first.
WeylElement word_to_element(const RootSystem& rs, const WeylWord& w);
/// word_to_element(rs, w) * v without forming matrices.
Vec apply_word(const RootSystem& rs, const WeylWord& w, const Vec& v);

struct CosetFiltration {
    /// Innermost layer first; w = layers[m-1][i_{m-1}] * ... * layers[0][i_0].
    std::vector<std::vector<WeylWord>> layers;
    std::uint64_t size() const;
};

/// E6: A1, A2/A1, A3/A2, A4/A3, D5/A4, E6/D5 (sizes 2,3,4,5,16,27).
/// E7: the same shifted by one letter, then E7/E6 (56). Throws UnsupportedType.
CosetFiltration coset_filtration(const RootSystem& rs);

/// Deterministic streaming enumeration of W, split into independent units:
/// one per outermost coset representative (E6/E7) or one per image of e_1
/// (classical, lexicographic permutation blocks). Element indices are global
/// and contiguous per unit.
class WeylEnumerator {
public:
    using Visitor = std::function<void(std::uint64_t index, const WeylElement& w)>;

    explicit WeylEnumerator(const RootSystem& rs);

    std::size_t units() const { return units_; }
    std::uint64_t unit_size() const { return unit_size_; }
    std::uint64_t size() const { return units_ * unit_size_; }
    std::uint64_t unit_begin(std::size_t unit) const { return unit * unit_size_; }

    void run_unit(std::size_t unit, const Visitor& visit) const;
    void run_all(const Visitor& visit) const;

    /// Word (E6/E7) or signed permutation (classical) of element `index`.
    std::string describe(std::uint64_t index) const;
    WeylElement element_at(std::uint64_t index) const;

    /// Conjugation by diag(scale) turns every element into a rational matrix:
    /// scale[i] is 1, sqrt2 or sqrt3 according to the coordinate's surd.
    const Vec& scale() const { return scale_; }

private:
    struct LayerElem {
        WeylWord word;
        WeylElement matrix;
        std::optional<SignedPerm> sp;
    };

    void descend(std::size_t layer, std::uint64_t base, const WeylElement& prefix, const Visitor& visit) const;

    const RootSystem* rs_;
    bool exceptional_ = false;
    std::vector<std::vector<LayerElem>> layers_;
    std::vector<std::uint64_t> stride_;  // element-count of one choice at each layer
    std::size_t units_ = 0;
    std::uint64_t unit_size_ = 0;
    Vec scale_;
};

/// Closure of {seed} under the listed simple reflections, in discovery order.
/// Returns nullopt if it exceeds `cap` elements.
std::optional<std::vector<Vec>> orbit(const RootSystem& rs, const Vec& seed, const std::vector<int>& generators,
                                      std::size_t cap = SIZE_MAX);

/// All simple-reflection indices 1..rank.
std::vector<int> all_generators(const RootSystem& rs);

}  // namespace ew
