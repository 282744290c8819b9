#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ew/root_system.hpp"

namespace ew {

struct OrbitBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IrrationalPairings : std::domain_error {
    using std::domain_error::domain_error;
};

enum class OrbitKind { G, M };

struct CharacterRep {
    Vec weight;
    OrbitKind kind = OrbitKind::G;
};

/// An orbit element, an n^std root and the forbidden value it hit. For M-orbits
/// the value is the pairing of the shifted element.
struct Witness {
    Vec element;
    int root = -1;  // index into nstd_roots
    Scalar value;
};

struct RegularityVerdict {
    bool regular = true;
    std::optional<Witness> witness;
    std::size_t orbit_size = 0;
};

/// Half the sum of the n^std roots; the shift lambda' - (1/2) lambda_{det n}
/// equals lambda' + this.
Vec det_nstd_half_shift(const RootSystem& rs);

/// True when v is 1, or 1 or 2 for a shorter root.
bool forbidden(const Root& alpha, const Scalar& v);

/// Every W_m-orbit element, shifted, avoids the forbidden values against every
/// n^std coroot.
RegularityVerdict is_m_regular(const RootSystem& rs, const CharacterRep& ch);

/// Every W-orbit element avoids the forbidden values against every n^std
/// coroot. `cap` bounds the orbit (0 means |W|); throws OrbitBudgetExceeded.
RegularityVerdict is_g_regular(const RootSystem& rs, const CharacterRep& ch, std::size_t cap = 0);

struct Extension {
    Vec orbit_representative;  // lambda' in W lambda, pairing <= 0 with every n^std coroot
    CharacterRep m_character;  // lambda' - shift, an M-orbit
};

/// A regular Z(U(m))-character over the given Z(U(g))-character. Throws
/// IrrationalPairings if some coroot pairs irrationally with the weight.
Extension extend_character(const RootSystem& rs, const CharacterRep& ch);

}  // namespace ew
