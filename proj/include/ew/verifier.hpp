#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ew/root_system.hpp"
#include "ew/weyl.hpp"

namespace ew {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Verdict { NoSolution, ForcedRoot, Failure };
std::string to_string(Verdict v);

struct PairOutcome {
    std::uint64_t w_index = 0;
    std::string w;  // word (E6/E7) or signed permutation (classical)
    std::size_t diff_index = 0;
    Verdict verdict = Verdict::Failure;
    int root = -1;  // index into nstd_roots when forced
    int value = 0;
    std::uint64_t eliminations = 0;  // Method-equivalent count for this pair

    friend bool operator==(const PairOutcome&, const PairOutcome&) = default;
};

/// Counters for a block of Weyl elements; merging is plain addition plus
/// concatenation of failures in block order.
struct Tally {
    std::uint64_t elements = 0;
    std::uint64_t pairs_total = 0;
    std::uint64_t pairs_no_solution = 0;
    std::uint64_t pairs_forced = 0;
    std::uint64_t pairs_failed = 0;
    std::uint64_t eliminations_total = 0;   // Method-equivalent
    std::uint64_t eliminations_actual = 0;  // eliminations this code really ran
    std::vector<PairOutcome> failures;      // first kMaxRecordedFailures only

    static constexpr std::size_t kMaxRecordedFailures = 1000;
    void merge(const Tally& o);
    friend bool operator==(const Tally&, const Tally&) = default;
};

/// W_m-orbits on the n^std roots, and for each orbit the first difference
/// equal to c * alpha with alpha in the orbit and c allowed. W_m preserves root
/// length, so the orbits can at best be the length classes; outside types B and
/// C that is a single orbit.
struct IfDirection {
    struct Witness {
        std::size_t diff = 0;
        int root = -1;
        int value = 0;
    };
    std::vector<std::vector<int>> orbits;  // indices into nstd_roots
    bool orbits_are_length_classes = false;
    std::vector<std::optional<Witness>> witnesses;  // one per orbit

    bool transitive() const { return orbits.size() == 1; }
    bool witness_found() const
    {
        for (const auto& w : witnesses)
            if (!w) return false;
        return !witnesses.empty();
    }
    bool ok() const { return orbits_are_length_classes && witness_found(); }
};

struct ConverseMembership {
    std::size_t checked = 0;
    std::vector<std::string> missing;  // "c*alpha" not found among the differences
    bool ok() const { return missing.empty(); }
};

struct VerificationReport {
    FactorType factor;
    std::uint64_t weyl_order = 0;
    std::uint64_t eliminations_bound = 0;
    Tally tally;
    std::optional<IfDirection> if_direction;
    std::optional<ConverseMembership> converse;
    double elapsed_ms = 0;

    bool only_if_ok() const { return tally.pairs_failed == 0 && tally.elements == weyl_order; }
    bool success() const
    {
        return only_if_ok() && (!if_direction || if_direction->ok()) && (!converse || converse->ok());
    }
};

/// Rescaled: conjugate every element by the coordinate surd scaling so the
/// whole computation runs over Q, reuse one echelon per element, and decide
/// each (w, delta) by the row-space criterion. Literal: augment the tracked
/// echelon per delta and append one row per candidate root, over Q(sqrt2,sqrt3).
enum class Strategy { Rescaled, Literal };

struct VerifyOptions {
    unsigned workers = 1;
    Strategy strategy = Strategy::Rescaled;
    std::uint64_t budget = 10'000'000;  // classical only: |W| * |differences|
    std::string checkpoint;             // empty: no checkpointing
    double progress_seconds = 0;        // 0: silent
    /// Stop (as if killed) once this many units have completed in this call.
    std::optional<std::size_t> stop_after_units;
};

/// Outcomes for every delta against a single Weyl element.
std::vector<PairOutcome> analyze_element(const RootSystem& rs, const WeylElement& w, Strategy strategy);

/// The Method over all of W. Failure is data: it lands in the report.
VerificationReport verify_only_if(const RootSystem& rs, const VerifyOptions& opts);

/// Transitivity of W_m on the n^std roots of each length and existence of a
/// difference equal to c * alpha for an n^std root alpha and allowed value c.
IfDirection verify_if(const RootSystem& rs);

/// Every c * alpha (alpha in n^std, c allowed) occurs among the differences.
ConverseMembership verify_converse_membership(const RootSystem& rs);

/// verify_only_if with direct enumeration plus both checks above.
/// Throws BudgetExceeded.
VerificationReport verify_classical(const FactorType& ftype, const VerifyOptions& opts);

/// Everything the CLI runs for one factor.
VerificationReport verify_all(const RootSystem& rs, const VerifyOptions& opts);

}  // namespace ew
