#ifndef RGC_SEGMENTER_HPP
#define RGC_SEGMENTER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mapper.hpp"
#include "sequence.hpp"

namespace rgc {

/// Replace the character at 1-based target position `position` with `value`.
struct SubstitutionRecord {
    uint64_t position = 0;
    char value = '\0';

    bool operator==(const SubstitutionRecord&) const = default;
};

/// Insert `value` immediately after 1-based target position `position`
/// (position 0 means before the first character).
struct InsertionRecord {
    uint64_t position = 0;
    char value = '\0';

    bool operator==(const InsertionRecord&) const = default;
};

/// Skip `length` reference characters immediately after producing target
/// position `position`.
struct DeletionRecord {
    uint64_t position = 0;
    uint64_t length = 0;

    bool operator==(const DeletionRecord&) const = default;
};

/// Segmented edit script: the surviving instructions plus explicit
/// substitution / insertion / deletion records. Position lists within each
/// record vector are strictly increasing (they are emitted left to right).
struct EditSet {
    std::vector<Instruction> instructions;
    std::vector<SubstitutionRecord> substitutions;
    std::vector<InsertionRecord> insertions;
    std::vector<DeletionRecord> deletions;
};

template <typename Record>
struct Merge {
    Instruction merged;
    Record record;
};

// The pairwise merge checks below take `a_end`, the 1-based target position
// of a's novel character (for a raw instruction parsed at target offset n,
// a_end = n + a.length + 1). Deriving record positions from a_end instead of
// the raw offset is what keeps them correct when `a` is itself the product
// of earlier merges. An end-marker instruction may only appear as `b`.

/// Reference gap of exactly 1: a's novel character is a substitution for the
/// skipped reference character.
std::optional<Merge<SubstitutionRecord>> try_merge_substitution(
    const Instruction& a, uint64_t a_end, const Instruction& b);

/// Reference gap of exactly 0: a's novel character was inserted between two
/// reference-aligned runs.
std::optional<Merge<InsertionRecord>> try_merge_insertion(
    const Instruction& a, uint64_t a_end, const Instruction& b);

/// Reference gap in [2, max_deletion] with a's novel character re-matching
/// the reference just before b: exactly gap-many reference characters were
/// deleted.
std::optional<Merge<DeletionRecord>> try_merge_deletion(
    const Instruction& a, uint64_t a_end, const Instruction& b,
    const Sequence& reference, uint64_t max_deletion);

/// Single left-to-right pass: each instruction is merged into the running
/// one whenever a substitution, insertion or deletion check applies
/// (chains of any length fall out of re-applying the pairwise rules);
/// otherwise the running instruction is flushed.
EditSet segment(const std::vector<Instruction>& instructions,
                const Sequence& reference, uint64_t max_deletion);

} // namespace rgc

#endif
