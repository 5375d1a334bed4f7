#ifndef RGC_MAPPER_HPP
#define RGC_MAPPER_HPP

#include <cstdint>
#include <vector>

#include "sequence.hpp"

namespace rgc {

// The window center advances by l+1 per phrase (match plus novel symbol) so
// that it tracks the target cursor. Flip to 0 to advance by the bare match
// length instead; both variants keep the parse correct, they only move the
// search window differently.
inline constexpr uint64_t kWindowAdvanceNovel = 1;

/// One parsed phrase: copy `length` reference characters starting at
/// 1-based `position`, then emit `novel`. When the target ends exactly at a
/// match boundary the final phrase carries no novel character and
/// `end_marker` is set instead.
struct Instruction {
    uint64_t position = 0;
    uint64_t length = 0;
    char novel = '\0';
    bool end_marker = false;

    bool operator==(const Instruction&) const = default;
};

struct WindowParams {
    uint32_t left = 1000;         // left half-width L
    uint32_t right = 1000;        // right half-width R
    uint32_t period = 100;        // re-centering period M, in phrases
    uint64_t initial_center = 1;  // starting W
};

/// Parser window: matches may only *start* inside
/// [max(1, center-left), min(ref_len, center+right)]; they are free to run
/// past the right edge. `drifts` holds the last `period` values of
/// (match position - center at parse time) and feeds the median
/// re-centering shift.
struct WindowState {
    uint64_t center = 1;
    uint32_t left = 1000;
    uint32_t right = 1000;
    uint32_t period = 100;
    std::vector<int64_t> drifts;
};

struct Match {
    uint64_t position = 0;
    uint64_t length = 0;
};

/// Longest match for target[offset+1 ...] among all window start positions,
/// ties broken toward the smallest start. `offset` is the count of target
/// characters already parsed (0-based cursor). Returns length 0 with
/// position = window center when nothing matches a single character.
Match find_longest_match(const Sequence& target, uint64_t offset,
                         const Sequence& reference, const WindowState& window);

/// Advances the window center past the consumed phrase and, every `period`
/// phrases, shifts it by the median drift (lower middle for even counts)
/// and clears the drift history. The center is kept inside
/// [1, reference_length].
void update_window(WindowState& window, uint64_t consumed_length,
                   uint64_t phrase_index, uint64_t reference_length);

/// Parses the whole target into phrases. Successive instructions tile the
/// target; replaying them against the reference reproduces it exactly.
std::vector<Instruction> parse(const Sequence& target, const Sequence& reference,
                               const WindowParams& params);

} // namespace rgc

#endif
