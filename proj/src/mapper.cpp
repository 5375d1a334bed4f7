#include "mapper.hpp"

#include <algorithm>

namespace rgc {

namespace {

int64_t lower_median(std::vector<int64_t> values) {
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

} // namespace

Match find_longest_match(const Sequence& target, uint64_t offset,
                         const Sequence& reference, const WindowState& window) {
    const uint64_t ref_len = reference.size();
    const uint64_t lo = window.center > window.left ? window.center - window.left : 1;
    const uint64_t hi = std::min(ref_len, window.center + window.right);

    const char* t = target.bases.data() + offset;
    const uint64_t t_left = target.size() - offset;

    Match best{window.center, 0};
    for (uint64_t i = lo; i <= hi; ++i) {
        const char* r = reference.bases.data() + (i - 1);
        const uint64_t cap = std::min(t_left, ref_len - (i - 1));
        // A candidate can only beat the current best if its first
        // best.length+1 characters all match, so probe one byte first.
        if (cap <= best.length || r[best.length] != t[best.length]) continue;
        uint64_t l = 0;
        while (l < cap && r[l] == t[l]) ++l;
        if (l > best.length) best = {i, l};
    }
    return best;
}

void update_window(WindowState& window, uint64_t consumed_length,
                   uint64_t phrase_index, uint64_t reference_length) {
    window.center += consumed_length + kWindowAdvanceNovel;
    if (window.period > 0 && phrase_index % window.period == 0) {
        if (!window.drifts.empty()) {
            const int64_t shift = lower_median(window.drifts);
            const int64_t shifted = static_cast<int64_t>(window.center) + shift;
            window.center = shifted < 1 ? 1 : static_cast<uint64_t>(shifted);
        }
        window.drifts.clear();
    }
    window.center = std::clamp<uint64_t>(window.center, 1, reference_length);
}

std::vector<Instruction> parse(const Sequence& target, const Sequence& reference,
                               const WindowParams& params) {
    if (target.empty() || reference.empty()) {
        throw Error(ErrorCode::BadArgument, "parse requires non-empty sequences");
    }

    WindowState window;
    window.center = std::clamp<uint64_t>(params.initial_center, 1, reference.size());
    window.left = params.left;
    window.right = params.right;
    window.period = params.period;

    std::vector<Instruction> instructions;
    uint64_t n = 0; // target characters parsed so far
    for (uint64_t k = 1; n < target.size(); ++k) {
        const Match m = find_longest_match(target, n, reference, window);
        window.drifts.push_back(static_cast<int64_t>(m.position) -
                                static_cast<int64_t>(window.center));
        if (n + m.length == target.size()) {
            // Target exhausted exactly at the match end: no novel symbol.
            instructions.push_back({m.position, m.length, '\0', true});
            n += m.length;
        } else {
            instructions.push_back({m.position, m.length, target.bases[n + m.length], false});
            n += m.length + 1;
            update_window(window, m.length, k, reference.size());
        }
    }
    return instructions;
}

} // namespace rgc
