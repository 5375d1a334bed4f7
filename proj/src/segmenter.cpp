#include "segmenter.hpp"

namespace rgc {

std::optional<Merge<SubstitutionRecord>> try_merge_substitution(
    const Instruction& a, uint64_t a_end, const Instruction& b) {
    if (a.end_marker) return std::nullopt;
    if (a.position + a.length + 1 != b.position) return std::nullopt;
    Merge<SubstitutionRecord> m;
    m.merged = {a.position, a.length + b.length + 1, b.novel, b.end_marker};
    m.record = {a_end, a.novel};
    return m;
}

std::optional<Merge<InsertionRecord>> try_merge_insertion(
    const Instruction& a, uint64_t a_end, const Instruction& b) {
    if (a.end_marker) return std::nullopt;
    if (a.position + a.length != b.position) return std::nullopt;
    Merge<InsertionRecord> m;
    m.merged = {a.position, a.length + b.length, b.novel, b.end_marker};
    m.record = {a_end - 1, a.novel};
    return m;
}

std::optional<Merge<DeletionRecord>> try_merge_deletion(
    const Instruction& a, uint64_t a_end, const Instruction& b,
    const Sequence& reference, uint64_t max_deletion) {
    if (a.end_marker) return std::nullopt;
    const uint64_t follow = a.position + a.length + 1; // reference position after a
    if (b.position < follow + 2 || b.position > follow + max_deletion) return std::nullopt;
    if (b.position - 1 > reference.size()) return std::nullopt;
    if (a.novel != reference.at1(b.position - 1)) return std::nullopt;
    Merge<DeletionRecord> m;
    m.merged = {a.position, b.position + b.length - a.position, b.novel, b.end_marker};
    m.record = {a_end - 1, b.position - follow};
    return m;
}

EditSet segment(const std::vector<Instruction>& instructions,
                const Sequence& reference, uint64_t max_deletion) {
    EditSet out;
    if (instructions.empty()) return out;

    Instruction current = instructions.front();
    uint64_t current_end = current.length + (current.end_marker ? 0 : 1);

    for (size_t j = 1; j < instructions.size(); ++j) {
        const Instruction& next = instructions[j];
        const uint64_t next_end = current_end + next.length + (next.end_marker ? 0 : 1);
        if (auto m = try_merge_substitution(current, current_end, next)) {
            out.substitutions.push_back(m->record);
            current = m->merged;
        } else if (auto m = try_merge_insertion(current, current_end, next)) {
            out.insertions.push_back(m->record);
            current = m->merged;
        } else if (auto m = try_merge_deletion(current, current_end, next,
                                               reference, max_deletion)) {
            out.deletions.push_back(m->record);
            current = m->merged;
        } else {
            out.instructions.push_back(current);
            current = next;
        }
        current_end = next_end;
    }
    out.instructions.push_back(current);
    return out;
}

} // namespace rgc
