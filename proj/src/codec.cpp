#include "codec.hpp"

#include <limits>

namespace rgc {

std::vector<uint8_t> compress(const Sequence& target, const Sequence& reference,
                              const CodecParams& params, bool normalized) {
    if (params.window.initial_center == 0 ||
        params.window.initial_center > std::numeric_limits<uint32_t>::max()) {
        throw Error(ErrorCode::BadArgument, "initial window center out of range");
    }
    const std::vector<Instruction> instructions = parse(target, reference, params.window);
    const EditSet edits = segment(instructions, reference, params.max_deletion);

    ContainerParts parts;
    parts.flags = normalized ? kFlagNormalized : 0;
    parts.target_length = target.size();
    parts.window_left = params.window.left;
    parts.window_right = params.window.right;
    parts.recenter_period = params.window.period;
    parts.max_deletion = params.max_deletion;
    parts.initial_center = static_cast<uint32_t>(params.window.initial_center);
    parts.sections = encode_edits(edits);
    return write_container(parts);
}

std::string reconstruct(const EditSet& edits, const Sequence& reference,
                        uint64_t target_length) {
    // Phase 1: expand the instructions into the intermediate string.
    std::string intermediate;
    uint64_t expanded = 0;
    for (const Instruction& f : edits.instructions) {
        expanded += f.length + (f.end_marker ? 0 : 1);
    }
    intermediate.reserve(expanded);
    for (size_t i = 0; i < edits.instructions.size(); ++i) {
        const Instruction& f = edits.instructions[i];
        if (f.length > 0) {
            if (f.position < 1 || f.position - 1 + f.length > reference.size()) {
                throw Error(ErrorCode::Corrupt, "instruction reads past the reference");
            }
            intermediate.append(reference.bases, f.position - 1, f.length);
        }
        if (f.end_marker) {
            if (i + 1 != edits.instructions.size()) {
                throw Error(ErrorCode::Corrupt, "end marker before the final instruction");
            }
        } else {
            intermediate.push_back(f.novel);
        }
    }

    // Phase 2: one merged sweep over the record lists. Deletions drop
    // intermediate characters, insertions emit without consuming,
    // substitutions consume while emitting their own character.
    std::string target;
    target.reserve(target_length);
    size_t cursor = 0; // intermediate read position
    size_t di = 0, ii = 0, si = 0;
    const auto& dels = edits.deletions;
    const auto& inss = edits.insertions;
    const auto& subs = edits.substitutions;
    for (uint64_t t = 1; t <= target_length; ++t) {
        if (di < dels.size() && dels[di].position == t - 1) {
            if (dels[di].length > intermediate.size() - cursor) {
                throw Error(ErrorCode::Corrupt, "deletion skips past the intermediate");
            }
            cursor += dels[di].length;
            ++di;
        }
        if (ii < inss.size() && inss[ii].position == t - 1) {
            target.push_back(inss[ii].value);
            ++ii;
            continue;
        }
        if (cursor >= intermediate.size()) {
            throw Error(ErrorCode::Corrupt, "intermediate exhausted early");
        }
        if (si < subs.size() && subs[si].position == t) {
            target.push_back(subs[si].value);
            ++si;
        } else {
            target.push_back(intermediate[cursor]);
        }
        ++cursor;
    }

    if (di != dels.size() || ii != inss.size() || si != subs.size() ||
        cursor != intermediate.size() || target.size() != target_length) {
        throw Error(ErrorCode::Corrupt, "edit records do not reproduce the target length");
    }
    return target;
}

std::string decompress(const uint8_t* data, size_t size, const Sequence& reference) {
    const ContainerParts parts = read_container(data, size);
    const EditSet edits = decode_edits(parts.sections, parts.target_length);
    return reconstruct(edits, reference, parts.target_length);
}

} // namespace rgc
