#ifndef RGC_CODEC_HPP
#define RGC_CODEC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "container.hpp"
#include "mapper.hpp"
#include "segmenter.hpp"
#include "sequence.hpp"

namespace rgc {

struct CodecParams {
    WindowParams window;          // L, R, M, initial W
    uint32_t max_deletion = 1000; // L_max
};

/// parse -> segment -> entropy-code -> frame. Both sides must use the same
/// (identically normalized) reference; `normalized` only records a header
/// flag for inspection.
std::vector<uint8_t> compress(const Sequence& target, const Sequence& reference,
                              const CodecParams& params, bool normalized);

/// Expands the instructions against the reference, then applies the
/// substitution/insertion/deletion records in one left-to-right sweep.
/// Any position out of range, early exhaustion or final length mismatch is
/// reported as a corrupt container.
std::string reconstruct(const EditSet& edits, const Sequence& reference,
                        uint64_t target_length);

/// Exact inverse of compress, given the same reference.
std::string decompress(const uint8_t* data, size_t size, const Sequence& reference);

} // namespace rgc

#endif
