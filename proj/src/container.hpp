#ifndef RGC_CONTAINER_HPP
#define RGC_CONTAINER_HPP

#include <cstdint>
#include <vector>

#include "entropy.hpp"

namespace rgc {

// On-disk layout, all multi-byte integers big-endian:
//
//   offset size
//   0      4   magic "RGC1"
//   4      1   flags (bit 0: input was case-normalized)
//   5      8   target length
//   13     4   window left half-width L
//   17     4   window right half-width R
//   21     4   re-centering period M
//   25     4   deletion bound L_max
//   29     4   initial window center
//   33     16  section counts |F| |S| |I| |D|, 4 bytes each
//   49     1   Golomb parameter r for the codebook remainder deltas
//   50     32  per-section bit lengths, 8 bytes each:
//              sign bits, codebook, integer payload, character payload
//   82     -   the four sections in that order, each starting on a byte
//              boundary with zero padding bits
//
// Everything needed to decode (given the reference) lives in the header, so
// no compression-time flags have to be remembered.

inline constexpr char kContainerMagic[4] = {'R', 'G', 'C', '1'};
inline constexpr size_t kContainerHeaderSize = 82;
inline constexpr uint8_t kFlagNormalized = 0x01;

struct ContainerParts {
    uint8_t flags = 0;
    uint64_t target_length = 0;
    uint32_t window_left = 0;
    uint32_t window_right = 0;
    uint32_t recenter_period = 0;
    uint32_t max_deletion = 0;
    uint32_t initial_center = 0;
    EncodedSections sections;
};

std::vector<uint8_t> write_container(const ContainerParts& parts);

/// Rejects wrong magic, truncation and section-length mismatches with
/// distinct error codes; never returns a silently inconsistent result.
ContainerParts read_container(const uint8_t* data, size_t size);

} // namespace rgc

#endif
