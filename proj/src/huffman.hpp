#ifndef RGC_HUFFMAN_HPP
#define RGC_HUFFMAN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bitio.hpp"

namespace rgc {

inline constexpr uint32_t kMaxCodeLength = 32;

/// Canonical Huffman codebook over arbitrary 64-bit integer symbols.
/// Codes are fully determined by (symbols ascending, code_lengths), so only
/// those travel in the container. `consecutive_run` is the largest N such
/// that 1..N are all present; those symbols never need their values stored.
struct HuffmanCodebook {
    std::vector<uint64_t> symbols;      // ascending
    std::vector<uint8_t> code_lengths;  // parallel to symbols, each in [1, 32]
    uint64_t consecutive_run = 0;

    size_t size() const { return symbols.size(); }
    bool valid_kraft() const;
};

/// Optimal code lengths for the distinct values of `values` (frequencies are
/// empirical), deterministic under ties, depth-limited to kMaxCodeLength.
/// A single-symbol alphabet gets the one-bit code "0".
HuffmanCodebook build_codebook(std::span<const uint64_t> values);

/// Encodes `values` under the canonical code of `book`.
void huffman_encode(BitWriter& out, std::span<const uint64_t> values,
                    const HuffmanCodebook& book);

/// Decodes exactly `count` symbols.
std::vector<uint64_t> huffman_decode(BitReader& in, const HuffmanCodebook& book,
                                     uint64_t count);

/// Golomb-Rice code with power-of-two parameter m = 2^r: unary quotient
/// (ones terminated by a zero) followed by the r-bit remainder.
void golomb_encode(BitWriter& out, uint64_t value, uint32_t r);
uint64_t golomb_decode(BitReader& in, uint32_t r);

/// Parameter in [0, 31] minimizing the total Golomb-coded size of `values`
/// (smallest r on ties).
uint32_t best_golomb_r(std::span<const uint64_t> values);

/// Codebook wire format, in order: a zero-symbol-present flag (the run is
/// defined to start at 1, so a zero symbol travels with the remainder
/// values), the run bound N, the count of remainder symbols above N, their
/// deltas Golomb-coded with `golomb_r` (first delta relative to N), and one
/// 8-bit code length per symbol in ascending symbol order.
void encode_codebook(BitWriter& out, const HuffmanCodebook& book, uint32_t golomb_r);
HuffmanCodebook decode_codebook(BitReader& in, uint32_t golomb_r);

/// The r the codebook encoder would pick for `book`'s remainder deltas.
uint32_t codebook_golomb_r(const HuffmanCodebook& book);

} // namespace rgc

#endif
