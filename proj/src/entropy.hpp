#ifndef RGC_ENTROPY_HPP
#define RGC_ENTROPY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bitio.hpp"
#include "huffman.hpp"
#include "segmenter.hpp"

namespace rgc {

/// The edit set's integers flattened into one list, in the fixed order:
/// F-position deltas (absolute values, signs kept separately), F lengths
/// verbatim, S-position deltas, I-position deltas, D-position deltas,
/// D lengths verbatim. Every delta list starts relative to 0.
struct IntegerStream {
    std::vector<uint64_t> values;
    std::vector<bool> signs; // one per F-position delta, true = negative
    uint32_t f_count = 0;
    uint32_t s_count = 0;
    uint32_t i_count = 0;
    uint32_t d_count = 0;
};

IntegerStream build_integer_stream(const EditSet& edits);

/// Fixed prefix table for the character streams: A 00, C 01, G 10, T 110,
/// N 1110, anything else 1111 + the raw byte. The end marker travels as the
/// escaped reserved byte 0x00.
void encode_chars(BitWriter& out, const std::string& chars);
std::string decode_chars(BitReader& in, uint64_t count);

/// Entropy-coded sections in container order, with their exact bit lengths
/// and the Golomb parameter used for the codebook's remainder deltas.
struct EncodedSections {
    uint32_t f_count = 0;
    uint32_t s_count = 0;
    uint32_t i_count = 0;
    uint32_t d_count = 0;
    uint8_t golomb_r = 0;
    uint64_t sign_bit_length = 0;
    uint64_t codebook_bit_length = 0;
    uint64_t payload_bit_length = 0;
    uint64_t char_bit_length = 0;
    std::vector<uint8_t> sign_bits;
    std::vector<uint8_t> codebook;
    std::vector<uint8_t> payload;
    std::vector<uint8_t> chars;
};

EncodedSections encode_edits(const EditSet& edits);

/// Inverse of encode_edits. `target_length` decides whether the final
/// instruction carries an end marker (the character stream holds the
/// escaped 0x00 placeholder either way); any arithmetic inconsistency is
/// reported as a corrupt stream.
EditSet decode_edits(const EncodedSections& sections, uint64_t target_length);

} // namespace rgc

#endif
