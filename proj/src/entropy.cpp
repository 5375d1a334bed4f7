#include "entropy.hpp"

#include <limits>

namespace rgc {

namespace {

uint32_t checked_count(size_t n, const char* what) {
    if (n > std::numeric_limits<uint32_t>::max()) {
        throw Error(ErrorCode::BadArgument, std::string(what) + " section too large");
    }
    return static_cast<uint32_t>(n);
}

} // namespace

IntegerStream build_integer_stream(const EditSet& edits) {
    IntegerStream stream;
    stream.f_count = checked_count(edits.instructions.size(), "F");
    stream.s_count = checked_count(edits.substitutions.size(), "S");
    stream.i_count = checked_count(edits.insertions.size(), "I");
    stream.d_count = checked_count(edits.deletions.size(), "D");
    stream.values.reserve(2 * edits.instructions.size() + edits.substitutions.size() +
                          edits.insertions.size() + 2 * edits.deletions.size());

    uint64_t prev = 0;
    for (const Instruction& f : edits.instructions) {
        if (f.position >= prev) {
            stream.values.push_back(f.position - prev);
            stream.signs.push_back(false);
        } else {
            stream.values.push_back(prev - f.position);
            stream.signs.push_back(true);
        }
        prev = f.position;
    }
    for (const Instruction& f : edits.instructions) stream.values.push_back(f.length);
    prev = 0;
    for (const SubstitutionRecord& s : edits.substitutions) {
        stream.values.push_back(s.position - prev);
        prev = s.position;
    }
    prev = 0;
    for (const InsertionRecord& i : edits.insertions) {
        stream.values.push_back(i.position - prev);
        prev = i.position;
    }
    prev = 0;
    for (const DeletionRecord& d : edits.deletions) {
        stream.values.push_back(d.position - prev);
        prev = d.position;
    }
    for (const DeletionRecord& d : edits.deletions) stream.values.push_back(d.length);
    return stream;
}

void encode_chars(BitWriter& out, const std::string& chars) {
    for (char c : chars) {
        switch (c) {
            case 'A': out.put_bits(0b00, 2); break;
            case 'C': out.put_bits(0b01, 2); break;
            case 'G': out.put_bits(0b10, 2); break;
            case 'T': out.put_bits(0b110, 3); break;
            case 'N': out.put_bits(0b1110, 4); break;
            default:
                out.put_bits(0b1111, 4);
                out.put_bits(static_cast<uint8_t>(c), 8);
                break;
        }
    }
}

std::string decode_chars(BitReader& in, uint64_t count) {
    std::string chars;
    chars.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
        if (in.get_bit() == 0) {
            chars.push_back(in.get_bit() ? 'C' : 'A');
        } else if (in.get_bit() == 0) {
            chars.push_back('G');
        } else if (in.get_bit() == 0) {
            chars.push_back('T');
        } else if (in.get_bit() == 0) {
            chars.push_back('N');
        } else {
            chars.push_back(static_cast<char>(in.get_bits(8)));
        }
    }
    return chars;
}

EncodedSections encode_edits(const EditSet& edits) {
    const IntegerStream stream = build_integer_stream(edits);

    EncodedSections sections;
    sections.f_count = stream.f_count;
    sections.s_count = stream.s_count;
    sections.i_count = stream.i_count;
    sections.d_count = stream.d_count;

    BitWriter signs;
    for (bool negative : stream.signs) signs.put_bit(negative ? 1 : 0);
    sections.sign_bit_length = signs.bit_count();
    sections.sign_bits = signs.take();

    const HuffmanCodebook book = build_codebook(stream.values);
    const uint32_t golomb_r = codebook_golomb_r(book);
    sections.golomb_r = static_cast<uint8_t>(golomb_r);

    BitWriter codebook;
    encode_codebook(codebook, book, golomb_r);
    sections.codebook_bit_length = codebook.bit_count();
    sections.codebook = codebook.take();

    BitWriter payload;
    huffman_encode(payload, stream.values, book);
    sections.payload_bit_length = payload.bit_count();
    sections.payload = payload.take();

    std::string chars;
    chars.reserve(edits.instructions.size() + edits.substitutions.size() +
                  edits.insertions.size());
    for (const Instruction& f : edits.instructions) {
        chars.push_back(f.end_marker ? '\0' : f.novel);
    }
    for (const SubstitutionRecord& s : edits.substitutions) chars.push_back(s.value);
    for (const InsertionRecord& i : edits.insertions) chars.push_back(i.value);

    BitWriter char_bits;
    encode_chars(char_bits, chars);
    sections.char_bit_length = char_bits.bit_count();
    sections.chars = char_bits.take();
    return sections;
}

EditSet decode_edits(const EncodedSections& sections, uint64_t target_length) {
    const uint64_t value_count = 2 * uint64_t{sections.f_count} + sections.s_count +
                                 sections.i_count + 2 * uint64_t{sections.d_count};

    if (sections.sign_bit_length != sections.f_count) {
        throw Error(ErrorCode::SectionMismatch,
                    "sign bit count does not match instruction count");
    }

    BitReader codebook_in(sections.codebook.data(), sections.codebook_bit_length);
    const HuffmanCodebook book = decode_codebook(codebook_in, sections.golomb_r);

    BitReader payload_in(sections.payload.data(), sections.payload_bit_length);
    const std::vector<uint64_t> values = huffman_decode(payload_in, book, value_count);

    BitReader char_in(sections.chars.data(), sections.char_bit_length);
    const std::string chars = decode_chars(
        char_in, uint64_t{sections.f_count} + sections.s_count + sections.i_count);

    BitReader sign_in(sections.sign_bits.data(), sections.sign_bit_length);

    EditSet edits;
    edits.instructions.resize(sections.f_count);
    edits.substitutions.resize(sections.s_count);
    edits.insertions.resize(sections.i_count);
    edits.deletions.resize(sections.d_count);

    size_t v = 0;
    int64_t prev_pos = 0;
    uint64_t copied = 0;   // reference characters expanded by F
    uint64_t deleted = 0;  // reference characters dropped by D
    const auto checked_add = [](uint64_t& acc, uint64_t v) {
        if (v > std::numeric_limits<uint64_t>::max() - acc) {
            throw Error(ErrorCode::Corrupt, "edit set length overflow");
        }
        acc += v;
    };
    for (Instruction& f : edits.instructions) {
        const uint64_t delta = values[v++];
        const bool negative = sign_in.get_bit() != 0;
        if (delta > static_cast<uint64_t>(std::numeric_limits<int64_t>::max()) - 1 ||
            (!negative &&
             prev_pos > std::numeric_limits<int64_t>::max() - static_cast<int64_t>(delta))) {
            throw Error(ErrorCode::Corrupt, "instruction position delta out of range");
        }
        prev_pos += negative ? -static_cast<int64_t>(delta) : static_cast<int64_t>(delta);
        if (prev_pos < 1) {
            throw Error(ErrorCode::Corrupt, "instruction position below 1");
        }
        f.position = static_cast<uint64_t>(prev_pos);
    }
    for (Instruction& f : edits.instructions) {
        f.length = values[v++];
        checked_add(copied, f.length);
    }
    uint64_t prev = 0;
    for (SubstitutionRecord& s : edits.substitutions) {
        checked_add(prev, values[v++]);
        s.position = prev;
    }
    prev = 0;
    for (InsertionRecord& i : edits.insertions) {
        checked_add(prev, values[v++]);
        i.position = prev;
    }
    prev = 0;
    for (DeletionRecord& d : edits.deletions) {
        checked_add(prev, values[v++]);
        d.position = prev;
    }
    for (DeletionRecord& d : edits.deletions) {
        d.length = values[v++];
        checked_add(deleted, d.length);
    }

    // Whether the final instruction ends the target without a novel symbol
    // follows from the length bookkeeping: an intermediate of
    // copied + |F| - has_end_marker characters plus insertions minus
    // deletions must produce the target.
    uint64_t produced = copied;
    checked_add(produced, sections.f_count);
    checked_add(produced, sections.i_count);
    if (produced < deleted || produced - deleted < target_length ||
        produced - deleted - target_length > 1) {
        throw Error(ErrorCode::Corrupt, "edit set does not add up to the target length");
    }
    const bool has_end_marker = (produced - deleted - target_length) == 1;

    size_t c = 0;
    for (size_t i = 0; i < edits.instructions.size(); ++i) {
        Instruction& f = edits.instructions[i];
        const char z = chars[c++];
        if (has_end_marker && i + 1 == edits.instructions.size()) {
            if (z != '\0') {
                throw Error(ErrorCode::Corrupt, "end marker placeholder is not 0x00");
            }
            f.end_marker = true;
        } else {
            f.novel = z;
        }
    }
    for (SubstitutionRecord& s : edits.substitutions) s.value = chars[c++];
    for (InsertionRecord& i : edits.insertions) i.value = chars[c++];
    return edits;
}

} // namespace rgc
