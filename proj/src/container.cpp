#include "container.hpp"

#include <cstring>

namespace rgc {

namespace {

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    put_u32(out, static_cast<uint32_t>(v >> 32));
    put_u32(out, static_cast<uint32_t>(v));
}

uint32_t get_u32(const uint8_t* p) {
    return (uint32_t{p[0]} << 24) | (uint32_t{p[1]} << 16) | (uint32_t{p[2]} << 8) |
           uint32_t{p[3]};
}

uint64_t get_u64(const uint8_t* p) {
    return (uint64_t{get_u32(p)} << 32) | get_u32(p + 4);
}

size_t section_bytes(uint64_t bit_length) {
    return static_cast<size_t>((bit_length + 7) / 8);
}

void append_section(std::vector<uint8_t>& out, const std::vector<uint8_t>& section,
                    uint64_t bit_length) {
    if (section.size() != section_bytes(bit_length)) {
        throw Error(ErrorCode::BadArgument, "section buffer does not match its bit length");
    }
    out.insert(out.end(), section.begin(), section.end());
}

void read_section(const uint8_t*& p, const uint8_t* end, std::vector<uint8_t>& section,
                  uint64_t bit_length) {
    const size_t bytes = section_bytes(bit_length);
    if (static_cast<size_t>(end - p) < bytes) {
        throw Error(ErrorCode::Truncated, "container ends inside a section");
    }
    if (bit_length % 8 != 0) {
        const uint8_t padding_mask = static_cast<uint8_t>(0xFFu >> (bit_length % 8));
        if ((p[bytes - 1] & padding_mask) != 0) {
            throw Error(ErrorCode::SectionMismatch, "nonzero padding bits in section");
        }
    }
    section.assign(p, p + bytes);
    p += bytes;
}

} // namespace

std::vector<uint8_t> write_container(const ContainerParts& parts) {
    const EncodedSections& s = parts.sections;
    std::vector<uint8_t> out;
    out.reserve(kContainerHeaderSize + s.sign_bits.size() + s.codebook.size() +
                s.payload.size() + s.chars.size());
    out.insert(out.end(), kContainerMagic, kContainerMagic + 4);
    out.push_back(parts.flags);
    put_u64(out, parts.target_length);
    put_u32(out, parts.window_left);
    put_u32(out, parts.window_right);
    put_u32(out, parts.recenter_period);
    put_u32(out, parts.max_deletion);
    put_u32(out, parts.initial_center);
    put_u32(out, s.f_count);
    put_u32(out, s.s_count);
    put_u32(out, s.i_count);
    put_u32(out, s.d_count);
    out.push_back(s.golomb_r);
    put_u64(out, s.sign_bit_length);
    put_u64(out, s.codebook_bit_length);
    put_u64(out, s.payload_bit_length);
    put_u64(out, s.char_bit_length);
    append_section(out, s.sign_bits, s.sign_bit_length);
    append_section(out, s.codebook, s.codebook_bit_length);
    append_section(out, s.payload, s.payload_bit_length);
    append_section(out, s.chars, s.char_bit_length);
    return out;
}

ContainerParts read_container(const uint8_t* data, size_t size) {
    if (size < 4 || std::memcmp(data, kContainerMagic, 4) != 0) {
        throw Error(ErrorCode::BadMagic, "not a compressed genome container");
    }
    if (size < kContainerHeaderSize) {
        throw Error(ErrorCode::Truncated, "container shorter than its header");
    }

    ContainerParts parts;
    EncodedSections& s = parts.sections;
    parts.flags = data[4];
    parts.target_length = get_u64(data + 5);
    parts.window_left = get_u32(data + 13);
    parts.window_right = get_u32(data + 17);
    parts.recenter_period = get_u32(data + 21);
    parts.max_deletion = get_u32(data + 25);
    parts.initial_center = get_u32(data + 29);
    s.f_count = get_u32(data + 33);
    s.s_count = get_u32(data + 37);
    s.i_count = get_u32(data + 41);
    s.d_count = get_u32(data + 45);
    s.golomb_r = data[49];
    s.sign_bit_length = get_u64(data + 50);
    s.codebook_bit_length = get_u64(data + 58);
    s.payload_bit_length = get_u64(data + 66);
    s.char_bit_length = get_u64(data + 74);

    if (s.sign_bit_length != s.f_count) {
        throw Error(ErrorCode::SectionMismatch,
                    "sign bit count does not match instruction count");
    }

    const uint8_t* p = data + kContainerHeaderSize;
    const uint8_t* end = data + size;
    read_section(p, end, s.sign_bits, s.sign_bit_length);
    read_section(p, end, s.codebook, s.codebook_bit_length);
    read_section(p, end, s.payload, s.payload_bit_length);
    read_section(p, end, s.chars, s.char_bit_length);
    if (p != end) {
        throw Error(ErrorCode::SectionMismatch, "trailing bytes after the last section");
    }
    return parts;
}

} // namespace rgc
