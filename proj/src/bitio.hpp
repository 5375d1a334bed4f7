#ifndef RGC_BITIO_HPP
#define RGC_BITIO_HPP

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace rgc {

// MSB-first bit packing; the last byte of a finished stream is zero-padded.

class BitWriter {
public:
    void put_bit(uint32_t bit) {
        if (used_ == 0) bytes_.push_back(0);
        if (bit & 1) bytes_.back() |= static_cast<uint8_t>(0x80u >> used_);
        used_ = (used_ + 1) & 7;
        ++bit_count_;
    }

    // Writes the low `count` bits of `value`, most significant first.
    void put_bits(uint64_t value, uint32_t count) {
        for (uint32_t i = count; i-- > 0;) {
            put_bit(static_cast<uint32_t>(value >> i) & 1u);
        }
    }

    void put_unary(uint64_t quotient) {
        for (uint64_t i = 0; i < quotient; ++i) put_bit(1);
        put_bit(0);
    }

    uint64_t bit_count() const { return bit_count_; }
    const std::vector<uint8_t>& bytes() const { return bytes_; }
    std::vector<uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<uint8_t> bytes_;
    uint32_t used_ = 0; // bits used in the last byte
    uint64_t bit_count_ = 0;
};

class BitReader {
public:
    BitReader(const uint8_t* data, uint64_t bit_length)
        : data_(data), bit_length_(bit_length) {}

    uint32_t get_bit() {
        if (pos_ >= bit_length_) {
            throw Error(ErrorCode::Truncated, "bit stream exhausted");
        }
        const uint32_t bit = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return bit;
    }

    uint64_t get_bits(uint32_t count) {
        uint64_t v = 0;
        for (uint32_t i = 0; i < count; ++i) v = (v << 1) | get_bit();
        return v;
    }

    uint64_t get_unary() {
        uint64_t q = 0;
        while (get_bit()) ++q;
        return q;
    }

    uint64_t position() const { return pos_; }
    uint64_t remaining() const { return bit_length_ - pos_; }

private:
    const uint8_t* data_;
    uint64_t bit_length_;
    uint64_t pos_ = 0;
};

} // namespace rgc

#endif
