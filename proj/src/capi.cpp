#include "rgc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>

#include "codec.hpp"
#include "container.hpp"
#include "sequence.hpp"

struct rgc_sequence {
    rgc::Sequence seq;
};

namespace {

rgc_status status_from(const rgc::Error& e) {
    switch (e.code()) {
        case rgc::ErrorCode::Io: return RGC_ERR_IO;
        case rgc::ErrorCode::EmptySequence: return RGC_ERR_EMPTY_SEQUENCE;
        case rgc::ErrorCode::BadArgument: return RGC_ERR_BAD_ARGUMENT;
        case rgc::ErrorCode::BadMagic: return RGC_ERR_BAD_MAGIC;
        case rgc::ErrorCode::Truncated: return RGC_ERR_TRUNCATED;
        case rgc::ErrorCode::SectionMismatch: return RGC_ERR_SECTION_MISMATCH;
        case rgc::ErrorCode::Corrupt: return RGC_ERR_CORRUPT;
    }
    return RGC_ERR_BAD_ARGUMENT;
}

template <typename Fn>
rgc_status guarded(Fn&& fn) {
    try {
        fn();
        return RGC_OK;
    } catch (const rgc::Error& e) {
        return status_from(e);
    } catch (const std::bad_alloc&) {
        return RGC_ERR_NOMEM;
    } catch (...) {
        return RGC_ERR_BAD_ARGUMENT;
    }
}

rgc_status copy_out(const uint8_t* data, size_t size, uint8_t** out, size_t* out_size) {
    uint8_t* buffer = static_cast<uint8_t*>(std::malloc(size ? size : 1));
    if (!buffer) return RGC_ERR_NOMEM;
    std::memcpy(buffer, data, size);
    *out = buffer;
    *out_size = size;
    return RGC_OK;
}

rgc::CodecParams to_codec_params(const rgc_params* params) {
    rgc_params defaults;
    if (!params) {
        rgc_params_init(&defaults);
        params = &defaults;
    }
    rgc::CodecParams p;
    p.window.left = params->window_left;
    p.window.right = params->window_right;
    p.window.period = params->recenter_period;
    p.window.initial_center = params->initial_center;
    p.max_deletion = params->max_deletion;
    return p;
}

} // namespace

extern "C" {

void rgc_params_init(rgc_params* params) {
    if (!params) return;
    params->window_left = 1000;
    params->window_right = 1000;
    params->recenter_period = 100;
    params->max_deletion = 1000;
    params->initial_center = 1;
}

const char* rgc_status_string(rgc_status status) {
    switch (status) {
        case RGC_OK: return "ok";
        case RGC_ERR_IO: return "I/O failure";
        case RGC_ERR_EMPTY_SEQUENCE: return "empty sequence";
        case RGC_ERR_BAD_ARGUMENT: return "bad argument";
        case RGC_ERR_BAD_MAGIC: return "not a compressed container";
        case RGC_ERR_TRUNCATED: return "truncated container";
        case RGC_ERR_SECTION_MISMATCH: return "container section mismatch";
        case RGC_ERR_CORRUPT: return "corrupt container";
        case RGC_ERR_NOMEM: return "out of memory";
    }
    return "unknown status";
}

const char* rgc_version(void) { return "1.0.0"; }

rgc_status rgc_sequence_load(const char* path, rgc_format format, rgc_sequence** out) {
    if (!path || !out) return RGC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        auto handle = std::make_unique<rgc_sequence>();
        handle->seq = rgc::load_sequence(path, format == RGC_FORMAT_RAW
                                                   ? rgc::SequenceFormat::Raw
                                                   : rgc::SequenceFormat::Fasta);
        *out = handle.release();
    });
}

rgc_status rgc_sequence_from_bytes(const char* data, size_t size, rgc_sequence** out) {
    if (!data || !out) return RGC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        auto handle = std::make_unique<rgc_sequence>();
        handle->seq = rgc::sequence_from_bytes(std::string(data, size));
        if (handle->seq.empty()) {
            throw rgc::Error(rgc::ErrorCode::EmptySequence, "empty sequence");
        }
        *out = handle.release();
    });
}

void rgc_sequence_normalize(rgc_sequence* seq) {
    if (!seq) return;
    seq->seq = rgc::normalize(std::move(seq->seq));
}

size_t rgc_sequence_size(const rgc_sequence* seq) {
    return seq ? seq->seq.size() : 0;
}

const char* rgc_sequence_bytes(const rgc_sequence* seq) {
    return seq ? seq->seq.bases.data() : nullptr;
}

size_t rgc_sequence_records(const rgc_sequence* seq) {
    return seq ? seq->seq.record_starts.size() : 0;
}

void rgc_sequence_free(rgc_sequence* seq) { delete seq; }

rgc_status rgc_compress(const rgc_sequence* target, const rgc_sequence* reference,
                        const rgc_params* params, int normalized, uint8_t** out,
                        size_t* out_size) {
    if (!target || !reference || !out || !out_size) return RGC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        const std::vector<uint8_t> bytes =
            rgc::compress(target->seq, reference->seq, to_codec_params(params),
                          normalized != 0);
        const rgc_status rc = copy_out(bytes.data(), bytes.size(), out, out_size);
        if (rc != RGC_OK) throw std::bad_alloc();
    });
}

rgc_status rgc_decompress(const uint8_t* data, size_t size,
                          const rgc_sequence* reference, uint8_t** out,
                          size_t* out_size) {
    if (!data || !reference || !out || !out_size) return RGC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        const std::string target = rgc::decompress(data, size, reference->seq);
        const rgc_status rc = copy_out(reinterpret_cast<const uint8_t*>(target.data()),
                                       target.size(), out, out_size);
        if (rc != RGC_OK) throw std::bad_alloc();
    });
}

rgc_status rgc_inspect(const uint8_t* data, size_t size, rgc_container_info* info) {
    if (!data || !info) return RGC_ERR_BAD_ARGUMENT;
    return guarded([&] {
        const rgc::ContainerParts parts = rgc::read_container(data, size);
        info->flags = parts.flags;
        info->target_length = parts.target_length;
        info->params.window_left = parts.window_left;
        info->params.window_right = parts.window_right;
        info->params.recenter_period = parts.recenter_period;
        info->params.max_deletion = parts.max_deletion;
        info->params.initial_center = parts.initial_center;
        info->instruction_count = parts.sections.f_count;
        info->substitution_count = parts.sections.s_count;
        info->insertion_count = parts.sections.i_count;
        info->deletion_count = parts.sections.d_count;
        info->golomb_r = parts.sections.golomb_r;
        info->sign_bits = parts.sections.sign_bit_length;
        info->codebook_bits = parts.sections.codebook_bit_length;
        info->integer_bits = parts.sections.payload_bit_length;
        info->character_bits = parts.sections.char_bit_length;
        info->container_bytes = size;
    });
}

void rgc_buffer_free(uint8_t* buffer) { std::free(buffer); }

} // extern "C"
