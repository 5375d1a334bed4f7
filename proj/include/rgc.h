/* rgc - reference-based genome compression library.
 *
 * C interface over the C++ core: opaque handles, status-code returns,
 * library-owned buffers released with rgc_buffer_free(). All functions are
 * thread-safe for distinct handles; a single handle must not be mutated
 * concurrently.
 */
#ifndef RGC_H
#define RGC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RGC_API __declspec(dllexport)
#else
#define RGC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rgc_status {
    RGC_OK = 0,
    RGC_ERR_IO = 1,              /* file unreadable / write failure */
    RGC_ERR_EMPTY_SEQUENCE = 2,  /* no sequence data after stripping */
    RGC_ERR_BAD_ARGUMENT = 3,    /* null pointer / out-of-range parameter */
    RGC_ERR_BAD_MAGIC = 4,       /* input is not a compressed container */
    RGC_ERR_TRUNCATED = 5,       /* container ends early */
    RGC_ERR_SECTION_MISMATCH = 6,/* declared section lengths are inconsistent */
    RGC_ERR_CORRUPT = 7,         /* streams decode to an impossible edit set */
    RGC_ERR_NOMEM = 8
} rgc_status;

typedef enum rgc_format {
    RGC_FORMAT_FASTA = 0, /* '>' headers dropped, line breaks stripped */
    RGC_FORMAT_RAW = 1    /* file bytes taken verbatim */
} rgc_format;

/* An immutable-length byte sequence; see rgc_sequence_load. */
typedef struct rgc_sequence rgc_sequence;

typedef struct rgc_params {
    uint32_t window_left;     /* L: left half-width of the search window */
    uint32_t window_right;    /* R: right half-width */
    uint32_t recenter_period; /* M: phrases between median re-centerings */
    uint32_t max_deletion;    /* L_max: largest recordable deletion gap */
    uint32_t initial_center;  /* starting window center, 1-based */
} rgc_params;

/* Header fields and section statistics of a container, for inspection. */
typedef struct rgc_container_info {
    uint8_t flags; /* bit 0: sequences were case-normalized */
    uint64_t target_length;
    rgc_params params;
    uint32_t instruction_count;  /* |F| */
    uint32_t substitution_count; /* |S| */
    uint32_t insertion_count;    /* |I| */
    uint32_t deletion_count;     /* |D| */
    uint8_t golomb_r;
    uint64_t sign_bits;     /* per-section payload sizes, in bits */
    uint64_t codebook_bits;
    uint64_t integer_bits;
    uint64_t character_bits;
    uint64_t container_bytes;
} rgc_container_info;

/* Library defaults: L = R = 1000, M = 100, L_max = 1000, center 1. */
RGC_API void rgc_params_init(rgc_params* params);

RGC_API const char* rgc_status_string(rgc_status status);
RGC_API const char* rgc_version(void);

/* On RGC_OK, *out owns the sequence; release with rgc_sequence_free. */
RGC_API rgc_status rgc_sequence_load(const char* path, rgc_format format,
                                     rgc_sequence** out);
RGC_API rgc_status rgc_sequence_from_bytes(const char* data, size_t size,
                                           rgc_sequence** out);
/* Uppercases a-z in place. Destroys case information by design. */
RGC_API void rgc_sequence_normalize(rgc_sequence* seq);
RGC_API size_t rgc_sequence_size(const rgc_sequence* seq);
RGC_API const char* rgc_sequence_bytes(const rgc_sequence* seq);
/* Number of FASTA records the sequence was concatenated from (0 for raw). */
RGC_API size_t rgc_sequence_records(const rgc_sequence* seq);
RGC_API void rgc_sequence_free(rgc_sequence* seq);

/* Compresses `target` against `reference`. On RGC_OK, *out / *out_size
 * describe a malloc'd container; release with rgc_buffer_free. `params`
 * may be NULL for defaults. `normalized` records the header flag. */
RGC_API rgc_status rgc_compress(const rgc_sequence* target,
                                const rgc_sequence* reference,
                                const rgc_params* params, int normalized,
                                uint8_t** out, size_t* out_size);

/* Inverse of rgc_compress given the same reference. The result is the raw
 * target byte string. */
RGC_API rgc_status rgc_decompress(const uint8_t* data, size_t size,
                                  const rgc_sequence* reference, uint8_t** out,
                                  size_t* out_size);

/* Reads header fields and section sizes without decoding payloads. */
RGC_API rgc_status rgc_inspect(const uint8_t* data, size_t size,
                               rgc_container_info* info);

RGC_API void rgc_buffer_free(uint8_t* buffer);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RGC_H */
