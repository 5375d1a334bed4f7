// rgc command-line tool: compress, decompress, inspect and mutate.
// Built entirely on the public C API in rgc.h; exit codes are 0 on
// success, 1 for data/internal errors, 2 for usage errors.

#include <CLI11.hpp>

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "rgc.h"
#include "mutator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct SequenceDeleter {
    void operator()(rgc_sequence* s) const { rgc_sequence_free(s); }
};
using SequencePtr = std::unique_ptr<rgc_sequence, SequenceDeleter>;

struct BufferDeleter {
    void operator()(uint8_t* b) const { rgc_buffer_free(b); }
};
using BufferPtr = std::unique_ptr<uint8_t, BufferDeleter>;

bool require_file(const std::string& path) {
    if (std::filesystem::exists(path)) return true;
    std::fprintf(stderr, "rgc: cannot open '%s': no such file\n", path.c_str());
    return false;
}

SequencePtr load_or_null(const std::string& path, bool raw) {
    rgc_sequence* seq = nullptr;
    const rgc_status rc =
        rgc_sequence_load(path.c_str(), raw ? RGC_FORMAT_RAW : RGC_FORMAT_FASTA, &seq);
    if (rc != RGC_OK) {
        std::fprintf(stderr, "rgc: %s: %s\n", path.c_str(), rgc_status_string(rc));
        return nullptr;
    }
    return SequencePtr(seq);
}

bool read_file(const std::string& path, std::vector<uint8_t>& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "rgc: cannot open '%s'\n", path.c_str());
        return false;
    }
    out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
}

bool write_file(const std::string& path, const void* data, size_t size) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::fprintf(stderr, "rgc: cannot create '%s'\n", path.c_str());
        return false;
    }
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    out.flush();
    if (!out) {
        std::fprintf(stderr, "rgc: write failure on '%s'\n", path.c_str());
        return false;
    }
    return true;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

struct CompressArgs {
    std::string reference, target, output;
    std::vector<uint32_t> window;
    uint32_t period = 100;
    uint32_t lmax = 1000;
    bool raw = false;
    bool no_normalize = false;
};

int run_compress(const CompressArgs& args) {
    if (!require_file(args.reference) || !require_file(args.target)) return kExitUsage;

    SequencePtr reference = load_or_null(args.reference, args.raw);
    SequencePtr target = load_or_null(args.target, args.raw);
    if (!reference || !target) return kExitError;
    for (const auto* seq : {std::make_pair(reference.get(), args.reference.c_str()),
                            std::make_pair(target.get(), args.target.c_str())}) {
        const size_t records = rgc_sequence_records(seq->first);
        if (records > 1) {
            std::fprintf(stderr,
                         "rgc: warning: '%s' has %zu records; they are concatenated and "
                         "headers are not preserved\n",
                         seq->second, records);
        }
    }
    if (!args.no_normalize) {
        rgc_sequence_normalize(reference.get());
        rgc_sequence_normalize(target.get());
    }

    rgc_params params;
    rgc_params_init(&params);
    if (!args.window.empty()) {
        params.window_left = args.window[0];
        params.window_right = args.window[1];
    }
    params.recenter_period = args.period;
    params.max_deletion = args.lmax;

    const auto start = std::chrono::steady_clock::now();
    uint8_t* out = nullptr;
    size_t out_size = 0;
    const rgc_status rc = rgc_compress(target.get(), reference.get(), &params,
                                       args.no_normalize ? 0 : 1, &out, &out_size);
    if (rc != RGC_OK) {
        std::fprintf(stderr, "rgc: compression failed: %s\n", rgc_status_string(rc));
        return kExitError;
    }
    BufferPtr container(out);
    if (!write_file(args.output, out, out_size)) return kExitError;

    const size_t in_size = rgc_sequence_size(target.get());
    std::fprintf(stderr, "input: %zu bytes\noutput: %zu bytes\nratio: %.2f:1\ntime: %.3f s\n",
                 in_size, out_size,
                 out_size ? static_cast<double>(in_size) / static_cast<double>(out_size) : 0.0,
                 seconds_since(start));
    return kExitOk;
}

struct DecompressArgs {
    std::string reference, input, output;
    bool raw = false;
};

int run_decompress(const DecompressArgs& args) {
    if (!require_file(args.reference) || !require_file(args.input)) return kExitUsage;

    std::vector<uint8_t> bytes;
    if (!read_file(args.input, bytes)) return kExitError;

    rgc_container_info info;
    rgc_status rc = rgc_inspect(bytes.data(), bytes.size(), &info);
    if (rc != RGC_OK) {
        std::fprintf(stderr, "rgc: '%s': %s\n", args.input.c_str(), rgc_status_string(rc));
        return kExitError;
    }

    SequencePtr reference = load_or_null(args.reference, args.raw);
    if (!reference) return kExitError;
    if (info.flags & 0x01) rgc_sequence_normalize(reference.get());

    const auto start = std::chrono::steady_clock::now();
    uint8_t* out = nullptr;
    size_t out_size = 0;
    rc = rgc_decompress(bytes.data(), bytes.size(), reference.get(), &out, &out_size);
    if (rc != RGC_OK) {
        std::fprintf(stderr, "rgc: decompression failed: %s\n", rgc_status_string(rc));
        return kExitError;
    }
    BufferPtr target(out);
    if (!write_file(args.output, out, out_size)) return kExitError;
    std::fprintf(stderr, "output: %zu bytes\ntime: %.3f s\n", out_size,
                 seconds_since(start));
    return kExitOk;
}

int run_inspect(const std::string& input) {
    if (!require_file(input)) return kExitUsage;
    std::vector<uint8_t> bytes;
    if (!read_file(input, bytes)) return kExitError;

    rgc_container_info info;
    const rgc_status rc = rgc_inspect(bytes.data(), bytes.size(), &info);
    if (rc != RGC_OK) {
        std::fprintf(stderr, "rgc: '%s': %s\n", input.c_str(), rgc_status_string(rc));
        return kExitError;
    }

    std::printf("container: %s (%" PRIu64 " bytes)\n", input.c_str(), info.container_bytes);
    std::printf("target length: %" PRIu64 "\n", info.target_length);
    std::printf("normalized: %s\n", (info.flags & 0x01) ? "yes" : "no");
    std::printf("window: L=%u R=%u, initial center %u\n", info.params.window_left,
                info.params.window_right, info.params.initial_center);
    std::printf("re-centering period: %u\n", info.params.recenter_period);
    std::printf("max deletion: %u\n", info.params.max_deletion);
    std::printf("sections: F=%u S=%u I=%u D=%u\n", info.instruction_count,
                info.substitution_count, info.insertion_count, info.deletion_count);
    const uint64_t edits = uint64_t{info.substitution_count} + info.insertion_count +
                           info.deletion_count;
    if (edits > 0) {
        std::printf("substitution fraction: %.2f%%\n",
                    100.0 * static_cast<double>(info.substitution_count) /
                        static_cast<double>(edits));
    } else {
        std::printf("substitution fraction: n/a\n");
    }
    std::printf("golomb parameter: %u\n", info.golomb_r);
    std::printf("section bits: signs=%" PRIu64 " codebook=%" PRIu64 " integers=%" PRIu64
                " characters=%" PRIu64 "\n",
                info.sign_bits, info.codebook_bits, info.integer_bits,
                info.character_bits);
    return kExitOk;
}

struct MutateArgs {
    std::string reference, output;
    double sub_rate = 0.0;
    double ins_rate = 0.0;
    double del_rate = 0.0;
    uint32_t max_indel = 10;
    uint64_t seed = 0;
    bool seed_set = false;
    bool raw = false;
};

int run_mutate(const MutateArgs& args) {
    if (!require_file(args.reference)) return kExitUsage;
    SequencePtr reference = load_or_null(args.reference, args.raw);
    if (!reference) return kExitError;

    uint64_t seed = args.seed;
    if (!args.seed_set) {
        seed = std::random_device{}();
    }
    std::fprintf(stderr, "seed: %" PRIu64 "\n", seed);

    rgc_tools::MutationRates rates;
    rates.substitution = args.sub_rate;
    rates.insertion = args.ins_rate;
    rates.deletion = args.del_rate;
    rates.max_indel = args.max_indel;

    try {
        rgc_tools::MutationStats stats;
        const std::string target = rgc_tools::mutate_sequence(
            std::string_view(rgc_sequence_bytes(reference.get()),
                             rgc_sequence_size(reference.get())),
            rates, seed, &stats);
        if (!write_file(args.output, target.data(), target.size())) return kExitError;
        std::fprintf(stderr,
                     "substitutions: %" PRIu64 "\ninsertions: %" PRIu64 " (%" PRIu64
                     " chars)\ndeletions: %" PRIu64 " (%" PRIu64 " chars)\n",
                     stats.substitutions, stats.insertion_events,
                     stats.inserted_characters, stats.deletion_events,
                     stats.deleted_characters);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "rgc: %s\n", e.what());
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rgc - lossless reference-based genome compressor"};
    app.require_subcommand(1);

    CompressArgs compress_args;
    CLI::App* compress = app.add_subcommand("compress", "Compress a target against a reference");
    compress->add_option("-r,--reference", compress_args.reference, "Reference sequence file")
        ->required();
    compress->add_option("-t,--target", compress_args.target, "Target sequence file")
        ->required();
    compress->add_option("-o,--output", compress_args.output, "Output container file")
        ->required();
    compress->add_option("--window", compress_args.window,
                         "Window half-widths L R (default 1000 1000)")
        ->expected(2);
    compress->add_option("--period", compress_args.period,
                         "Phrases between window re-centerings (default 100)");
    compress->add_option("--lmax", compress_args.lmax,
                         "Largest recordable deletion gap (default 1000)");
    compress->add_flag("--raw", compress_args.raw, "Inputs are raw bytes, not FASTA");
    compress->add_flag("--fasta", [](int64_t) {}, "Inputs are FASTA (default)");
    compress->add_flag("--no-normalize", compress_args.no_normalize,
                       "Keep lowercase characters as-is");

    DecompressArgs decompress_args;
    CLI::App* decompress = app.add_subcommand("decompress", "Reconstruct a target from a container");
    decompress->add_option("-r,--reference", decompress_args.reference, "Reference sequence file")
        ->required();
    decompress->add_option("-i,--input", decompress_args.input, "Container file")->required();
    decompress->add_option("-o,--output", decompress_args.output, "Output sequence file")
        ->required();
    decompress->add_flag("--raw", decompress_args.raw, "Reference is raw bytes, not FASTA");

    std::string inspect_input;
    CLI::App* inspect = app.add_subcommand("inspect", "Print container header and statistics");
    inspect->add_option("-i,--input", inspect_input, "Container file")->required();

    MutateArgs mutate_args;
    CLI::App* mutate = app.add_subcommand("mutate", "Generate a synthetic mutated target");
    mutate->add_option("-r,--reference", mutate_args.reference, "Reference sequence file")
        ->required();
    mutate->add_option("-o,--output", mutate_args.output, "Output target file")->required();
    mutate->add_option("--sub-rate", mutate_args.sub_rate, "Per-base substitution rate");
    mutate->add_option("--ins-rate", mutate_args.ins_rate, "Per-base insertion rate");
    mutate->add_option("--del-rate", mutate_args.del_rate, "Per-base deletion rate");
    mutate->add_option("--max-indel", mutate_args.max_indel, "Largest indel length (default 10)");
    mutate->add_option("--seed", mutate_args.seed, "Random seed (default: drawn and printed)")
        ->each([&](const std::string&) { mutate_args.seed_set = true; });
    mutate->add_flag("--raw", mutate_args.raw, "Reference is raw bytes, not FASTA");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (compress->parsed()) return run_compress(compress_args);
    if (decompress->parsed()) return run_decompress(decompress_args);
    if (inspect->parsed()) return run_inspect(inspect_input);
    if (mutate->parsed()) return run_mutate(mutate_args);
    return kExitUsage;
}
