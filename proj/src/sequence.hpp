#ifndef RGC_SEQUENCE_HPP
#define RGC_SEQUENCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace rgc {

/// A loaded nucleotide-like sequence. Positions are 1-based everywhere in
/// this codebase; the underlying storage is a plain byte string. Any byte
/// value is allowed, characters outside {A,C,G,T,N} are just expected to
/// be rare.
struct Sequence {
    std::string bases;
    // 0-based start offset of each FASTA record within `bases`; empty for
    // raw inputs and in-memory sequences.
    std::vector<uint64_t> record_starts;

    uint64_t size() const { return bases.size(); }
    bool empty() const { return bases.empty(); }

    // 1-based access, valid for 1 <= pos <= size().
    char at1(uint64_t pos) const { return bases[pos - 1]; }
};

enum class SequenceFormat {
    Fasta,
    Raw,
};

/// Reads a sequence from disk. In FASTA mode, header lines ('>' prefix) are
/// dropped, line breaks and whitespace are stripped, and multi-record files
/// are concatenated in record order (record boundaries are kept for
/// reporting). Raw mode takes the file bytes as-is.
Sequence load_sequence(const std::string& path, SequenceFormat format);

Sequence sequence_from_bytes(std::string bytes);

/// Uppercases a-z in place of each character; everything else is untouched.
Sequence normalize(Sequence s);

} // namespace rgc

#endif
