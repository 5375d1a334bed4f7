#include "sequence.hpp"

#include <cctype>
#include <fstream>

namespace rgc {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open '" + path + "' for reading");
    }
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw Error(ErrorCode::Io, "read failure on '" + path + "'");
    }
    return data;
}

bool is_sequence_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

} // namespace

Sequence load_sequence(const std::string& path, SequenceFormat format) {
    std::string data = read_file(path);
    Sequence seq;
    if (format == SequenceFormat::Raw) {
        seq.bases = std::move(data);
    } else {
        seq.bases.reserve(data.size());
        size_t i = 0;
        const size_t n = data.size();
        while (i < n) {
            if (data[i] == '>') {
                seq.record_starts.push_back(seq.bases.size());
                while (i < n && data[i] != '\n') ++i; // skip header line
                ++i;
                continue;
            }
            size_t eol = data.find('\n', i);
            if (eol == std::string::npos) eol = n;
            for (size_t j = i; j < eol; ++j) {
                if (!is_sequence_space(data[j])) seq.bases.push_back(data[j]);
            }
            i = eol + 1;
        }
    }
    if (seq.bases.empty()) {
        throw Error(ErrorCode::EmptySequence,
                    "'" + path + "' contains no sequence data");
    }
    return seq;
}

Sequence sequence_from_bytes(std::string bytes) {
    Sequence seq;
    seq.bases = std::move(bytes);
    return seq;
}

Sequence normalize(Sequence s) {
    for (char& c : s.bases) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return s;
}

} // namespace rgc
