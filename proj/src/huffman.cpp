#include "huffman.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

namespace rgc {

namespace {

struct CanonicalLayout {
    // Symbols reordered by (length, symbol) plus, per length, the first
    // canonical code and the index of its first symbol.
    std::vector<uint64_t> ordered_symbols;
    std::vector<uint8_t> ordered_lengths;
    uint32_t first_code[kMaxCodeLength + 1] = {};
    uint32_t first_index[kMaxCodeLength + 1] = {};
    uint32_t count[kMaxCodeLength + 1] = {};
};

CanonicalLayout canonical_layout(const HuffmanCodebook& book) {
    CanonicalLayout lay;
    const size_t n = book.size();
    std::vector<uint32_t> order(n);
    for (uint32_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return book.code_lengths[a] < book.code_lengths[b];
    });
    lay.ordered_symbols.reserve(n);
    lay.ordered_lengths.reserve(n);
    for (uint32_t idx : order) {
        lay.ordered_symbols.push_back(book.symbols[idx]);
        lay.ordered_lengths.push_back(book.code_lengths[idx]);
        ++lay.count[book.code_lengths[idx]];
    }
    uint32_t code = 0;
    uint32_t index = 0;
    for (uint32_t len = 1; len <= kMaxCodeLength; ++len) {
        code = (code + lay.count[len - 1]) << 1;
        lay.first_code[len] = code;
        lay.first_index[len] = index;
        index += lay.count[len];
    }
    return lay;
}

} // namespace

bool HuffmanCodebook::valid_kraft() const {
    if (symbols.size() != code_lengths.size()) return false;
    if (symbols.empty()) return true;
    if (symbols.size() == 1) return code_lengths[0] == 1;
    uint64_t sum = 0;
    for (uint8_t len : code_lengths) {
        if (len == 0 || len > kMaxCodeLength) return false;
        sum += uint64_t{1} << (kMaxCodeLength - len);
    }
    return sum == (uint64_t{1} << kMaxCodeLength);
}

HuffmanCodebook build_codebook(std::span<const uint64_t> values) {
    HuffmanCodebook book;
    if (values.empty()) return book;

    std::map<uint64_t, uint64_t> freq;
    for (uint64_t v : values) ++freq[v];

    const size_t n = freq.size();
    book.symbols.reserve(n);
    std::vector<uint64_t> weights;
    weights.reserve(n);
    for (const auto& [sym, count] : freq) {
        book.symbols.push_back(sym);
        weights.push_back(count);
    }

    // Largest N with 1..N all present; 0 is handled with the remainder.
    uint64_t expected = 1;
    for (uint64_t sym : book.symbols) {
        if (sym == 0) continue;
        if (sym != expected) break;
        ++expected;
    }
    book.consecutive_run = expected - 1;

    if (n == 1) {
        book.code_lengths = {1};
        return book;
    }

    // Two-queue Huffman on leaves sorted by weight (stable in symbol order),
    // then depth extraction through parent links.
    std::vector<uint32_t> leaf_order(n);
    for (uint32_t i = 0; i < n; ++i) leaf_order[i] = i;
    std::stable_sort(leaf_order.begin(), leaf_order.end(),
                     [&](uint32_t a, uint32_t b) { return weights[a] < weights[b]; });

    const uint32_t total_nodes = static_cast<uint32_t>(2 * n - 1);
    std::vector<uint64_t> node_weight(total_nodes);
    std::vector<uint32_t> parent(total_nodes, 0);
    for (uint32_t i = 0; i < n; ++i) node_weight[i] = weights[leaf_order[i]];

    uint32_t leaf_head = 0;
    uint32_t internal_head = static_cast<uint32_t>(n);
    uint32_t internal_tail = static_cast<uint32_t>(n);
    auto pop_min = [&]() {
        if (leaf_head < n &&
            (internal_head == internal_tail ||
             node_weight[leaf_head] <= node_weight[internal_head])) {
            return leaf_head++;
        }
        return internal_head++;
    };
    for (uint32_t next = static_cast<uint32_t>(n); next < total_nodes; ++next) {
        const uint32_t a = pop_min();
        const uint32_t b = pop_min();
        node_weight[next] = node_weight[a] + node_weight[b];
        parent[a] = next;
        parent[b] = next;
        internal_tail = next + 1;
    }

    std::vector<uint32_t> depth(total_nodes, 0);
    for (uint32_t node = total_nodes - 1; node-- > 0;) {
        depth[node] = depth[parent[node]] + 1;
    }

    uint32_t max_depth = 0;
    std::vector<uint32_t> leaf_depth(n);
    for (uint32_t i = 0; i < n; ++i) {
        leaf_depth[i] = depth[i];
        max_depth = std::max(max_depth, depth[i]);
    }

    book.code_lengths.assign(n, 0);
    if (max_depth <= kMaxCodeLength) {
        for (uint32_t i = 0; i < n; ++i) {
            book.code_lengths[leaf_order[i]] = static_cast<uint8_t>(leaf_depth[i]);
        }
        return book;
    }

    // Depth overflow: rebalance the length histogram (the deepest nonzero
    // level always holds an even leaf count, so pairs can move up), then
    // hand lengths back shortest-first to the most frequent symbols.
    std::vector<uint32_t> hist(max_depth + 1, 0);
    for (uint32_t d : leaf_depth) ++hist[d];
    for (uint32_t d = max_depth; d > kMaxCodeLength; --d) {
        while (hist[d] > 0) {
            uint32_t j = d - 2;
            while (j > 0 && hist[j] == 0) --j;
            hist[d] -= 2;
            hist[d - 1] += 1;
            hist[j] -= 1;
            hist[j + 1] += 2;
        }
    }
    std::vector<uint8_t> lengths;
    lengths.reserve(n);
    for (uint32_t d = 1; d <= kMaxCodeLength; ++d) {
        lengths.insert(lengths.end(), hist[d], static_cast<uint8_t>(d));
    }
    // leaf_order is sorted by ascending weight; longest codes go there first.
    for (uint32_t i = 0; i < n; ++i) {
        book.code_lengths[leaf_order[i]] = lengths[n - 1 - i];
    }
    return book;
}

void huffman_encode(BitWriter& out, std::span<const uint64_t> values,
                    const HuffmanCodebook& book) {
    if (values.empty()) return;
    const CanonicalLayout lay = canonical_layout(book);
    std::unordered_map<uint64_t, std::pair<uint32_t, uint8_t>> codes;
    codes.reserve(book.size());
    for (size_t i = 0; i < lay.ordered_symbols.size(); ++i) {
        const uint8_t len = lay.ordered_lengths[i];
        const uint32_t code =
            lay.first_code[len] + (static_cast<uint32_t>(i) - lay.first_index[len]);
        codes.emplace(lay.ordered_symbols[i], std::make_pair(code, len));
    }
    for (uint64_t v : values) {
        auto it = codes.find(v);
        if (it == codes.end()) {
            throw Error(ErrorCode::BadArgument, "value missing from codebook");
        }
        out.put_bits(it->second.first, it->second.second);
    }
}

std::vector<uint64_t> huffman_decode(BitReader& in, const HuffmanCodebook& book,
                                     uint64_t count) {
    std::vector<uint64_t> out;
    if (count == 0) return out;
    if (book.size() == 0) {
        throw Error(ErrorCode::Corrupt, "nonzero symbol count with empty codebook");
    }
    out.reserve(count);
    const CanonicalLayout lay = canonical_layout(book);
    for (uint64_t i = 0; i < count; ++i) {
        uint32_t code = 0;
        uint32_t len = 0;
        for (;;) {
            code = (code << 1) | in.get_bit();
            ++len;
            if (len > kMaxCodeLength) {
                throw Error(ErrorCode::Corrupt, "over-long Huffman code");
            }
            const uint32_t offset = code - lay.first_code[len];
            if (lay.count[len] != 0 && code >= lay.first_code[len] &&
                offset < lay.count[len]) {
                out.push_back(lay.ordered_symbols[lay.first_index[len] + offset]);
                break;
            }
        }
    }
    return out;
}

void golomb_encode(BitWriter& out, uint64_t value, uint32_t r) {
    out.put_unary(value >> r);
    out.put_bits(value & ((uint64_t{1} << r) - 1), r);
}

uint64_t golomb_decode(BitReader& in, uint32_t r) {
    const uint64_t q = in.get_unary();
    if (r < 64 && q > (std::numeric_limits<uint64_t>::max() >> r)) {
        throw Error(ErrorCode::Corrupt, "Golomb quotient out of range");
    }
    return (q << r) | in.get_bits(r);
}

uint32_t best_golomb_r(std::span<const uint64_t> values) {
    uint32_t best_r = 0;
    uint64_t best_bits = std::numeric_limits<uint64_t>::max();
    for (uint32_t r = 0; r <= 31; ++r) {
        uint64_t bits = 0;
        for (uint64_t v : values) bits += (v >> r) + 1 + r;
        if (bits < best_bits) {
            best_bits = bits;
            best_r = r;
        }
    }
    return best_r;
}

uint32_t codebook_golomb_r(const HuffmanCodebook& book) {
    std::vector<uint64_t> deltas;
    uint64_t prev = book.consecutive_run;
    for (uint64_t sym : book.symbols) {
        if (sym == 0 || sym <= book.consecutive_run) continue;
        deltas.push_back(sym - prev);
        prev = sym;
    }
    return best_golomb_r(deltas);
}

void encode_codebook(BitWriter& out, const HuffmanCodebook& book, uint32_t golomb_r) {
    if (!book.valid_kraft()) {
        throw Error(ErrorCode::BadArgument, "codebook code lengths violate Kraft equality");
    }
    const bool zero_present = !book.symbols.empty() && book.symbols.front() == 0;
    uint64_t remainder = 0;
    for (uint64_t sym : book.symbols) {
        if (sym != 0 && sym > book.consecutive_run) ++remainder;
    }
    out.put_bit(zero_present ? 1 : 0);
    out.put_bits(book.consecutive_run, 32);
    out.put_bits(remainder, 32);
    uint64_t prev = book.consecutive_run;
    for (uint64_t sym : book.symbols) {
        if (sym == 0 || sym <= book.consecutive_run) continue;
        golomb_encode(out, sym - prev, golomb_r);
        prev = sym;
    }
    for (uint8_t len : book.code_lengths) out.put_bits(len, 8);
}

HuffmanCodebook decode_codebook(BitReader& in, uint32_t golomb_r) {
    HuffmanCodebook book;
    const bool zero_present = in.get_bit() != 0;
    const uint64_t run = in.get_bits(32);
    const uint64_t remainder = in.get_bits(32);
    const uint64_t total = (zero_present ? 1 : 0) + run + remainder;
    // Each symbol still owes an 8-bit code length, which bounds plausible
    // counts long before allocation.
    if (total > in.remaining() / 8) {
        throw Error(ErrorCode::Corrupt, "codebook symbol count exceeds stream size");
    }
    book.consecutive_run = run;
    book.symbols.reserve(total);
    if (zero_present) book.symbols.push_back(0);
    for (uint64_t s = 1; s <= run; ++s) book.symbols.push_back(s);
    uint64_t prev = run;
    for (uint64_t i = 0; i < remainder; ++i) {
        const uint64_t delta = golomb_decode(in, golomb_r);
        if (delta == 0) {
            throw Error(ErrorCode::Corrupt, "non-increasing codebook symbol");
        }
        prev += delta;
        book.symbols.push_back(prev);
    }
    book.code_lengths.reserve(total);
    for (uint64_t i = 0; i < total; ++i) {
        book.code_lengths.push_back(static_cast<uint8_t>(in.get_bits(8)));
    }
    if (!book.valid_kraft()) {
        throw Error(ErrorCode::Corrupt, "codebook code lengths violate Kraft equality");
    }
    return book;
}

} // namespace rgc
