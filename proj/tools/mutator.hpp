#ifndef RGC_TOOLS_MUTATOR_HPP
#define RGC_TOOLS_MUTATOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

// Synthetic mutation of a reference sequence into a plausible target:
// per-base point substitutions plus short insertions and deletions. Test
// harness machinery, deliberately kept out of the codec library.

namespace rgc_tools {

struct MutationRates {
    double substitution = 0.0;
    double insertion = 0.0;
    double deletion = 0.0;
    uint32_t max_indel = 1;
};

struct MutationStats {
    uint64_t substitutions = 0;
    uint64_t insertion_events = 0;
    uint64_t deletion_events = 0;
    uint64_t inserted_characters = 0;
    uint64_t deleted_characters = 0;
};

inline std::string mutate_sequence(std::string_view reference, const MutationRates& rates,
                                   uint64_t seed, MutationStats* stats = nullptr) {
    if (rates.substitution < 0 || rates.insertion < 0 || rates.deletion < 0 ||
        rates.substitution + rates.insertion + rates.deletion >= 1.0) {
        throw std::invalid_argument("mutation rates must be non-negative and sum below 1");
    }
    if (rates.max_indel < 1) {
        throw std::invalid_argument("max indel length must be at least 1");
    }

    static constexpr char kAlphabet[4] = {'A', 'C', 'G', 'T'};
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    auto indel_length = [&](uint32_t max) { return 1 + rng() % max; };

    MutationStats local;
    std::string target;
    target.reserve(reference.size() + reference.size() / 16);

    const double del_edge = rates.deletion;
    const double ins_edge = del_edge + rates.insertion;
    const double sub_edge = ins_edge + rates.substitution;

    size_t i = 0;
    while (i < reference.size()) {
        const double u = uniform();
        if (u < del_edge) {
            const uint64_t len = indel_length(rates.max_indel);
            const uint64_t actual = std::min<uint64_t>(len, reference.size() - i);
            i += actual;
            ++local.deletion_events;
            local.deleted_characters += actual;
            continue;
        }
        if (u < ins_edge) {
            const uint64_t len = indel_length(rates.max_indel);
            for (uint64_t j = 0; j < len; ++j) target.push_back(kAlphabet[rng() % 4]);
            ++local.insertion_events;
            local.inserted_characters += len;
            // fall through to copy the current base after the insert
        } else if (u < sub_edge) {
            const char original = reference[i];
            char replacement = kAlphabet[rng() % 4];
            while (replacement == original) replacement = kAlphabet[rng() % 4];
            target.push_back(replacement);
            ++local.substitutions;
            ++i;
            continue;
        }
        target.push_back(reference[i]);
        ++i;
    }

    if (stats) *stats = local;
    return target;
}

} // namespace rgc_tools

#endif
