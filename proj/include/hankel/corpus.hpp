#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hankel/rational.hpp"
#include "hankel/sequence.hpp"

namespace hankel {

// splitmix64 (Steele/Lea/Flood constants). Chosen over std::mt19937 +
// distributions so that generated corpora are identical on every platform
// and standard library; verify reports must be byte-reproducible from the
// seed alone.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Small integer in [-9, 9]: next() mod 19, shifted.
    long next_small() { return static_cast<long>(next() % 19) - 9; }
};

// `count` integer sequences of length `len` with entries in [-9, 9], drawn
// from a single splitmix64 stream in order.
inline std::vector<Seq> random_corpus(std::uint64_t seed, std::size_t count,
                                      std::size_t len) {
    SplitMix64 gen(seed);
    std::vector<Seq> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Seq s;
        s.values.reserve(len);
        for (std::size_t j = 0; j < len; ++j)
            s.values.push_back(Rat(gen.next_small()));
        s.label = "rand-" + std::to_string(i);
        corpus.push_back(std::move(s));
    }
    return corpus;
}

} // namespace hankel
