#pragma once

#include <cstdint>

#include "preab/category.hpp"

namespace preab {

// Deterministic PRNG (splitmix64). The standard <random> distributions are
// implementation-defined; corpora must be byte-identical across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

// The finite set of morphisms over which universally quantified properties
// are probed. The curated prefix carries the named fixtures; the rest is a
// seeded random extension.
struct ProbeCorpus {
    std::string instance;
    std::uint64_t seed = 0;
    std::size_t curated_count = 0;
    std::vector<Morphism> probes;

    std::size_t random_count() const { return probes.size() - curated_count; }
    std::string fingerprint() const;
};

// Every matrix with entries in {-1, 0, 1} up to shape 2x2, including the
// degenerate shapes through the zero object.
std::vector<Morphism> exhaustive_vectq_small();

// Curated fixtures per instance (the named witnesses live here).
std::vector<Morphism> curated_probes(const std::string& instance);

ProbeCorpus default_corpus(const std::string& instance, std::uint64_t seed,
                           std::size_t random_count);

// Distinct objects appearing in the corpus, in first-appearance order.
std::vector<ObjectRef> corpus_objects(const ProbeCorpus& corpus, std::size_t cap = 0);

}  // namespace preab
