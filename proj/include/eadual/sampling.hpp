// Deterministic pseudo-random generation of small rational data. All
// sampled checks in the library and CLI run off a caller-supplied seed so
// reports are reproducible byte for byte.
//
// mt19937_64 with explicit reduction is used instead of the standard
// distributions, whose outputs differ between standard libraries.

#ifndef EADUAL_SAMPLING_HPP
#define EADUAL_SAMPLING_HPP

#include "eadual/vec.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace eadual {

class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next_below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }

    // Uniform-ish rational in [0, 1] with denominator at most max_den.
    Rat rat01(unsigned max_den = 64) {
        std::uint64_t q = 1 + next_below(max_den);
        std::uint64_t p = next_below(q + 1);
        return Rat(static_cast<long>(p), static_cast<long>(q));
    }

    // Small signed rational in [-bound, bound].
    Rat rat_signed(unsigned bound = 4, unsigned max_den = 8) {
        std::uint64_t q = 1 + next_below(max_den);
        long span = static_cast<long>(bound * q);
        long p = static_cast<long>(next_below(2 * span + 1)) - span;
        return Rat(p, static_cast<long>(q));
    }

    // k strictly positive rationals summing to exactly 1 (a random
    // composition of a common denominator <= 64).
    std::vector<Rat> convex_weights(unsigned k) {
        if (k == 0) return {};
        unsigned q = k + static_cast<unsigned>(next_below(64 - k + 1));  // k <= q <= 64
        // Split q into k positive parts.
        std::vector<unsigned> cuts;
        std::vector<bool> taken(q, false);
        for (unsigned i = 0; i < k - 1; ++i) {
            unsigned c;
            do {
                c = 1 + static_cast<unsigned>(next_below(q - 1));
            } while (taken[c]);
            taken[c] = true;
            cuts.push_back(c);
        }
        cuts.push_back(0);
        cuts.push_back(q);
        std::sort(cuts.begin(), cuts.end());
        std::vector<Rat> w;
        for (unsigned i = 0; i + 1 < cuts.size(); ++i)
            w.push_back(Rat(static_cast<long>(cuts[i + 1] - cuts[i]), static_cast<long>(q)));
        return w;
    }

    // Random point of the convex hull of `points` (exact convex combination).
    Vec convex_point(const Matrix& points) {
        unsigned k = 1 + static_cast<unsigned>(next_below(points.size()));
        std::vector<Rat> w = convex_weights(k);
        Vec x = zero_vec(points[0].size());
        for (unsigned i = 0; i < k; ++i) {
            const Vec& p = points[next_below(points.size())];
            x = add(x, scale(w[i], p));
        }
        return x;
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace eadual

#endif
