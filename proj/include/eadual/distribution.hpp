// The finite-support distribution monad over rational points, and the
// convex-combination (Eilenberg-Moore) evaluation on polytopes.

#ifndef EADUAL_DISTRIBUTION_HPP
#define EADUAL_DISTRIBUTION_HPP

#include "eadual/polytope.hpp"
#include "eadual/vec.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace eadual {

// Finitely many distinct points with positive weights summing to exactly 1.
class Distribution {
  public:
    using Entry = std::pair<Vec, Rat>;

    // Merges duplicate points, drops zero weights, checks the total.
    explicit Distribution(std::vector<Entry> support);

    const std::vector<Entry>& support() const { return support_; }
    Rat weight_of(const Vec& point) const;

    bool operator==(const Distribution& other) const { return support_ == other.support_; }
    bool operator<(const Distribution& other) const;

  private:
    std::vector<Entry> support_;  // lex-sorted by point
};

Distribution d_unit(const Vec& x);

struct AffineMap {
    Matrix matrix;  // rows
    Vec offset;
    Vec apply(const Vec& x) const { return add(mat_apply(matrix, x), offset); }
};

Distribution d_pushforward(const std::function<Vec(const Vec&)>& f, const Distribution& phi);
Distribution d_pushforward(const AffineMap& f, const Distribution& phi);

// A distribution over distributions, with the same invariants.
class NestedDistribution {
  public:
    using Entry = std::pair<Distribution, Rat>;
    explicit NestedDistribution(std::vector<Entry> support);
    const std::vector<Entry>& support() const { return support_; }

  private:
    std::vector<Entry> support_;
};

Distribution d_flatten(const NestedDistribution& Phi);

// Barycenter; requires support(phi) inside P, and the result lands in P.
Vec em_eval(const Polytope& P, const Distribution& phi);

struct EmLawReport {
    bool ok = true;
    unsigned trials = 0;
    std::string failure;  // description of the first counterexample
};

// Samples `trials` random distributions (and nested distributions) over
// points of P and checks the unit and multiplication laws of the
// convex-combination algebra exactly.
EmLawReport check_em_laws(const Polytope& P, unsigned trials, std::uint64_t seed);

}  // namespace eadual

#endif
