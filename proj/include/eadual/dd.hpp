// Double description for polyhedral cones over Q.
//
// Given halfspace normals h (meaning h.x >= 0), computes the lineality
// space and the extreme rays modulo lineality. This single primitive
// drives every representation conversion in the library: facet
// enumeration is the same computation run on the dual side.

#ifndef EADUAL_DD_HPP
#define EADUAL_DD_HPP

#include "eadual/vec.hpp"

#include <vector>

namespace eadual {

using Matrix = std::vector<Vec>;

struct DDPair {
    Matrix lineality;  // canonical (RREF-derived) basis, primitive + signed
    Matrix rays;       // extreme rays mod lineality, primitive, lex-sorted
};

// Cone {x in Q^dim : h.x >= 0 for every h in halfspaces}.
// Insertion order is fixed (canonicalized + lex-sorted input), so the
// result is deterministic for a given point set.
DDPair extreme_rays(std::size_t dim, Matrix halfspaces);

}  // namespace eadual

#endif
