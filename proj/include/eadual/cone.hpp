// Polyhedral cones over Q with generator and halfspace descriptions.
//
// Cones constructed from either representation always carry both,
// canonicalized. Non-pointed cones are representable (the generator list
// then contains opposite pairs spanning the lineality space); pointedness
// is demanded where ordered spaces need it, not here, because the dual of
// a non-generating cone is legitimately non-pointed.

#ifndef EADUAL_CONE_HPP
#define EADUAL_CONE_HPP

#include "eadual/linalg.hpp"
#include "eadual/vec.hpp"

#include <vector>

namespace eadual {

class Cone {
  public:
    static Cone from_generators(std::size_t dim, Matrix generators);
    static Cone from_halfspaces(std::size_t dim, Matrix halfspaces);  // h.x >= 0
    static Cone zero(std::size_t dim) { return from_generators(dim, {}); }

    std::size_t dim() const { return dim_; }
    // Extreme rays plus a +/- pair per lineality basis vector.
    const Matrix& generators() const { return generators_; }
    const Matrix& halfspaces() const { return halfspaces_; }
    const Matrix& lineality() const { return lineality_; }
    const Matrix& rays() const { return rays_; }

    bool is_pointed() const { return lineality_.empty(); }
    bool is_generating() const;  // spans the ambient space
    bool contains(const Vec& x) const;

    bool operator==(const Cone& other) const {
        return dim_ == other.dim_ && generators_ == other.generators_;
    }

  private:
    Cone() = default;
    std::size_t dim_ = 0;
    Matrix rays_;
    Matrix lineality_;
    Matrix generators_;
    Matrix halfspaces_;
};

// {phi : phi.x >= 0 for all x in cone}; generators become halfspaces.
Cone dual_cone(const Cone& cone);

}  // namespace eadual

#endif
