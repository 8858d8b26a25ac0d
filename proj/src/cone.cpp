#include "eadual/cone.hpp"

#include "eadual/dd.hpp"

#include <algorithm>

namespace eadual {

namespace {

Matrix generator_list(const DDPair& dd) {
    Matrix gens = dd.rays;
    for (const Vec& l : dd.lineality) {
        gens.push_back(l);
        gens.push_back(neg(l));
    }
    std::sort(gens.begin(), gens.end(), VecLess{});
    return gens;
}

Matrix halfspace_list(const DDPair& dual) {
    Matrix hs = dual.rays;
    for (const Vec& l : dual.lineality) {
        hs.push_back(l);
        hs.push_back(neg(l));
    }
    std::sort(hs.begin(), hs.end(), VecLess{});
    return hs;
}

}  // namespace

Cone Cone::from_generators(std::size_t dim, Matrix generators) {
    for (const Vec& g : generators) require_dim(g, dim, "cone generator");
    generators.erase(std::remove_if(generators.begin(), generators.end(), is_zero_vec),
                     generators.end());
    Cone c;
    c.dim_ = dim;
    // Facet normals: extreme rays of {y : g.y >= 0}; its lineality gives
    // the equations of the cone's linear span.
    DDPair dual = extreme_rays(dim, generators);
    c.halfspaces_ = halfspace_list(dual);
    // Canonical generators: run the same conversion back.
    DDPair primal = extreme_rays(dim, c.halfspaces_);
    c.rays_ = primal.rays;
    c.lineality_ = primal.lineality;
    c.generators_ = generator_list(primal);
    return c;
}

Cone Cone::from_halfspaces(std::size_t dim, Matrix halfspaces) {
    for (const Vec& h : halfspaces) require_dim(h, dim, "cone halfspace");
    Cone c;
    c.dim_ = dim;
    DDPair primal = extreme_rays(dim, halfspaces);
    c.rays_ = primal.rays;
    c.lineality_ = primal.lineality;
    c.generators_ = generator_list(primal);
    DDPair dual = extreme_rays(dim, c.generators_);
    c.halfspaces_ = halfspace_list(dual);
    return c;
}

bool Cone::is_generating() const {
    return rank(generators_) == dim_;
}

bool Cone::contains(const Vec& x) const {
    require_dim(x, dim_, "cone membership point");
    for (const Vec& h : halfspaces_)
        if (dot(h, x) < 0) return false;
    return true;
}

Cone dual_cone(const Cone& cone) {
    return Cone::from_halfspaces(cone.dim(), cone.generators());
}

}  // namespace eadual
