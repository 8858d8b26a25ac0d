// Dense rational vectors and the handful of operations the polyhedral
// kernel needs. Vectors are plain std::vector<Rat>; everything is a pure
// function returning a fresh value.

#ifndef EADUAL_VEC_HPP
#define EADUAL_VEC_HPP

#include "eadual/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace eadual {

using Vec = std::vector<Rat>;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void require_dim(const Vec& v, std::size_t dim, const char* what) {
    if (v.size() != dim)
        throw DimensionMismatch(std::string(what) + ": expected dimension " +
                                std::to_string(dim) + ", got " + std::to_string(v.size()));
}

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec neg(const Vec& a) { return scale(Rat(-1), a); }

inline bool is_zero_vec(const Vec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

inline Vec zero_vec(std::size_t dim) { return Vec(dim, Rat(0)); }

inline Vec unit_vec(std::size_t dim, std::size_t i) {
    Vec e(dim, Rat(0));
    e[i] = 1;
    return e;
}

inline int lex_compare(const Vec& a, const Vec& b) {
    std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    if (a.size() < b.size()) return -1;
    if (a.size() > b.size()) return 1;
    return 0;
}

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const { return lex_compare(a, b) < 0; }
};

// Scales a nonzero vector by a positive rational so entries are coprime
// integers. Rays are directions, so only positive scaling is allowed here.
inline Vec primitive(const Vec& v) {
    Int scale_num = 1;  // lcm of denominators
    for (const Rat& x : v) scale_num = lcm(scale_num, denominator(x));
    Int g = 0;
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int n = numerator(v[i]) * (scale_num / denominator(v[i]));
        r[i] = Rat(n);
        g = gcd(g, n);
    }
    if (g == 0) return r;  // zero vector
    for (Rat& x : r) x /= Rat(g < 0 ? -g : g);
    return r;
}

// Primitive scaling plus a sign convention (first nonzero entry positive);
// for vectors where both directions describe the same object.
inline Vec primitive_signed(const Vec& v) {
    Vec r = primitive(v);
    for (const Rat& x : r) {
        if (x > 0) return r;
        if (x < 0) return neg(r);
    }
    return r;
}

inline std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

}  // namespace eadual

#endif
