// Test-only oracles, kept independent of the library's conversion paths.
//
// The vertex enumerator solves every maximal active-constraint subsystem
// by brute force; the gauge oracle scans a rational grid of dilation
// factors using only membership tests.

#ifndef EADUAL_TESTS_ORACLES_HPP
#define EADUAL_TESTS_ORACLES_HPP

#include "eadual/linalg.hpp"
#include "eadual/polytope.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace eadual::testing {

// All points x with: Ex = f, a full-rank set of active inequalities, and
// every constraint satisfied. Deduplicated and lex-sorted.
inline Matrix brute_force_vertices(std::size_t dim, const std::vector<Halfspace>& ineqs,
                                   const std::vector<Equality>& eqs) {
    Matrix eq_rows;
    Vec eq_rhs;
    for (const Equality& e : eqs) {
        eq_rows.push_back(e.normal);
        eq_rhs.push_back(e.offset);
    }
    // Deduplicate inequality rows (scaled duplicates are common in
    // generated systems and only inflate the subset enumeration).
    std::vector<std::pair<Vec, Rat>> rows;
    for (const Halfspace& h : ineqs) {
        Vec n = h.normal;
        Rat off = h.offset;
        Vec p = primitive(n);
        if (is_zero_vec(p)) continue;
        // Rescale offset consistently with the primitive normal.
        std::size_t i = 0;
        while (p[i] == 0) ++i;
        Rat factor = p[i] / n[i];
        rows.emplace_back(p, off * factor);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        int c = lex_compare(a.first, b.first);
        return c != 0 ? c < 0 : a.second < b.second;
    });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    std::size_t base_rank = eq_rows.empty() ? 0 : rank(eq_rows);
    std::size_t need = dim - base_rank;

    Matrix found;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> recurse = [&](std::size_t start) {
        if (pick.size() == need) {
            Matrix sys = eq_rows;
            Vec rhs = eq_rhs;
            for (std::size_t i : pick) {
                sys.push_back(rows[i].first);
                rhs.push_back(rows[i].second);
            }
            LinearSolution sol = solve_linear(sys, rhs);
            if (!sol.particular || !sol.kernel.empty()) return;
            const Vec& x = *sol.particular;
            for (const auto& [n, off] : rows)
                if (dot(n, x) > off) return;
            for (const Equality& e : eqs)
                if (dot(e.normal, x) != e.offset) return;
            found.push_back(x);
            return;
        }
        for (std::size_t i = start; i + (need - pick.size()) <= rows.size(); ++i) {
            pick.push_back(i);
            recurse(i + 1);
            pick.pop_back();
        }
    };
    recurse(0);
    std::sort(found.begin(), found.end(), VecLess{});
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

// Smallest alpha on the grid {k/grid_den} with x inside alpha * ball,
// decided purely by membership; -1 when none up to alpha_max.
inline Rat gauge_grid_oracle(const std::function<bool(const Vec&, const Rat&)>& member,
                             const Vec& x, unsigned grid_den, unsigned alpha_max) {
    for (unsigned k = 0; k <= alpha_max * grid_den; ++k) {
        Rat alpha(static_cast<long>(k), static_cast<long>(grid_den));
        if (member(x, alpha)) return alpha;
    }
    return Rat(-1);
}

}  // namespace eadual::testing

#endif
