#include "eadual/distribution.hpp"

#include "eadual/sampling.hpp"

#include <algorithm>
#include <map>

namespace eadual {

namespace {

template <typename Key, typename Less>
std::vector<std::pair<Key, Rat>> normalize_support(std::vector<std::pair<Key, Rat>> entries,
                                                   Less less) {
    std::map<Key, Rat, Less> merged(less);
    for (auto& [k, w] : entries) merged[k] += w;
    std::vector<std::pair<Key, Rat>> out;
    Rat total = 0;
    for (auto& [k, w] : merged) {
        if (w == 0) continue;
        if (w < 0) throw PreconditionError("distribution weight must be positive");
        total += w;
        out.emplace_back(k, w);
    }
    if (total != 1) throw PreconditionError("distribution weights must sum to 1");
    return out;
}

}  // namespace

Distribution::Distribution(std::vector<Entry> support)
    : support_(normalize_support(std::move(support), VecLess{})) {
    for (std::size_t i = 1; i < support_.size(); ++i)
        if (support_[i].first.size() != support_[0].first.size())
            throw DimensionMismatch("distribution points of mixed dimension");
}

Rat Distribution::weight_of(const Vec& point) const {
    for (const Entry& e : support_)
        if (e.first == point) return e.second;
    return Rat(0);
}

bool Distribution::operator<(const Distribution& other) const {
    const auto& a = support_;
    const auto& b = other.support_;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = lex_compare(a[i].first, b[i].first);
        if (c != 0) return c < 0;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

Distribution d_unit(const Vec& x) { return Distribution({{x, Rat(1)}}); }

Distribution d_pushforward(const std::function<Vec(const Vec&)>& f, const Distribution& phi) {
    std::vector<Distribution::Entry> entries;
    for (const auto& [x, w] : phi.support()) entries.emplace_back(f(x), w);
    return Distribution(std::move(entries));
}

Distribution d_pushforward(const AffineMap& f, const Distribution& phi) {
    return d_pushforward([&f](const Vec& x) { return f.apply(x); }, phi);
}

NestedDistribution::NestedDistribution(std::vector<Entry> support)
    : support_(normalize_support(std::move(support), std::less<Distribution>{})) {}

Distribution d_flatten(const NestedDistribution& Phi) {
    std::vector<Distribution::Entry> entries;
    for (const auto& [phi, W] : Phi.support())
        for (const auto& [x, w] : phi.support()) entries.emplace_back(x, W * w);
    return Distribution(std::move(entries));
}

Vec em_eval(const Polytope& P, const Distribution& phi) {
    Vec x = zero_vec(P.dim());
    for (const auto& [p, w] : phi.support()) {
        if (!P.contains(p))
            throw PreconditionError("em_eval: distribution support escapes the polytope");
        x = add(x, scale(w, p));
    }
    if (!P.contains(x)) throw std::logic_error("em_eval: barycenter escaped the polytope");
    return x;
}

EmLawReport check_em_laws(const Polytope& P, unsigned trials, std::uint64_t seed) {
    if (P.is_empty()) throw PreconditionError("check_em_laws: empty polytope");
    EmLawReport report;
    RandomSource rng(seed);
    const Matrix& verts = P.vertices();

    auto random_distribution = [&](unsigned max_support) {
        unsigned k = 1 + static_cast<unsigned>(rng.next_below(max_support));
        std::vector<Rat> w = rng.convex_weights(k);
        std::vector<Distribution::Entry> entries;
        for (unsigned i = 0; i < k; ++i) entries.emplace_back(rng.convex_point(verts), w[i]);
        return Distribution(std::move(entries));
    };

    for (unsigned t = 0; t < trials && report.ok; ++t) {
        ++report.trials;
        // Unit law of the algebra: evaluating a point mass returns the point.
        Vec x = rng.convex_point(verts);
        if (em_eval(P, d_unit(x)) != x) {
            report.ok = false;
            report.failure = "em_eval(d_unit(x)) != x at x = " + vec_to_string(x);
            break;
        }
        // Multiplication law: evaluate-then-mix equals flatten-then-evaluate.
        unsigned k = 1 + static_cast<unsigned>(rng.next_below(4));
        std::vector<Rat> w = rng.convex_weights(k);
        std::vector<NestedDistribution::Entry> nested;
        for (unsigned i = 0; i < k; ++i) nested.emplace_back(random_distribution(6), w[i]);
        NestedDistribution Phi(std::move(nested));
        // Left route: push each inner distribution through em_eval, then evaluate.
        std::vector<Distribution::Entry> outer;
        for (const auto& [phi, W] : Phi.support()) outer.emplace_back(em_eval(P, phi), W);
        Vec left = em_eval(P, Distribution(std::move(outer)));
        Vec right = em_eval(P, d_flatten(Phi));
        if (left != right) {
            report.ok = false;
            report.failure = "algebra multiplication law failed: " + vec_to_string(left) +
                             " != " + vec_to_string(right);
        }
    }
    return report;
}

}  // namespace eadual
