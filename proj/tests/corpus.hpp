#pragma once
#include <random>
#include <set>
#include <vector>

#include "curveb/lattice.hpp"
#include "curveb/poly.hpp"

namespace curveb::testing {

// Random integer Laurent polynomial: 4..max_points support points, exponents in [lo,hi],
// coefficients in [-9,9] \ {0}, support not collinear.
inline LaurentPoly2<Rational> random_curve(std::mt19937_64& rng, int max_points = 12, int lo = -3, int hi = 6) {
    std::uniform_int_distribution<int> npts(4, max_points), ex(lo, hi), co(-9, 8);
    while (true) {
        LaurentPoly2<Rational> P;
        int n = npts(rng);
        while (static_cast<int>(P.size()) < n) {
            int c = co(rng);
            if (c >= 0) ++c;
            int i = ex(rng), j = ex(rng);
            if (P.coeff(i, j) == 0) P.add_term(i, j, Rational(c));
        }
        if (!convex_hull(P.support()).degenerate()) return P;
    }
}

// Fixed corpus shared by the acceptance criteria.
inline std::vector<LaurentPoly2<Rational>> corpus(int count, unsigned long long seed = 20240601) {
    std::mt19937_64 rng(seed);
    std::vector<LaurentPoly2<Rational>> out;
    for (int k = 0; k < count; ++k) out.push_back(random_curve(rng));
    return out;
}

inline std::set<LatticePoint> random_points(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::set<LatticePoint> s;
    while (static_cast<int>(s.size()) < n) s.insert({d(rng), d(rng)});
    return s;
}

}  // namespace curveb::testing
