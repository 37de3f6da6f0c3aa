#pragma once
#include <vector>

#include "curveb/ball.hpp"
#include "curveb/unipoly.hpp"

namespace curveb {

struct RootCluster {
    ComplexBall z;
    int multiplicity = 1;
};

// Certified roots grouped by multiplicity; ordered by decreasing modulus, ties by argument.
std::vector<RootCluster> complex_root_clusters(const UniPoly& f, mpfr_prec_t prec);
// All roots repeated by multiplicity, same order.
std::vector<ComplexBall> complex_roots(const UniPoly& f, mpfr_prec_t prec);

// Ball evaluation (coefficients rounded outward).
ComplexBall evaluate(const UniPoly& f, const ComplexBall& x);

// Sort key used for roots and labels.
void sort_by_modulus_then_arg(std::vector<RootCluster>& r);

}  // namespace curveb
