#pragma once
#include <string>

#include "curveb/ball.hpp"
#include "curveb/kernel.hpp"
#include "curveb/lattice.hpp"
#include "vendor_json.hpp"

namespace curveb {

using json = nlohmann::json;

// LaTeX in canonical order: total degree descending, then exponent vector ascending.
template <CoefficientRing R>
std::string to_latex(const LaurentPoly2<R>& p);
template <CoefficientRing R>
std::string to_latex(const QuadPoly<R>& q);

// Template renderings of B. Plain output stays inside the input grammar for P, Q and Qtilde.
template <CoefficientRing R>
std::string kernel_plain(const KernelExpression<R>& K);
template <CoefficientRing R>
std::string kernel_latex(const KernelExpression<R>& K);
std::string hyperelliptic_latex(const HyperellipticForm& h);

// [[a,b,a',b',"coef"], ...] in canonical order.
template <CoefficientRing R>
json quad_terms_json(const QuadPoly<R>& q);
template <CoefficientRing R>
json poly_terms_json(const LaurentPoly2<R>& p);

json point_json(const LatticePoint& p);
json ball_json(const ComplexBall& z, int digits = 30);
json polygon_json(const NewtonPolygon& poly);

std::string render_svg(const NewtonPolygon& poly);

}  // namespace curveb
