#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "curveb/poly.hpp"
#include "curveb/unipoly.hpp"

namespace curveb {

// How the half-weight segment case is summed: literally over ordered pairs with 1/2, or
// once per unordered pair with full weight (stays inside the integers).
enum class SegmentMode { Half, UnorderedPairs };

template <CoefficientRing R>
QuadPoly<R> compute_Q(const LaurentPoly2<R>& P, const NewtonPolygon& poly,
                      SegmentMode mode = SegmentMode::Half);

// B = -[P(x,y')P(x',y)/((x-x')^2(y-y')^2) - Q - Qtilde] / (P_y(x,y) P_y(x',y')) dx dx'
template <CoefficientRing R>
struct KernelExpression {
    LaurentPoly2<R> P;
    QuadPoly<R> Q;
    QuadPoly<R> Qtilde;
    QuadPoly<R> total() const { return Q + Qtilde; }
};

template <CoefficientRing R>
KernelExpression<R> assemble_kernel(const LaurentPoly2<R>& P, const QuadPoly<R>& Q, const QuadPoly<R>& Qtilde);

// Symmetric matrix indexed by interior points.
template <CoefficientRing R>
using KappaShift = std::map<std::pair<LatticePoint, LatticePoint>, R>;

template <CoefficientRing R>
KernelExpression<R> shift_kernel(const KernelExpression<R>& K, const KappaShift<R>& kappa, const NewtonPolygon& poly);

// True iff every term of Qa - Qb is interior (x) interior after the +1 exponent shift.
template <CoefficientRing R>
bool equal_mod_interior(const QuadPoly<R>& Qa, const QuadPoly<R>& Qb, const NewtonPolygon& poly);

// Terms of Q that are not interior (x) interior.
template <CoefficientRing R>
QuadPoly<R> non_interior_part(const QuadPoly<R>& Q, const NewtonPolygon& poly);

bool is_interior_term(const QuadKey& k, const NewtonPolygon& poly);

// Hyperelliptic specialisation y^2 = Peven(x).
struct SqrtPart {
    UniPoly U;
    UniPoly V;
};
SqrtPart poly_sqrt_part(const UniPoly& Peven);

// (y y' + R(x,x')) / (2 y y' (x-x')^2) dx dx'; R is stored with y-exponents zero.
struct HyperellipticForm {
    QuadPoly<Rational> R;
    std::string str() const;
    friend bool operator==(const HyperellipticForm& a, const HyperellipticForm& b) { return a.R == b.R; }
};
HyperellipticForm hyperelliptic_kernel(const UniPoly& Peven);
// The Q that turns the general template into hyperelliptic_kernel: -((U(x)-U(x'))/(x-x'))^2.
QuadPoly<Rational> hyperelliptic_Q(const UniPoly& Peven);
// Simplified form of a kernel for P = a y^2 + g(x) with y-free Q + Qtilde.
std::optional<HyperellipticForm> simplify_hyperelliptic(const KernelExpression<Rational>& K);
// Peven when P = a y^2 + g(x), as f = -g/a.
std::optional<UniPoly> hyperelliptic_rhs(const LaurentPoly2<Rational>& P);

// (n,s) curves y^n - x^s - sum P_ij x^i y^j: the two non-interior blocks.
template <CoefficientRing R>
QuadPoly<R> ns_curve_Q(const LaurentPoly2<R>& P, int n, int s);

// Drop the first term (canonical order) whose x-side exponent lies outside the interior.
template <CoefficientRing R>
std::optional<QuadKey> mutation_target(const QuadPoly<R>& Q, const NewtonPolygon& poly);

}  // namespace curveb
