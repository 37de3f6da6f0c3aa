#pragma once
#include <string>
#include <vector>

#include "curveb/kernel.hpp"
#include "curveb/series.hpp"
#include "curveb/singular.hpp"

namespace curveb {

// Numeric settings shared by all checks.
struct CheckConfig {
    mpfr_prec_t precision = 256;
    int order = 24;
    long tol_exp = -80;       // tolerance 2^tol_exp
    long diag_tol_exp = -60;  // tolerance for the diagonal normalization
    unsigned long long seed = 1;
    int retries = 5;
    int second_points = 3;
};

struct Puncture {
    int id = 0;
    OrientedSegment segment;
    ComplexBall c;
    int x_order = 0;  // j' - j
    int y_order = 0;  // i - i'
    long beta = 0;
    long beta_t = 0;
    bool lift_y = true;  // y is lifted and x is the exact monomial; otherwise the reverse
    ComplexBall x_lead, y_lead;
    // Limits of x and y at the puncture (zero, finite nonzero or infinite).
    bool x_finite() const { return x_order >= 0; }
    bool y_finite() const { return y_order >= 0; }
};

std::vector<Puncture> enumerate_punctures(const LaurentPoly2<Rational>& P, const NewtonPolygon& poly,
                                          mpfr_prec_t prec);

struct PuiseuxPair {
    Series x;
    Series y;
    int order = 0;
};
PuiseuxPair puiseux_expand(const LaurentPoly2<Rational>& P, const Puncture& p, int order, mpfr_prec_t prec);

enum class Verdict { Pass, Fail };

struct ValuationReport {
    int puncture = 0;
    int valuation = 0;         // first order whose coefficient is not certified below tolerance
    double residual_log2 = 0;  // log2 of the largest negative-order coefficient bound (-inf if none)
    int pole_order = 0;        // 0 when regular
    bool pass = true;
    int order_used = 0;
};

// Pass/fail of a ball against the tolerance; throws PrecisionExhausted when undecidable.
bool certified_small(const ComplexBall& z, long tol_exp, const std::string& what);

ValuationReport check_puncture_regular(const KernelExpression<Rational>& K, const Puncture& p,
                                       const CurvePoint& second, const CheckConfig& cfg);

struct DiagonalReport {
    CurvePoint point;
    ComplexBall constant_term;
    double deviation_log2 = 0;
    bool pass = true;
};
DiagonalReport check_diagonal(const KernelExpression<Rational>& K, const CurvePoint& p0, const CheckConfig& cfg);

struct NodeReport {
    ComplexBall b;
    ComplexBall yb;
    bool torus = true;
    bool evaluable = true;  // false when the template has a pole on the coordinate axis at the node
    double residual_log2 = 0;
    bool pass = true;
};
std::vector<NodeReport> check_node_cancellation(const KernelExpression<Rational>& K, const SingularLocus& locus,
                                                CurveSampler& sampler, const CheckConfig& cfg);

ValuationReport check_holomorphic(const LaurentPoly2<Rational>& P, const LaurentPoly2<Rational>& numerator,
                                  const Puncture& p, const CheckConfig& cfg);

// Second-point acceptance: away from every finite puncture limit.
bool generic_for_punctures(const CurvePoint& q, const std::vector<Puncture>& punctures);

}  // namespace curveb
