#pragma once
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curveb/ball.hpp"
#include "curveb/linalg.hpp"
#include "curveb/poly.hpp"
#include "curveb/unipoly.hpp"

namespace curveb {

struct DoublePoint {
    ComplexBall b;
    ComplexBall yb;
    ComplexBall gamma;                 // P_xy^2 - P_xx P_yy at (b, y_b)
    std::optional<Rational> b_exact;   // set when b is rational
    std::optional<Rational> yb_exact;
    std::optional<Rational> gamma_exact;
    bool torus = true;                 // b != 0 and y_b != 0
};

struct SingularLocus {
    UniPoly D;
    UniPoly Dtilde;
    UniPoly S;                              // squarefree common-root locus (affine part)
    UniPoly A;                              // squarefree branchpoint locus
    std::vector<ComplexBall> branchpoints;
    std::vector<DoublePoint> double_points;  // torus nodes; these enter the genus and the correction
    std::vector<DoublePoint> boundary_points;  // common roots on the coordinate axes
    mpfr_prec_t prec = 256;
};

SingularLocus locate_singular(const LaurentPoly2<Rational>& P, mpfr_prec_t prec);

struct RegularityReport {
    bool regular = true;
    std::vector<std::string> failures;
};
RegularityReport check_regularity(const LaurentPoly2<Rational>& P, const NewtonPolygon& poly,
                                  const SingularLocus& locus);

int genus(const NewtonPolygon& poly, const SingularLocus& locus);

// Polynomial of the hull edge e: sum_t coef(V + t d) u^(L - t) from its first clockwise vertex V.
UniPoly edge_polynomial(const LaurentPoly2<Rational>& P, const NewtonPolygon& poly, int edge);

struct PivotSet {
    std::vector<LatticePoint> I;
    std::vector<LatticePoint> Ibar;
    BallMatrix B_I;     // rows: double points, columns: I
    BallMatrix B_Ibar;  // rows: double points, columns: Ibar
};
PivotSet choose_pivot_set(const NewtonPolygon& poly, const SingularLocus& locus);

// Generic point on the curve with rational x.
struct CurvePoint {
    Rational x;
    ComplexBall xb;
    ComplexBall y;
};
class CurveSampler {
public:
    CurveSampler(const LaurentPoly2<Rational>& P, unsigned long long seed, mpfr_prec_t prec, int retries = 5);
    // Throws PrecisionExhausted when no acceptable point is found within the retry budget.
    template <class Accept>
    CurvePoint next(Accept&& accept) {
        for (int attempt = 0; attempt <= retries_ * 20; ++attempt) {
            auto p = candidate();
            if (p && accept(*p)) return *p;
        }
        throw PrecisionExhausted("no generic sample point found on the curve");
    }
    CurvePoint next() {
        return next([](const CurvePoint&) { return true; });
    }

private:
    std::optional<CurvePoint> candidate();
    LaurentPoly2<Rational> P_, Px_, Py_;
    std::vector<UniPoly> ycoef_;
    int shift_j_ = 0;
    std::mt19937_64 rng_;
    mpfr_prec_t prec_;
    int retries_;
};

// Monomial x^(i-1) y^(j-1) for an interior point (i,j).
ComplexBall interior_monomial(const LatticePoint& beta, const ComplexBall& x, const ComplexBall& y);

QuadPoly<Rational> compute_Qtilde(const LaurentPoly2<Rational>& P, const NewtonPolygon& poly,
                                  const QuadPoly<Rational>& Q, const SingularLocus& locus, const PivotSet& pivots,
                                  unsigned long long seed);

struct HolomorphicForm {
    LatticePoint label;                // the non-pivot interior point it is attached to
    LaurentPoly2<Rational> numerator;  // the form is numerator dx / P_y
};
std::vector<HolomorphicForm> holomorphic_basis(const NewtonPolygon& poly, const SingularLocus& locus,
                                               const PivotSet& pivots);

}  // namespace curveb
