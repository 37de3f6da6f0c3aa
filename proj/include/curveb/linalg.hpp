#pragma once
#include <vector>

#include "curveb/ball.hpp"

namespace curveb {

using BallMatrix = std::vector<std::vector<ComplexBall>>;

// Determinant by elimination with partial pivoting (largest midpoint modulus).
ComplexBall determinant(BallMatrix a);
// Solve A X = B; throws PrecisionExhausted when a pivot is not certified nonzero.
BallMatrix solve(BallMatrix a, BallMatrix b);
BallMatrix multiply(const BallMatrix& a, const BallMatrix& b);
BallMatrix transpose(const BallMatrix& a);
BallMatrix zeros(size_t rows, size_t cols, mpfr_prec_t prec);

// Continued-fraction reconstruction of a ball's value as a rational with residual below 2^-bits.
// The imaginary part must also be below 2^-bits. Throws PrecisionExhausted on failure.
Rational rationalize(const ComplexBall& z, long bits);

}  // namespace curveb
