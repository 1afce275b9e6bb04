#pragma once

// Dense helpers shared by every module. Rank decisions all go through
// numerical_rank so the library uses a single threshold convention.

#include "gframe/core.hpp"

namespace gframe {

struct HermitianSpectrum {
    RealVector values;      // ascending
    ComplexMatrix vectors;  // columns are the matching eigenvectors
};

// Throws NumericError when the eigensolver does not converge.
HermitianSpectrum hermitian_spectrum(const ComplexMatrix& s);

// Descending singular values; throws NumericError on non-finite input.
RealVector singular_values(const ComplexMatrix& m);

// c * max(rows, cols) * sigma_max * machine epsilon.
Real rank_threshold(const ComplexMatrix& m, Real sigma_max, const TolerancePolicy& tol);

int numerical_rank(const ComplexMatrix& m, const TolerancePolicy& tol);

// Largest singular value.
Real operator_norm(const ComplexMatrix& m);

bool is_surjective(const ComplexMatrix& m, const TolerancePolicy& tol);
bool is_injective(const ComplexMatrix& m, const TolerancePolicy& tol);

// Eigenvalue floor below which a Hermitian PSD operator of the given
// dimension counts as singular: c * dim * lambda_max * eps.
Real spectral_floor(Real lambda_max, int dim, const TolerancePolicy& tol);

// S^{-1} and S^{-1/2} for Hermitian positive definite S, both via the
// eigendecomposition. Throw SingularOperatorError below the spectral floor.
ComplexMatrix hermitian_inverse(const ComplexMatrix& s, const TolerancePolicy& tol);
ComplexMatrix hermitian_inverse_sqrt(const ComplexMatrix& s, const TolerancePolicy& tol);

// max |x_ij - y_ij| <= rel_eps * max(1, max |y_ij|).
bool approx_equal(const ComplexMatrix& x, const ComplexMatrix& y, Real rel_eps);
bool approx_equal(Real x, Real y, Real rel_eps);
bool approx_identity(const ComplexMatrix& x, Real rel_eps);

// Hermitian part (X + X^*) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& x);

} // namespace gframe
