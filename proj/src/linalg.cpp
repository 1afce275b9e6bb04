#include "gframe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gframe {

namespace {

constexpr Real kMachineEps = std::numeric_limits<Real>::epsilon();

} // namespace

HermitianSpectrum hermitian_spectrum(const ComplexMatrix& s) {
    if (s.rows() != s.cols()) {
        throw ShapeError("hermitian_spectrum expects a square matrix");
    }
    if (!s.allFinite()) {
        throw NumericError("hermitian_spectrum: non-finite matrix entries");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(s));
    if (solver.info() != Eigen::Success) {
        throw NumericError("Hermitian eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector singular_values(const ComplexMatrix& m) {
    if (m.size() == 0) {
        return RealVector();
    }
    if (!m.allFinite()) {
        throw NumericError("singular_values: non-finite matrix entries");
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues();
}

Real rank_threshold(const ComplexMatrix& m, Real sigma_max, const TolerancePolicy& tol) {
    const auto dim = static_cast<Real>(std::max(m.rows(), m.cols()));
    return tol.rank_eps_factor * dim * sigma_max * kMachineEps;
}

int numerical_rank(const ComplexMatrix& m, const TolerancePolicy& tol) {
    const RealVector sv = singular_values(m);
    if (sv.size() == 0 || sv(0) == 0.0) {
        return 0;
    }
    const Real threshold = rank_threshold(m, sv(0), tol);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) {
            ++rank;
        }
    }
    return rank;
}

Real operator_norm(const ComplexMatrix& m) {
    const RealVector sv = singular_values(m);
    return sv.size() == 0 ? 0.0 : sv(0);
}

bool is_surjective(const ComplexMatrix& m, const TolerancePolicy& tol) {
    return numerical_rank(m, tol) == m.rows();
}

bool is_injective(const ComplexMatrix& m, const TolerancePolicy& tol) {
    return numerical_rank(m, tol) == m.cols();
}

Real spectral_floor(Real lambda_max, int dim, const TolerancePolicy& tol) {
    return tol.rank_eps_factor * static_cast<Real>(dim) * std::max(lambda_max, 0.0) * kMachineEps;
}

namespace {

ComplexMatrix spectral_power(const ComplexMatrix& s, const TolerancePolicy& tol, Real exponent) {
    const auto spec = hermitian_spectrum(s);
    const Real lmin = spec.values.size() ? spec.values(0) : 0.0;
    const Real lmax = spec.values.size() ? spec.values(spec.values.size() - 1) : 0.0;
    if (!(lmin > spectral_floor(lmax, static_cast<int>(s.rows()), tol))) {
        throw SingularOperatorError("operator is singular (smallest eigenvalue " +
                                    std::to_string(lmin) + ")");
    }
    RealVector powered = spec.values.array().pow(exponent);
    return spec.vectors * powered.cast<Complex>().asDiagonal() * spec.vectors.adjoint();
}

} // namespace

ComplexMatrix hermitian_inverse(const ComplexMatrix& s, const TolerancePolicy& tol) {
    return spectral_power(s, tol, -1.0);
}

ComplexMatrix hermitian_inverse_sqrt(const ComplexMatrix& s, const TolerancePolicy& tol) {
    return spectral_power(s, tol, -0.5);
}

bool approx_equal(const ComplexMatrix& x, const ComplexMatrix& y, Real rel_eps) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        return false;
    }
    if (x.size() == 0) {
        return true;
    }
    const Real scale = std::max<Real>(1.0, y.cwiseAbs().maxCoeff());
    return (x - y).cwiseAbs().maxCoeff() <= rel_eps * scale;
}

bool approx_equal(Real x, Real y, Real rel_eps) {
    return std::abs(x - y) <= rel_eps * std::max<Real>({1.0, std::abs(x), std::abs(y)});
}

bool approx_identity(const ComplexMatrix& x, Real rel_eps) {
    if (x.rows() != x.cols()) {
        return false;
    }
    return approx_equal(x, ComplexMatrix::Identity(x.rows(), x.cols()), rel_eps);
}

ComplexMatrix hermitian_part(const ComplexMatrix& x) {
    return (x + x.adjoint()) / 2.0;
}

} // namespace gframe
