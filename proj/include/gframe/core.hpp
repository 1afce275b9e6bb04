#pragma once

// Finite-measure-space realization of continuous g-frames.
//
// A measure space is a finite list of atoms with positive weights. A g-frame
// family assigns one complex block operator (d_i x d matrix) to each atom.
// Functions on the atoms with values in the codomain blocks form the weighted
// direct sum K-hat, which is mapped isometrically onto C^N by scaling block i
// with sqrt(weight_i). All range, rank and orthogonality computations in the
// library happen in those embedded coordinates.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gframe {

using Real = double;
using Complex = std::complex<Real>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Error hierarchy. Every failure surfaced by the library derives from Error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

// Raised when an operator that must be inverted (frame operator, L1, ...) is
// numerically singular.
class SingularOperatorError : public Error {
public:
    using Error::Error;
};

// A named hypothesis of a construction does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

class GenerationError : public Error {
public:
    using Error::Error;
};

struct TolerancePolicy {
    Real rel_eps = 1e-9;
    Real rank_eps_factor = 10.0;

    // Throws PreconditionError unless rel_eps > 0 and rank_eps_factor >= 1.
    void check() const;
};

struct MeasureSpace {
    std::vector<Real> weights;

    std::size_t atom_count() const { return weights.size(); }

    bool operator==(const MeasureSpace&) const = default;
};

struct GFrameFamily {
    MeasureSpace space;
    int domain_dim = 0;
    std::vector<int> block_dims;
    std::vector<ComplexMatrix> blocks;

    int khat_dim() const;
    std::size_t atom_count() const { return space.atom_count(); }
};

// An element of K-hat: one vector per atom.
struct KHatVector {
    std::vector<ComplexVector> blocks;

    std::vector<int> block_dims() const;
};

struct ValidationResult {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

ValidationResult validate_space(const MeasureSpace& space);
ValidationResult validate_family(const GFrameFamily& fam);

// Throws ShapeError carrying every violation when the family is malformed.
void require_valid(const GFrameFamily& fam);

// Throws ShapeError unless both families live on the same measure space with
// the same codomain block dimensions.
void require_compatible(const GFrameFamily& a, const GFrameFamily& b);

// Weighted inner product sum_i mu_i <F_i, G_i>, linear in F and
// conjugate-linear in G.
Complex khat_inner(const KHatVector& f, const KHatVector& g, const MeasureSpace& space);
Real khat_norm(const KHatVector& f, const MeasureSpace& space);

// Isometry K-hat -> C^N: stacks sqrt(mu_i) * F_i in atom order.
ComplexVector embed(const KHatVector& f, const MeasureSpace& space);
// Inverse of embed for the given block layout.
KHatVector unembed(const ComplexVector& v, const MeasureSpace& space,
                   const std::vector<int>& block_dims);

// Matrix of (embed o T*_Lambda): the blocks sqrt(mu_i) * Lambda_i stacked
// vertically. Its conjugate transpose is the synthesis matrix.
ComplexMatrix analysis_matrix(const GFrameFamily& fam);

// Rebuilds family blocks from an embedded analysis matrix (inverse of
// analysis_matrix for a fixed space and block layout).
GFrameFamily family_from_analysis(const ComplexMatrix& analysis, const MeasureSpace& space,
                                  const std::vector<int>& block_dims);

// (T*_Lambda h)(omega_i) = Lambda_i h.
KHatVector apply_analysis(const GFrameFamily& fam, const ComplexVector& h);
// T_Lambda F = sum_i mu_i Lambda_i^* F_i.
ComplexVector apply_synthesis(const GFrameFamily& fam, const KHatVector& f);

// Returns a family with every block right-multiplied by op (d x d').
GFrameFamily right_multiply(const GFrameFamily& fam, const ComplexMatrix& op);

} // namespace gframe
