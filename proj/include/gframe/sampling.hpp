#pragma once

// Small seeded samplers used by the property suite and the tests.

#include <cstdint>
#include <random>

#include "gframe/core.hpp"

namespace gframe::sampling {

using Engine = std::mt19937_64;

// SplitMix64 step; decorrelates per-case seeds derived from one base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

int uniform_int(Engine& rng, int lo, int hi);
Real uniform_real(Engine& rng, Real lo, Real hi);
Complex gaussian_complex(Engine& rng);
ComplexVector gaussian_vector(Engine& rng, Eigen::Index n);
ComplexMatrix gaussian_matrix(Engine& rng, Eigen::Index rows, Eigen::Index cols);
KHatVector gaussian_khat(Engine& rng, const std::vector<int>& block_dims);

// Gaussian matrix shifted toward the identity, redrawn until its condition
// number is below max_condition.
ComplexMatrix well_conditioned(Engine& rng, Eigen::Index n, Real max_condition = 50.0);

// m x d with rank m (m <= d), condition number below max_condition.
ComplexMatrix surjective_matrix(Engine& rng, Eigen::Index m, Eigen::Index d,
                                Real max_condition = 50.0);

// Matrix with orthonormal columns.
ComplexMatrix isometry(Engine& rng, Eigen::Index rows, Eigen::Index cols);

} // namespace gframe::sampling
