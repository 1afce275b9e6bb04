#include "gframe/sampling.hpp"

#include <cmath>

#include "gframe/linalg.hpp"

namespace gframe::sampling {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int uniform_int(Engine& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Real uniform_real(Engine& rng, Real lo, Real hi) {
    return std::uniform_real_distribution<Real>(lo, hi)(rng);
}

Complex gaussian_complex(Engine& rng) {
    std::normal_distribution<Real> normal(0.0, 1.0);
    const Real re = normal(rng);
    const Real im = normal(rng);
    return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

ComplexVector gaussian_vector(Engine& rng, Eigen::Index n) {
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = gaussian_complex(rng);
    }
    return v;
}

ComplexMatrix gaussian_matrix(Engine& rng, Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            m(i, j) = gaussian_complex(rng);
        }
    }
    return m;
}

KHatVector gaussian_khat(Engine& rng, const std::vector<int>& block_dims) {
    KHatVector f;
    for (int d : block_dims) {
        f.blocks.push_back(gaussian_vector(rng, d));
    }
    return f;
}

ComplexMatrix surjective_matrix(Engine& rng, Eigen::Index m, Eigen::Index d, Real max_condition) {
    for (;;) {
        ComplexMatrix x = gaussian_matrix(rng, m, d);
        x.leftCols(m) += 1.5 * ComplexMatrix::Identity(m, m);
        const RealVector sv = singular_values(x);
        if (sv(sv.size() - 1) * max_condition > sv(0)) {
            return x;
        }
    }
}

ComplexMatrix well_conditioned(Engine& rng, Eigen::Index n, Real max_condition) {
    return surjective_matrix(rng, n, n, max_condition);
}

ComplexMatrix isometry(Engine& rng, Eigen::Index rows, Eigen::Index cols) {
    Eigen::HouseholderQR<ComplexMatrix> qr(gaussian_matrix(rng, rows, cols));
    return qr.householderQ() * ComplexMatrix::Identity(rows, cols);
}

} // namespace gframe::sampling
