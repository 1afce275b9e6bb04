#pragma once

// Builders and an independent numerical oracle for the tests. The oracle
// deliberately avoids the library's linalg layer and Eigen's decompositions:
// it uses plain loops, Gauss-Jordan elimination and cyclic Jacobi rotations.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <utility>
#include <vector>

#include "gframe/core.hpp"

namespace support {

using gframe::Complex;
using gframe::ComplexMatrix;
using gframe::ComplexVector;
using gframe::GFrameFamily;
using gframe::MeasureSpace;
using gframe::Real;

using Rows = std::vector<std::vector<Complex>>;

inline ComplexMatrix mat(const Rows& rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r ? static_cast<Eigen::Index>(rows[0].size()) : 0;
    ComplexMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < c; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

inline GFrameFamily family(std::vector<Real> weights, int domain_dim, const std::vector<Rows>& blocks) {
    GFrameFamily fam;
    fam.space.weights = std::move(weights);
    fam.domain_dim = domain_dim;
    for (const auto& b : blocks) {
        fam.blocks.push_back(mat(b));
        fam.block_dims.push_back(static_cast<int>(b.size()));
    }
    return fam;
}

// Scalar family: one 1x1 block per atom.
inline GFrameFamily scalars(std::vector<Real> weights, std::vector<Complex> values) {
    std::vector<Rows> blocks;
    for (auto v : values) {
        blocks.push_back({{v}});
    }
    return family(std::move(weights), 1, blocks);
}

// The identity family on C^d: d atoms of weight 1, Lambda_i = e_i^T.
inline GFrameFamily identity_family(int d) {
    std::vector<Rows> blocks;
    for (int i = 0; i < d; ++i) {
        std::vector<Complex> row(d, 0.0);
        row[i] = 1.0;
        blocks.push_back({row});
    }
    return family(std::vector<Real>(d, 1.0), d, blocks);
}

inline GFrameFamily scaled(GFrameFamily fam, Complex s) {
    for (auto& b : fam.blocks) {
        b *= s;
    }
    return fam;
}

namespace oracle {

inline Real max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    Real worst = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

// sum_i mu_i A_i^* B_i by explicit loops.
inline ComplexMatrix weighted_gram(const std::vector<Real>& w, const std::vector<ComplexMatrix>& a,
                                   const std::vector<ComplexMatrix>& b) {
    const Eigen::Index p = a[0].cols();
    const Eigen::Index q = b[0].cols();
    ComplexMatrix out = ComplexMatrix::Zero(p, q);
    for (std::size_t k = 0; k < w.size(); ++k) {
        for (Eigen::Index i = 0; i < p; ++i) {
            for (Eigen::Index j = 0; j < q; ++j) {
                Complex s = 0.0;
                for (Eigen::Index r = 0; r < a[k].rows(); ++r) {
                    s += std::conj(a[k](r, i)) * b[k](r, j);
                }
                out(i, j) += w[k] * s;
            }
        }
    }
    return out;
}

inline ComplexMatrix frame_operator(const GFrameFamily& f) {
    return weighted_gram(f.space.weights, f.blocks, f.blocks);
}

// S_{Theta Lambda} = sum mu_i Theta_i^* Lambda_i.
inline ComplexMatrix cross(const GFrameFamily& theta, const GFrameFamily& lambda) {
    return weighted_gram(theta.space.weights, theta.blocks, lambda.blocks);
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out = ComplexMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            for (Eigen::Index k = 0; k < a.cols(); ++k) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

// Rank by Gaussian elimination with complete pivoting; pivots below
// rel * (largest entry) count as zero.
inline int rank(ComplexMatrix m, Real rel = 1e-10) {
    Real scale = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            scale = std::max(scale, std::abs(m(i, j)));
        }
    }
    int r = 0;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    while (r < rows && r < cols) {
        Eigen::Index pi = r;
        Eigen::Index pj = r;
        for (Eigen::Index i = r; i < rows; ++i) {
            for (Eigen::Index j = r; j < cols; ++j) {
                if (std::abs(m(i, j)) > std::abs(m(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (std::abs(m(pi, pj)) <= rel * scale || scale == 0.0) {
            break;
        }
        m.row(r).swap(m.row(pi));
        m.col(r).swap(m.col(pj));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            const Complex f = m(i, r) / m(r, r);
            for (Eigen::Index j = r; j < cols; ++j) {
                m(i, j) -= f * m(r, j);
            }
        }
        ++r;
    }
    return r;
}

// Gauss-Jordan inverse with partial pivoting.
inline ComplexMatrix inverse(ComplexMatrix a) {
    const Eigen::Index n = a.rows();
    ComplexMatrix inv = ComplexMatrix::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (std::abs(a(i, c)) > std::abs(a(p, c))) {
                p = i;
            }
        }
        a.row(c).swap(a.row(p));
        inv.row(c).swap(inv.row(p));
        const Complex d = a(c, c);
        a.row(c) /= d;
        inv.row(c) /= d;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i != c) {
                const Complex f = a(i, c);
                a.row(i) -= f * a.row(c);
                inv.row(i) -= f * inv.row(c);
            }
        }
    }
    return inv;
}

// Eigenvalues (ascending) of a Hermitian matrix. The real symmetric
// embedding [[Re, -Im], [Im, Re]] doubles each eigenvalue; cyclic Jacobi
// sweeps diagonalize it and every second value is kept.
inline std::vector<Real> hermitian_eigenvalues(const ComplexMatrix& h) {
    const Eigen::Index n = h.rows();
    const Eigen::Index m = 2 * n;
    std::vector<std::vector<Real>> a(m, std::vector<Real>(m));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a[i][j] = a[i + n][j + n] = h(i, j).real();
            a[i][j + n] = -h(i, j).imag();
            a[i + n][j] = h(i, j).imag();
        }
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        Real off = 0.0;
        for (Eigen::Index p = 0; p < m; ++p) {
            for (Eigen::Index q = p + 1; q < m; ++q) {
                off += a[p][q] * a[p][q];
            }
        }
        if (off < 1e-34) {
            break;
        }
        for (Eigen::Index p = 0; p < m; ++p) {
            for (Eigen::Index q = p + 1; q < m; ++q) {
                if (std::abs(a[p][q]) < 1e-300) {
                    continue;
                }
                const Real theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const Real t = (theta >= 0 ? 1.0 : -1.0) /
                               (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const Real c = 1.0 / std::sqrt(t * t + 1.0);
                const Real s = t * c;
                for (Eigen::Index k = 0; k < m; ++k) {
                    const Real akp = a[k][p];
                    const Real akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < m; ++k) {
                    const Real apk = a[p][k];
                    const Real aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<Real> all(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        all[i] = a[i][i];
    }
    std::sort(all.begin(), all.end());
    std::vector<Real> out;
    for (Eigen::Index i = 0; i < m; i += 2) {
        out.push_back(0.5 * (all[i] + all[i + 1]));
    }
    return out;
}

// Closed-form eigenvalues of [[a, b], [conj(b), c]].
inline std::pair<Real, Real> eig2(Real a, Complex b, Real c) {
    const Real mean = 0.5 * (a + c);
    const Real rad = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(b));
    return {mean - rad, mean + rad};
}

} // namespace oracle

} // namespace support
