#include "gframe/core.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace gframe {

void TolerancePolicy::check() const {
    if (!(rel_eps > 0.0)) {
        throw PreconditionError("tolerance rel_eps must be positive");
    }
    if (!(rank_eps_factor >= 1.0)) {
        throw PreconditionError("tolerance rank_eps_factor must be >= 1");
    }
}

int GFrameFamily::khat_dim() const {
    return std::accumulate(block_dims.begin(), block_dims.end(), 0);
}

std::vector<int> KHatVector::block_dims() const {
    std::vector<int> dims;
    dims.reserve(blocks.size());
    for (const auto& b : blocks) {
        dims.push_back(static_cast<int>(b.size()));
    }
    return dims;
}

ValidationResult validate_space(const MeasureSpace& space) {
    ValidationResult result;
    if (space.atom_count() < 1) {
        result.violations.push_back("atom_count < 1");
    }
    for (std::size_t i = 0; i < space.weights.size(); ++i) {
        const Real w = space.weights[i];
        if (!(w > 0.0) || !std::isfinite(w)) {
            std::ostringstream msg;
            msg << "mu_" << (i + 1) << " not > 0 (weights[" << i << "] = " << w << ")";
            result.violations.push_back(msg.str());
        }
    }
    return result;
}

ValidationResult validate_family(const GFrameFamily& fam) {
    ValidationResult result = validate_space(fam.space);
    const std::size_t n = fam.space.atom_count();
    if (fam.domain_dim < 1) {
        result.violations.push_back("domain_dim < 1");
    }
    if (fam.block_dims.size() != n) {
        std::ostringstream msg;
        msg << "block_dims.length (" << fam.block_dims.size() << ") != atom_count (" << n << ")";
        result.violations.push_back(msg.str());
    }
    if (fam.blocks.size() != n) {
        std::ostringstream msg;
        msg << "blocks.length (" << fam.blocks.size() << ") != atom_count (" << n << ")";
        result.violations.push_back(msg.str());
    }
    for (std::size_t i = 0; i < fam.block_dims.size(); ++i) {
        if (fam.block_dims[i] < 1) {
            std::ostringstream msg;
            msg << "block_dims[" << i << "] = " << fam.block_dims[i] << " not positive";
            result.violations.push_back(msg.str());
        }
    }
    const std::size_t shared = std::min(fam.blocks.size(), fam.block_dims.size());
    for (std::size_t i = 0; i < shared; ++i) {
        const auto& b = fam.blocks[i];
        if (b.rows() != fam.block_dims[i] || b.cols() != fam.domain_dim) {
            std::ostringstream msg;
            msg << "block " << i << " has shape " << b.rows() << "x" << b.cols() << ", expected "
                << fam.block_dims[i] << "x" << fam.domain_dim;
            result.violations.push_back(msg.str());
        }
        if (!b.allFinite()) {
            std::ostringstream msg;
            msg << "block " << i << " has non-finite entries";
            result.violations.push_back(msg.str());
        }
    }
    if (fam.khat_dim() < 1) {
        result.violations.push_back("total codomain dimension N < 1");
    }
    return result;
}

void require_valid(const GFrameFamily& fam) {
    const auto result = validate_family(fam);
    if (result.ok()) {
        return;
    }
    std::ostringstream msg;
    msg << "invalid g-frame family:";
    for (const auto& v : result.violations) {
        msg << " [" << v << "]";
    }
    throw ShapeError(msg.str());
}

void require_compatible(const GFrameFamily& a, const GFrameFamily& b) {
    require_valid(a);
    require_valid(b);
    if (a.space != b.space) {
        throw ShapeError("families are defined over different measure spaces");
    }
    if (a.block_dims != b.block_dims) {
        throw ShapeError("families have different codomain block dimensions");
    }
}

namespace {

void check_khat_shape(const KHatVector& f, const MeasureSpace& space, const char* what) {
    if (f.blocks.size() != space.atom_count()) {
        std::ostringstream msg;
        msg << what << " has " << f.blocks.size() << " blocks but the measure space has "
            << space.atom_count() << " atoms";
        throw ShapeError(msg.str());
    }
}

} // namespace

Complex khat_inner(const KHatVector& f, const KHatVector& g, const MeasureSpace& space) {
    check_khat_shape(f, space, "F");
    check_khat_shape(g, space, "G");
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < space.atom_count(); ++i) {
        if (f.blocks[i].size() != g.blocks[i].size()) {
            std::ostringstream msg;
            msg << "block " << i << " length mismatch: " << f.blocks[i].size() << " vs "
                << g.blocks[i].size();
            throw ShapeError(msg.str());
        }
        // Eigen's dot conjugates its left operand.
        sum += space.weights[i] * g.blocks[i].dot(f.blocks[i]);
    }
    return sum;
}

Real khat_norm(const KHatVector& f, const MeasureSpace& space) {
    return std::sqrt(std::max(0.0, khat_inner(f, f, space).real()));
}

ComplexVector embed(const KHatVector& f, const MeasureSpace& space) {
    check_khat_shape(f, space, "F");
    Eigen::Index total = 0;
    for (const auto& b : f.blocks) {
        total += b.size();
    }
    ComplexVector out(total);
    Eigen::Index offset = 0;
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        const auto& b = f.blocks[i];
        out.segment(offset, b.size()) = std::sqrt(space.weights[i]) * b;
        offset += b.size();
    }
    return out;
}

KHatVector unembed(const ComplexVector& v, const MeasureSpace& space,
                   const std::vector<int>& block_dims) {
    if (block_dims.size() != space.atom_count()) {
        throw ShapeError("block_dims length does not match atom count");
    }
    const int total = std::accumulate(block_dims.begin(), block_dims.end(), 0);
    if (v.size() != total) {
        std::ostringstream msg;
        msg << "embedded vector has length " << v.size() << ", expected " << total;
        throw ShapeError(msg.str());
    }
    KHatVector out;
    out.blocks.reserve(block_dims.size());
    Eigen::Index offset = 0;
    for (std::size_t i = 0; i < block_dims.size(); ++i) {
        out.blocks.emplace_back(v.segment(offset, block_dims[i]) / std::sqrt(space.weights[i]));
        offset += block_dims[i];
    }
    return out;
}

ComplexMatrix analysis_matrix(const GFrameFamily& fam) {
    require_valid(fam);
    ComplexMatrix a(fam.khat_dim(), fam.domain_dim);
    Eigen::Index offset = 0;
    for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
        const auto& b = fam.blocks[i];
        a.middleRows(offset, b.rows()) = std::sqrt(fam.space.weights[i]) * b;
        offset += b.rows();
    }
    return a;
}

GFrameFamily family_from_analysis(const ComplexMatrix& analysis, const MeasureSpace& space,
                                  const std::vector<int>& block_dims) {
    if (block_dims.size() != space.atom_count()) {
        throw ShapeError("block_dims length does not match atom count");
    }
    const int total = std::accumulate(block_dims.begin(), block_dims.end(), 0);
    if (analysis.rows() != total) {
        std::ostringstream msg;
        msg << "analysis matrix has " << analysis.rows() << " rows, expected " << total;
        throw ShapeError(msg.str());
    }
    GFrameFamily fam{space, static_cast<int>(analysis.cols()), block_dims, {}};
    fam.blocks.reserve(block_dims.size());
    Eigen::Index offset = 0;
    for (std::size_t i = 0; i < block_dims.size(); ++i) {
        fam.blocks.emplace_back(analysis.middleRows(offset, block_dims[i]) /
                                std::sqrt(space.weights[i]));
        offset += block_dims[i];
    }
    return fam;
}

KHatVector apply_analysis(const GFrameFamily& fam, const ComplexVector& h) {
    require_valid(fam);
    if (h.size() != fam.domain_dim) {
        throw ShapeError("vector length does not match the family's domain dimension");
    }
    KHatVector out;
    out.blocks.reserve(fam.blocks.size());
    for (const auto& b : fam.blocks) {
        out.blocks.emplace_back(b * h);
    }
    return out;
}

ComplexVector apply_synthesis(const GFrameFamily& fam, const KHatVector& f) {
    require_valid(fam);
    if (f.block_dims() != fam.block_dims) {
        throw ShapeError("K-hat vector block layout does not match the family");
    }
    ComplexVector out = ComplexVector::Zero(fam.domain_dim);
    for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
        out += fam.space.weights[i] * (fam.blocks[i].adjoint() * f.blocks[i]);
    }
    return out;
}

GFrameFamily right_multiply(const GFrameFamily& fam, const ComplexMatrix& op) {
    require_valid(fam);
    if (op.rows() != fam.domain_dim) {
        std::ostringstream msg;
        msg << "operator has " << op.rows() << " rows, family domain dimension is "
            << fam.domain_dim;
        throw ShapeError(msg.str());
    }
    GFrameFamily out{fam.space, static_cast<int>(op.cols()), fam.block_dims, {}};
    out.blocks.reserve(fam.blocks.size());
    for (const auto& b : fam.blocks) {
        out.blocks.emplace_back(b * op);
    }
    return out;
}

} // namespace gframe
