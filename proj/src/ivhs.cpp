#include "hodgejac/ivhs.hpp"

#include "hodgejac/errors.hpp"

namespace hodgejac {

namespace {

void check_tangent_degree(const JacobianRing& ring, const GradedPolynomial& g, const char* what) {
    const int d = ring.hypersurface().degree();
    if (g.degree() != d) throw DegreeMismatchError(what, d, g.degree());
    if (g.nvars() != ring.hypersurface().nvars()) throw DimensionError(std::string(what) + ": wrong variable count");
}

}  // namespace

TangentVector make_tangent(const JacobianRing& ring, GradedPolynomial g) {
    check_tangent_degree(ring, g, "tangent vector");
    RingElement reduced = ring.normal_form(g);
    return TangentVector{std::move(g), std::move(reduced)};
}

void GradedEndomorphism::set_block(int source, int target, ExactMatrix m) {
    blocks_.insert_or_assign(Key{source, target}, std::move(m));
}

const ExactMatrix* GradedEndomorphism::block(int source, int target) const {
    auto it = blocks_.find(Key{source, target});
    return it == blocks_.end() ? nullptr : &it->second;
}

bool GradedEndomorphism::is_zero() const {
    for (const auto& [key, m] : blocks_) {
        if (!m.is_zero()) return false;
    }
    return true;
}

Vector GradedEndomorphism::apply(int source, int target, std::span<const Scalar> coords) const {
    const ExactMatrix* m = block(source, target);
    if (m == nullptr) {
        throw InputError("no block " + std::to_string(source) + " -> " + std::to_string(target));
    }
    return m->apply(coords);
}

IvhsOperator::IvhsOperator(const JacobianRing* ring, std::vector<ExactMatrix> blocks)
    : ring_(ring), blocks_(std::move(blocks)) {}

GradedEndomorphism IvhsOperator::as_endomorphism() const {
    GradedEndomorphism e;
    for (int q = 0; q < dimension(); ++q) e.set_block(q, q + 1, block(q));
    return e;
}

ExactMatrix multiplication_matrix(const JacobianRing& ring, const GradedPolynomial& factor, int source_degree,
                                  const Scalar& scale) {
    const int target_degree = source_degree + factor.degree();
    const std::size_t rows = ring.dim(target_degree);
    const std::size_t cols = ring.dim(source_degree);
    ExactMatrix m(rows, cols, ring.field());
    if (rows == 0 || cols == 0 || factor.is_zero()) return m;
    const GradedPolynomial scaled = factor * scale;
    const auto& basis = ring.quotient_basis(source_degree);
    for (std::size_t j = 0; j < cols; ++j) {
        const auto image = ring.normal_form(multiply(scaled, GradedPolynomial::from_monomial(basis[j], Scalar::one(ring.field()))));
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = image.coords[i];
    }
    return m;
}

IvhsOperator ivhs_operator(const JacobianRing& ring, const TangentVector& g, Normalization norm) {
    ring.require_smooth();
    check_tangent_degree(ring, g.g, "IVHS direction");
    const auto& h = ring.hypersurface();
    const int n = h.dimension();
    std::vector<ExactMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        const long coefficient = norm == Normalization::Normalized ? -(q + 1) : 1;
        blocks.push_back(multiplication_matrix(ring, g.g, hodge_piece_degree(n, h.degree(), q),
                                               Scalar(coefficient, ring.field())));
    }
    return IvhsOperator(&ring, std::move(blocks));
}

GradedEndomorphism compose_ivhs(const IvhsOperator& a, const IvhsOperator& b) {
    if (a.ring() != b.ring() || a.dimension() != b.dimension()) {
        throw InputError("composing IVHS operators of different hypersurfaces");
    }
    GradedEndomorphism out;
    for (int q = 0; q + 2 <= a.dimension(); ++q) {
        const ExactMatrix& first = b.block(q);
        const ExactMatrix& second = a.block(q + 1);
        if (second.cols() != first.rows()) {
            throw DimensionError("IVHS blocks do not chain at q = " + std::to_string(q));
        }
        out.set_block(q, q + 2, second * first);
    }
    return out;
}

GradedEndomorphism second_fundamental_form(const JacobianRing& ring, const TangentVector& u, const TangentVector& v,
                                           Normalization norm) {
    ring.require_smooth();
    check_tangent_degree(ring, u.g, "second fundamental form argument u");
    check_tangent_degree(ring, v.g, "second fundamental form argument v");
    const auto& h = ring.hypersurface();
    const int n = h.dimension();
    const GradedPolynomial product = multiply(u.g, v.g);
    GradedEndomorphism out;
    for (int q = 0; q + 2 <= n; ++q) {
        const long coefficient = norm == Normalization::Normalized ? (q + 1) * (q + 2) : 1;
        out.set_block(q, q + 2,
                      multiplication_matrix(ring, product, hodge_piece_degree(n, h.degree(), q),
                                            Scalar(coefficient, ring.field())));
    }
    return out;
}

std::set<int> block_degrees(const GradedEndomorphism& e) {
    std::set<int> out;
    for (const auto& [key, m] : e.blocks()) {
        if (!m.is_zero()) out.insert(key.second - key.first);
    }
    return out;
}

ExactMatrix duality_pairing_matrix(const JacobianRing& ring, int k) {
    ring.require_smooth();
    const int sigma = ring.socle_degree();
    if (k < 0 || k > sigma) {
        throw InputError("pairing degree " + std::to_string(k) + " outside 0.." + std::to_string(sigma));
    }
    const auto& left = ring.quotient_basis(k);
    const auto& right = ring.quotient_basis(sigma - k);
    ExactMatrix m(left.size(), right.size(), ring.field());
    const Scalar one = Scalar::one(ring.field());
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            const auto socle = ring.normal_form(GradedPolynomial::from_monomial(left[i] * right[j], one));
            m(i, j) = socle.coords.at(0);
        }
    }
    return m;
}

}  // namespace hodgejac
