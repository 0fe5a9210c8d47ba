#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "hodgejac/hodge.hpp"

namespace hodgejac {

// Normalized: IVHS blocks carry -(q+1) and second fundamental form blocks
// carry (q+1)(q+2), so that II(u,v) == M(v) o M(u) with constant 1.
// Raw: bare multiplication by [g] and by [u v].
enum class Normalization { Normalized, Raw };

// A first-order deformation direction g in S^d together with its class in R^d.
struct TangentVector {
    GradedPolynomial g;
    RingElement reduced;
};

TangentVector make_tangent(const JacobianRing& ring, GradedPolynomial g);

// Block matrices between Hodge pieces of the primitive diamond, keyed by
// (source q, target q'). Blocks whose source or target is zero-dimensional
// are stored as empty matrices of the right shape.
class GradedEndomorphism {
   public:
    using Key = std::pair<int, int>;

    void set_block(int source, int target, ExactMatrix m);
    // nullptr when absent.
    const ExactMatrix* block(int source, int target) const;
    const std::map<Key, ExactMatrix>& blocks() const noexcept { return blocks_; }

    bool is_zero() const;
    Vector apply(int source, int target, std::span<const Scalar> coords) const;

    friend bool operator==(const GradedEndomorphism&, const GradedEndomorphism&) = default;

   private:
    std::map<Key, ExactMatrix> blocks_;
};

// The action of a tangent vector: block q is the matrix of
// [P] -> -(q+1)[g P] from R^{t(q)} to R^{t(q+1)}, q = 0..n-1.
class IvhsOperator {
   public:
    IvhsOperator(const JacobianRing* ring, std::vector<ExactMatrix> blocks);

    const JacobianRing* ring() const noexcept { return ring_; }
    int dimension() const noexcept { return static_cast<int>(blocks_.size()); }
    const ExactMatrix& block(int q) const { return blocks_.at(static_cast<std::size_t>(q)); }
    const std::vector<ExactMatrix>& blocks() const noexcept { return blocks_; }

    GradedEndomorphism as_endomorphism() const;

   private:
    const JacobianRing* ring_;
    std::vector<ExactMatrix> blocks_;
};

// Matrix of [P] -> scale * [factor * P] from R^{source_degree} to
// R^{source_degree + deg factor}, in standard-monomial bases.
ExactMatrix multiplication_matrix(const JacobianRing& ring, const GradedPolynomial& factor, int source_degree,
                                  const Scalar& scale);

IvhsOperator ivhs_operator(const JacobianRing& ring, const TangentVector& g,
                           Normalization norm = Normalization::Normalized);

// Blocks (q -> q+2) equal to a.block(q+1) * b.block(q), i.e. a o b.
GradedEndomorphism compose_ivhs(const IvhsOperator& a, const IvhsOperator& b);

// Blocks (q -> q+2): [P] -> (q+1)(q+2)[u v P], built directly from the
// product u v (not through composition).
GradedEndomorphism second_fundamental_form(const JacobianRing& ring, const TangentVector& u, const TangentVector& v,
                                           Normalization norm = Normalization::Normalized);

// {q' - q : block (q -> q') is nonzero}.
std::set<int> block_degrees(const GradedEndomorphism& e);

// Matrix of R^k x R^{sigma-k} -> R^sigma (1-dimensional) in standard bases.
ExactMatrix duality_pairing_matrix(const JacobianRing& ring, int k);

}  // namespace hodgejac
