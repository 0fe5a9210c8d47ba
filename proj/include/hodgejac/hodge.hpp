#pragma once

#include <cstddef>
#include <vector>

#include "hodgejac/jacobian_ring.hpp"

namespace hodgejac {

// Degree t(q) = (q+1)d - (n+2) of the Jacobian ring piece carrying
// H^{n-q,q}_prim. Throws InputError unless 0 <= q <= n. The result may be
// negative or exceed the socle degree; the piece is then zero.
int hodge_piece_degree(int n, int d, int q);

// t(0), ..., t(n).
std::vector<int> hodge_piece_degrees(int n, int d);

// h_q = dim H^{n-q,q}_prim for q = 0..n.
struct PrimitiveHodgeNumbers {
    std::vector<std::size_t> h;

    std::size_t total() const;
    friend bool operator==(const PrimitiveHodgeNumbers&, const PrimitiveHodgeNumbers&) = default;
};

// Each h_q is computed from its own ring piece, so h_q == h_{n-q} is a
// genuine cross-check rather than a consequence of the code path.
PrimitiveHodgeNumbers primitive_hodge_numbers(const JacobianRing& ring);

// The class in H^{n-q,q}_prim represented by P*Omega/f^{q+1}, stored as
// [P] in R^{t(q)}. Omega is never materialized.
struct ResidueClass {
    int hodge_index = 0;
    RingElement element;

    bool is_zero() const { return element.is_zero(); }
    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

ResidueClass residue_class(const JacobianRing& ring, const GradedPolynomial& p, int q);

}  // namespace hodgejac
