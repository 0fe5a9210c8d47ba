#include "hodgejac/hodge.hpp"

#include <numeric>

#include "hodgejac/errors.hpp"

namespace hodgejac {

int hodge_piece_degree(int n, int d, int q) {
    if (q < 0 || q > n) {
        throw InputError("Hodge index q = " + std::to_string(q) + " outside 0.." + std::to_string(n));
    }
    return (q + 1) * d - (n + 2);
}

std::vector<int> hodge_piece_degrees(int n, int d) {
    std::vector<int> t;
    for (int q = 0; q <= n; ++q) t.push_back(hodge_piece_degree(n, d, q));
    return t;
}

std::size_t PrimitiveHodgeNumbers::total() const { return std::accumulate(h.begin(), h.end(), std::size_t{0}); }

PrimitiveHodgeNumbers primitive_hodge_numbers(const JacobianRing& ring) {
    ring.require_smooth();
    const auto& h = ring.hypersurface();
    PrimitiveHodgeNumbers out;
    for (int t : hodge_piece_degrees(h.dimension(), h.degree())) out.h.push_back(ring.dim(t));
    return out;
}

ResidueClass residue_class(const JacobianRing& ring, const GradedPolynomial& p, int q) {
    const auto& h = ring.hypersurface();
    const int t = hodge_piece_degree(h.dimension(), h.degree(), q);
    if (p.degree() != t) {
        throw DegreeMismatchError("representative of H^{n-" + std::to_string(q) + "," + std::to_string(q) +
                                      "} must have degree t(q)",
                                  t, p.degree());
    }
    ring.require_smooth();
    return ResidueClass{q, ring.normal_form(p, t)};
}

}  // namespace hodgejac
