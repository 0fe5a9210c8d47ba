#include "hodgejac/jet.hpp"

#include "hodgejac/errors.hpp"

namespace hodgejac {

namespace {

// Hodge-piece degree without the 0..n range check; indices past n are
// valid bookkeeping for classes that vanish.
int piece_degree(const Hypersurface& h, int q) { return (q + 1) * h.degree() - (h.dimension() + 2); }

void check_jet(const JacobianRing& ring, const FamilyJet& jet) {
    const int d = ring.hypersurface().degree();
    if (jet.g.degree() != d) throw DegreeMismatchError("jet derivative g", d, jet.g.degree());
    if (jet.h.degree() != d) throw DegreeMismatchError("jet derivative h", d, jet.h.degree());
    if (jet.k.degree() != d) throw DegreeMismatchError("jet mixed derivative k", d, jet.k.degree());
}

}  // namespace

SecondDerivativeDecomposition jet_second_derivative(const JacobianRing& ring, const FamilyJet& jet,
                                                    const GradedPolynomial& p, int q) {
    const auto& h = ring.hypersurface();
    const int t = hodge_piece_degree(h.dimension(), h.degree(), q);
    if (p.degree() != t) throw DegreeMismatchError("jet class P must have degree t(q)", t, p.degree());
    check_jet(ring, jet);
    ring.require_smooth();

    const Field& field = ring.field();
    SecondDerivativeDecomposition out;
    out.q = q;
    const GradedPolynomial first = multiply(jet.k, p) * Scalar(-(q + 1), field);
    const GradedPolynomial second = multiply(multiply(jet.g, jet.h), p) * Scalar(static_cast<long>((q + 1) * (q + 2)), field);
    out.first_term = ResidueClass{q + 1, ring.normal_form(first, piece_degree(h, q + 1))};
    out.second_term = ResidueClass{q + 2, ring.normal_form(second, piece_degree(h, q + 2))};
    return out;
}

ExactMatrix tangent_image_span(const JacobianRing& ring, const GradedPolynomial& p, int q) {
    const auto& h = ring.hypersurface();
    const int d = h.degree();
    const auto& tangent_basis = ring.quotient_basis(d);
    const int target = p.degree() + d;
    ExactMatrix span(tangent_basis.size(), ring.dim(target), ring.field());
    const Scalar scale(-(q + 1), ring.field());
    for (std::size_t j = 0; j < tangent_basis.size(); ++j) {
        const auto image = ring.normal_form(multiply(GradedPolynomial::from_monomial(tangent_basis[j], scale), p));
        for (std::size_t i = 0; i < image.coords.size(); ++i) span(j, i) = image.coords[i];
    }
    return span;
}

TangentImageWitness first_term_in_tangent_image(const JacobianRing& ring, const SecondDerivativeDecomposition& dec,
                                                const GradedPolynomial& p, int q) {
    const auto& h = ring.hypersurface();
    if (dec.q != q) throw InputError("decomposition was computed for a different Hodge index");
    const int t = hodge_piece_degree(h.dimension(), h.degree(), q);
    if (p.degree() != t) throw DegreeMismatchError("jet class P must have degree t(q)", t, p.degree());

    const ExactMatrix span = tangent_image_span(ring, p, q);
    const auto& target = dec.first_term.element.coords;
    if (target.size() != span.cols()) {
        throw DimensionError("first term has " + std::to_string(target.size()) + " coordinates, expected " +
                             std::to_string(span.cols()));
    }

    TangentImageWitness out;
    out.tangent = GradedPolynomial(h.nvars(), h.degree(), ring.field());
    auto coeffs = membership(target, span);
    if (!coeffs) return out;
    out.member = true;
    out.coefficients = std::move(*coeffs);
    const auto& basis = ring.quotient_basis(h.degree());
    for (std::size_t j = 0; j < basis.size(); ++j) out.tangent.add_term(basis[j], out.coefficients[j]);
    return out;
}

}  // namespace hodgejac
