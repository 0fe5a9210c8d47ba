#pragma once

#include "hodgejac/hodge.hpp"
#include "hodgejac/ivhs.hpp"

namespace hodgejac {

// The 2-jet f + s g + t h + s t k of a two-parameter family; g, h, k are
// the derivatives d/ds, d/dt and d^2/dt ds at the origin, all of degree d.
struct FamilyJet {
    GradedPolynomial g;
    GradedPolynomial h;
    GradedPolynomial k;
};

// d^2/dt ds of P*Omega/f^{q+1} at the origin, split into
//   first_term  = [-(q+1) k P]        at Hodge index q+1 (pole order q+2)
//   second_term = [(q+1)(q+2) g h P]  at Hodge index q+2 (pole order q+3).
// An index beyond n lands in a ring degree above the socle, so the
// corresponding class is zero (an empty coordinate vector).
struct SecondDerivativeDecomposition {
    int q = 0;
    ResidueClass first_term;
    ResidueClass second_term;
};

SecondDerivativeDecomposition jet_second_derivative(const JacobianRing& ring, const FamilyJet& jet,
                                                    const GradedPolynomial& p, int q);

struct TangentImageWitness {
    bool member = false;
    // Coefficients on the standard basis of R^d; empty when not a member.
    Vector coefficients;
    // sum_j coefficients_j * e_j.
    GradedPolynomial tangent;
};

// Decides whether the first term equals -(q+1)[e P] for some e in R^d, by
// solving for it in the span of {-(q+1)[e_j P]} over the basis e_j of R^d.
TangentImageWitness first_term_in_tangent_image(const JacobianRing& ring, const SecondDerivativeDecomposition& dec,
                                                const GradedPolynomial& p, int q);

// Rows -(q+1)[e_j P] for the standard basis e_j of R^d.
ExactMatrix tangent_image_span(const JacobianRing& ring, const GradedPolynomial& p, int q);

}  // namespace hodgejac
