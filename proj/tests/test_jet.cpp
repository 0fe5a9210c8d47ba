#include <doctest.h>

#include <random>

#include "hodgejac/errors.hpp"
#include "hodgejac/jet.hpp"
#include "support.hpp"

using namespace hodgejac;
using hodgejac::testing::fermat;
using hodgejac::testing::poly;
using hodgejac::testing::random_form;

namespace {

const Field Q = Field::rationals();

GradedPolynomial zero_form(std::size_t nvars, int d) { return GradedPolynomial(nvars, d, Q); }

}  // namespace

TEST_CASE("second derivative on the Fermat quartic") {
    const JacobianRing ring{Hypersurface(fermat(4, 4))};
    const auto g = poly("x0*x1*x2*x3");
    const FamilyJet jet{g, g, zero_form(4, 4)};
    const auto one = poly("1", Q, 4);
    const auto dec = jet_second_derivative(ring, jet, one, 0);
    CHECK(dec.first_term.hodge_index == 1);
    CHECK(dec.first_term.element.coords.size() == 19);
    CHECK(dec.first_term.is_zero());
    CHECK(dec.second_term.hodge_index == 2);
    CHECK(dec.second_term.element.coords == Vector{Scalar(2L, Q)});

    const auto witness = first_term_in_tangent_image(ring, dec, one, 0);
    CHECK(witness.member);
    for (const auto& c : witness.coefficients) CHECK(c.is_zero());
    CHECK(witness.tangent.is_zero());
}

TEST_CASE("mixed derivative in J contributes nothing") {
    const JacobianRing ring{Hypersurface(fermat(4, 4))};
    std::mt19937_64 rng(1);
    const FamilyJet jet{random_form(4, 4, rng), random_form(4, 4, rng), poly("x0^4", Q, 4)};
    const auto dec = jet_second_derivative(ring, jet, poly("1", Q, 4), 0);
    CHECK(dec.first_term.is_zero());
}

TEST_CASE("a vanishing first-order direction kills the second term") {
    const JacobianRing ring{Hypersurface(fermat(4, 4))};
    std::mt19937_64 rng(2);
    for (int q = 0; q <= 2; ++q) {
        const auto p = random_form(4, hodge_piece_degree(2, 4, q), rng);
        const auto a = jet_second_derivative(ring, FamilyJet{zero_form(4, 4), random_form(4, 4, rng), random_form(4, 4, rng)}, p, q);
        const auto b = jet_second_derivative(ring, FamilyJet{random_form(4, 4, rng), zero_form(4, 4), random_form(4, 4, rng)}, p, q);
        CHECK(a.second_term.is_zero());
        CHECK(b.second_term.is_zero());
    }
}

TEST_CASE("jet input validation") {
    const JacobianRing ring{Hypersurface(fermat(4, 4))};
    const FamilyJet jet{zero_form(4, 4), zero_form(4, 4), zero_form(4, 4)};
    CHECK_THROWS_AS(jet_second_derivative(ring, jet, poly("x0", Q, 4), 0), DegreeMismatchError);
    CHECK_THROWS_AS(jet_second_derivative(ring, jet, poly("1", Q, 4), 3), InputError);
    const FamilyJet bad{zero_form(4, 3), zero_form(4, 4), zero_form(4, 4)};
    CHECK_THROWS_AS(jet_second_derivative(ring, bad, poly("1", Q, 4), 0), DegreeMismatchError);
    const JacobianRing singular{Hypersurface(poly("x0^3 + x1^3", Q, 3))};
    CHECK_THROWS_AS(jet_second_derivative(singular, FamilyJet{zero_form(3, 3), zero_form(3, 3), zero_form(3, 3)},
                                          poly("1", Q, 3), 0),
                    NotSmoothError);
}

TEST_CASE("jets agree with the second fundamental form and the IVHS") {
    for (const auto& f : {fermat(4, 4), poly("x0^4 + x1^4 + x2^4 + x3^4 - x0*x1*x2*x3"), fermat(5, 3)}) {
        const JacobianRing ring{Hypersurface(f)};
        const auto& h = ring.hypersurface();
        const int n = h.dimension();
        const int d = h.degree();
        std::mt19937_64 rng(42);
        for (int trial = 0; trial < 4; ++trial) {
            const FamilyJet jet{random_form(h.nvars(), d, rng), random_form(h.nvars(), d, rng),
                                random_form(h.nvars(), d, rng)};
            const auto sff = second_fundamental_form(ring, make_tangent(ring, jet.g), make_tangent(ring, jet.h));
            const auto ivhs = ivhs_operator(ring, make_tangent(ring, jet.k));
            const FamilyJet swapped{jet.h, jet.g, jet.k};
            for (int q = 0; q <= n; ++q) {
                const int t = hodge_piece_degree(n, d, q);
                for (std::size_t j = 0; j < ring.dim(t); ++j) {
                    const auto basis = ring.basis_element(t, j);
                    const auto p = ring.lift(basis);
                    const auto dec = jet_second_derivative(ring, jet, p, q);

                    if (q + 2 <= n) {
                        CHECK(dec.second_term.element.coords == sff.apply(q, q + 2, basis.coords));
                    } else {
                        CHECK(dec.second_term.element.coords.empty());
                    }
                    CHECK(jet_second_derivative(ring, swapped, p, q).second_term == dec.second_term);

                    // the first term is the IVHS of k applied to [P]
                    if (q + 1 <= n) {
                        CHECK(dec.first_term.element.coords == ivhs.block(q).apply(basis.coords));
                    }

                    const auto witness = first_term_in_tangent_image(ring, dec, p, q);
                    REQUIRE(witness.member);
                    const auto rebuilt = ring.normal_form(multiply(witness.tangent, p) * Scalar(-(q + 1), Q));
                    CHECK(rebuilt.coords == dec.first_term.element.coords);
                }
            }
        }
    }
}

TEST_CASE("degenerate jet reproduces the IVHS") {
    const JacobianRing ring{Hypersurface(fermat(4, 4))};
    std::mt19937_64 rng(6);
    const auto g = random_form(4, 4, rng);
    const auto op = ivhs_operator(ring, make_tangent(ring, g));
    // with h = k = 0 and g moved into the mixed slot, the first term is the IVHS of g
    for (int q = 0; q < 2; ++q) {
        const int t = hodge_piece_degree(2, 4, q);
        for (std::size_t j = 0; j < ring.dim(t); ++j) {
            const auto basis = ring.basis_element(t, j);
            const auto dec = jet_second_derivative(ring, FamilyJet{g, zero_form(4, 4), g}, ring.lift(basis), q);
            CHECK(dec.first_term.element.coords == op.block(q).apply(basis.coords));
            CHECK(dec.second_term.is_zero());
        }
    }
}

namespace {

// A vector orthogonal to the span of {-(q+1)[e P]} is outside it over Q.
void check_adversarial(const JacobianRing& ring, const GradedPolynomial& p, int q) {
    const ExactMatrix span = tangent_image_span(ring, p, q);
    REQUIRE(rank(span) < span.cols());
    const auto orthogonal = kernel_basis(span);
    REQUIRE_FALSE(orthogonal.empty());
    const auto& w = orthogonal.front();
    for (const auto& s : span.apply(w)) REQUIRE(s.is_zero());

    const int t_next = hodge_piece_degree(ring.hypersurface().dimension(), ring.hypersurface().degree(), q + 1);
    SecondDerivativeDecomposition dec;
    dec.q = q;
    dec.first_term = ResidueClass{q + 1, RingElement{t_next, w}};
    dec.second_term = ResidueClass{q + 2, ring.zero(t_next + ring.hypersurface().degree())};
    const auto witness = first_term_in_tangent_image(ring, dec, p, q);
    CHECK_FALSE(witness.member);
    CHECK(witness.coefficients.empty());
}

}  // namespace

TEST_CASE("non-members of the tangent image are rejected") {
    // Fermat cubic threefold, P = x0 in R^1: e x0 vanishes in R^4 whenever x0 | e.
    const JacobianRing cubic3{Hypersurface(fermat(5, 3))};
    check_adversarial(cubic3, poly("x0", Q, 5), 1);

    // Fermat quintic, P = x0^3 x1^2 next to the socle of its x0, x1 factors.
    const JacobianRing quintic{Hypersurface(fermat(5, 5))};
    check_adversarial(quintic, poly("x0^3*x1^2", Q, 5), 1);

    // mismatched decomposition
    SecondDerivativeDecomposition dec;
    dec.q = 1;
    dec.first_term = ResidueClass{2, RingElement{4, Vector(3, Scalar::zero(Q))}};
    CHECK_THROWS_AS(first_term_in_tangent_image(cubic3, dec, poly("x0", Q, 5), 1), DimensionError);
}
