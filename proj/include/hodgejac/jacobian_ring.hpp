#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hodgejac/linalg.hpp"
#include "hodgejac/poly.hpp"

namespace hodgejac {

// X = {f = 0} in P^{n+1}: f homogeneous of degree d >= 1 in N = n + 2 >= 3
// variables.
class Hypersurface {
   public:
    // In prime-field mode, `rational_source` is the rational polynomial f was
    // reduced from; it enables the exact recheck behind bad-prime detection.
    explicit Hypersurface(GradedPolynomial f, std::optional<GradedPolynomial> rational_source = std::nullopt);

    const GradedPolynomial& f() const noexcept { return f_; }
    const Field& field() const noexcept { return f_.field(); }
    std::size_t nvars() const noexcept { return f_.nvars(); }
    int degree() const noexcept { return f_.degree(); }
    int dimension() const noexcept { return static_cast<int>(f_.nvars()) - 2; }
    const std::vector<GradedPolynomial>& partials() const noexcept { return partials_; }
    const std::optional<GradedPolynomial>& rational_source() const noexcept { return rational_source_; }

   private:
    GradedPolynomial f_;
    std::optional<GradedPolynomial> rational_source_;
    std::vector<GradedPolynomial> partials_;
};

// Top degree (n+2)(d-2) of the Jacobian ring of a smooth hypersurface.
int socle_degree(const Hypersurface& h);

// Rows m * df/dx_i for every monomial m of degree k-(d-1) (canonical order)
// and every i, as dense vectors in S^k.
ExactMatrix ideal_graded_basis(const Hypersurface& h, int k);

// A class in R^k, given by its coordinates on the standard monomials.
struct RingElement {
    int degree = 0;
    Vector coords;

    bool is_zero() const;
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

// R = S/J with J = (df/dx_0, ..., df/dx_{N-1}), computed degree by degree
// on demand. Each degree is built at most once; distinct degrees may be
// requested from different threads concurrently.
class JacobianRing {
   public:
    explicit JacobianRing(Hypersurface h);
    JacobianRing(const JacobianRing&) = delete;
    JacobianRing& operator=(const JacobianRing&) = delete;

    const Hypersurface& hypersurface() const noexcept { return h_; }
    const Field& field() const noexcept { return h_.field(); }
    int socle_degree() const noexcept { return sigma_; }

    std::size_t dim(int k) const;
    std::size_t ambient_dim(int k) const;
    std::size_t ideal_rank(int k) const;
    // Standard monomials of degree k: the non-pivot columns of the reduced J^k.
    const std::vector<Monomial>& quotient_basis(int k) const;
    // Reduced row-echelon form of J^k inside S^k (dense; meant for small k).
    ReducedForm ideal_row_space(int k) const;

    // Coordinates of [P] in R^{deg P}.
    RingElement normal_form(const GradedPolynomial& p) const;
    // Same, insisting on deg P == k.
    RingElement normal_form(const GradedPolynomial& p, int k) const;
    // The polynomial sum_j coords_j * standard_monomial_j.
    GradedPolynomial lift(const RingElement& a) const;
    RingElement multiply(const RingElement& a, const RingElement& b) const;
    RingElement zero(int k) const;
    RingElement basis_element(int k, std::size_t j) const;

    // dim R^{sigma+1} == 0.
    bool is_smooth() const;
    // Throws NotSmoothError, or BadPrimeError when the modular computation
    // disagrees with the exact recheck of the rational source.
    void require_smooth() const;

   private:
    struct Piece;
    struct Slot;

    const Piece& piece(int k) const;
    std::unique_ptr<Piece> build_piece(int k) const;

    Hypersurface h_;
    int sigma_;
    mutable std::mutex slots_mutex_;
    mutable std::map<int, std::shared_ptr<Slot>> slots_;
};

}  // namespace hodgejac
