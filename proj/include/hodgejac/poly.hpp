#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hodgejac/field.hpp"

namespace hodgejac {

// Exponent vector x0^e0 * ... * x_{N-1}^e_{N-1}.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);

    static Monomial constant(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const noexcept { return exponents_.size(); }
    int degree() const noexcept { return degree_; }
    std::uint32_t exponent(std::size_t i) const { return exponents_.at(i); }
    std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }

    // Position of this monomial in monomials_of_degree(nvars(), degree()).
    std::size_t index() const;

    // "x0^2*x1", or "1" for the constant monomial.
    std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

   private:
    std::vector<std::uint32_t> exponents_;
    int degree_ = 0;
};

// Graded lexicographic order with x0 > x1 > ... > x_{N-1}; "less" means
// "comes first", so within one degree x0^k is the smallest element.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// C(nvars + k - 1, k); zero for negative k.
std::uint64_t count_monomials(std::size_t nvars, int k);

// All monomials of degree k in canonical order; entry i has index() == i.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int k);

// Homogeneous polynomial with a nominal degree that survives cancellation.
// Terms are stored sparsely; no stored coefficient is zero.
class GradedPolynomial {
   public:
    using Terms = std::map<Monomial, Scalar, CanonicalOrder>;

    GradedPolynomial() = default;
    GradedPolynomial(std::size_t nvars, int degree, Field field);

    static GradedPolynomial from_monomial(const Monomial& m, const Scalar& coeff);
    // Inverse of to_dense().
    static GradedPolynomial from_dense(std::size_t nvars, int degree, std::span<const Scalar> coeffs,
                                       const Field& field);

    std::size_t nvars() const noexcept { return nvars_; }
    int degree() const noexcept { return degree_; }
    const Field& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Scalar coefficient(const Monomial& m) const;

    // Adds c*m in place; m must have this polynomial's degree and nvars.
    void add_term(const Monomial& m, const Scalar& c);

    // Dense coefficient vector indexed by canonical monomial index.
    std::vector<Scalar> to_dense() const;

    // Maps rational coefficients into another field.
    GradedPolynomial to_field(const Field& target) const;

    std::string to_string() const;

    GradedPolynomial operator-() const;
    GradedPolynomial& operator+=(const GradedPolynomial& rhs);
    GradedPolynomial& operator-=(const GradedPolynomial& rhs);
    GradedPolynomial& operator*=(const Scalar& s);

    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
    friend GradedPolynomial operator*(GradedPolynomial a, const Scalar& s) { return a *= s; }
    friend GradedPolynomial operator*(const Scalar& s, GradedPolynomial a) { return a *= s; }
    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b);

   private:
    void check_compatible(const GradedPolynomial& rhs, const char* op) const;

    std::size_t nvars_ = 0;
    int degree_ = 0;
    Field field_;
    Terms terms_;
};

GradedPolynomial partial_derivative(const GradedPolynomial& f, std::size_t i);
GradedPolynomial multiply(const GradedPolynomial& a, const GradedPolynomial& b);
inline GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) { return multiply(a, b); }

struct ParseOptions {
    // Number of variables; defaults to largest index used plus one.
    std::optional<std::size_t> nvars;
    // Degree assigned when the text denotes the zero polynomial.
    std::optional<int> zero_degree;
};

// Grammar: terms separated by '+'/'-'; a term is [coeff][*]var^exp[*var^exp...]
// with coeff an integer or a/b and variables x0, x1, ...; whitespace ignored.
GradedPolynomial parse_polynomial(std::string_view text, const Field& field, const ParseOptions& options = {});

}  // namespace hodgejac
