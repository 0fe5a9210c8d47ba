#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace hodgejac {

// Coefficient field: the rationals, or F_p for a prime p < 2^32.
class Field {
   public:
    Field() = default;

    static Field rationals() { return Field{}; }
    // Throws InputError unless p is a prime below 2^32.
    static Field prime(std::uint64_t p);
    // Accepts "rational" or "mod:<p>".
    static Field parse(std::string_view text);

    bool is_rational() const noexcept { return modulus_ == 0; }
    bool is_prime() const noexcept { return modulus_ != 0; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

   private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : modulus_(p) {}

    std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

// An element of a Field. Rationals are kept in lowest terms with positive
// denominator (GMP canonical form); residues are kept in 0..p-1.
class Scalar {
   public:
    // Rational zero.
    Scalar() = default;
    Scalar(long value, const Field& field);
    Scalar(const mpq_class& value, const Field& field);

    static Scalar zero(const Field& field) { return Scalar(0L, field); }
    static Scalar one(const Field& field) { return Scalar(1L, field); }

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const;
    std::uint64_t residue() const;

    // "a", "-a" or "a/b" over Q; the residue in 0..p-1 over F_p.
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    // Throws std::domain_error on division by zero.
    Scalar& operator/=(const Scalar& rhs);
    Scalar inverse() const;

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);
    friend Scalar to_field(const mpq_class& value, const Field& field);

   private:
    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
    };

    void check_same_field(const Scalar& rhs) const;

    std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Reduces a rational into the field; throws BadPrimeError when the
// denominator vanishes modulo p.
Scalar to_field(const mpq_class& value, const Field& field);

// Parses "a" or "a/b" (optional sign) into an exact rational.
mpq_class parse_rational(std::string_view text);

}  // namespace hodgejac
