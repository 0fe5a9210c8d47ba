#include "hodgejac/field.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "hodgejac/errors.hpp"

namespace hodgejac {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 result = 1;
    unsigned __int128 b = base % mod;
    while (exp != 0) {
        if (exp & 1U) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1U;
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 32U)) throw InputError("modulus " + std::to_string(p) + " must be below 2^32");
    if (!hodgejac::is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(std::string_view text) {
    if (text == "rational" || text == "Q") return rationals();
    constexpr std::string_view prefix = "mod:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
            throw InputError("invalid modulus in field '" + std::string(text) + "'");
        }
        return prime(p);
    }
    throw InputError("unknown field '" + std::string(text) + "' (expected rational or mod:<p>)");
}

std::string Field::name() const {
    return is_rational() ? std::string("rational") : "mod:" + std::to_string(modulus_);
}

Scalar::Scalar(long value, const Field& field) {
    if (field.is_rational()) {
        value_ = mpq_class(value);
    } else {
        const auto p = static_cast<long long>(field.modulus());
        long long r = static_cast<long long>(value) % p;
        if (r < 0) r += p;
        value_ = Residue{static_cast<std::uint64_t>(r), field.modulus()};
    }
}

Scalar::Scalar(const mpq_class& value, const Field& field) : Scalar(to_field(value, field)) {}

Scalar to_field(const mpq_class& value, const Field& field) {
    Scalar out;
    if (field.is_rational()) {
        mpq_class q = value;
        q.canonicalize();
        out.value_ = std::move(q);
        return out;
    }
    const std::uint64_t p = field.modulus();
    const std::uint64_t den = reduce_mpz(value.get_den(), p);
    if (den == 0) {
        throw BadPrimeError("denominator " + value.get_den().get_str() + " vanishes modulo " + std::to_string(p));
    }
    const std::uint64_t num = reduce_mpz(value.get_num(), p);
    out.value_ = Scalar::Residue{static_cast<std::uint64_t>(static_cast<unsigned __int128>(num) * mod_pow(den, p - 2, p) % p), p};
    return out;
}

Field Scalar::field() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
    return Field::rationals();
}

bool Scalar::is_zero() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
    return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw std::logic_error("Scalar::rational on a prime-field element");
}

std::uint64_t Scalar::residue() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
    throw std::logic_error("Scalar::residue on a rational element");
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
    return std::get<mpq_class>(value_).get_str();
}

void Scalar::check_same_field(const Scalar& rhs) const {
    const auto* a = std::get_if<Residue>(&value_);
    const auto* b = std::get_if<Residue>(&rhs.value_);
    if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
        throw std::invalid_argument("arithmetic between scalars of different fields");
    }
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    if (auto* r = std::get_if<Residue>(&out.value_)) {
        if (r->value != 0) r->value = r->modulus - r->value;
    } else {
        auto& q = std::get<mpq_class>(out.value_);
        q = -q;
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_)) {
        r->value += std::get<Residue>(rhs.value_).value;
        if (r->value >= r->modulus) r->value -= r->modulus;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_)) {
        const std::uint64_t b = std::get<Residue>(rhs.value_).value;
        r->value = r->value >= b ? r->value - b : r->value + r->modulus - b;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_)) {
        r->value = r->value * std::get<Residue>(rhs.value_).value % r->modulus;
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    Scalar out = *this;
    if (auto* r = std::get_if<Residue>(&out.value_)) {
        r->value = mod_pow(r->value, r->modulus - 2, r->modulus);
    } else {
        auto& q = std::get<mpq_class>(out.value_);
        q = 1 / q;
    }
    return out;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    const auto* a = std::get_if<Scalar::Residue>(&lhs.value_);
    const auto* b = std::get_if<Scalar::Residue>(&rhs.value_);
    if (a != nullptr && b != nullptr) return a->modulus == b->modulus && a->value == b->value;
    if (a != nullptr || b != nullptr) return false;
    return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

mpq_class parse_rational(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const auto num = body.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) {
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

}  // namespace hodgejac
