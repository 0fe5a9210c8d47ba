#include "hodgejac/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "hodgejac/errors.hpp"

namespace hodgejac {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        // exact at every step: result * (n - r + i) is divisible by i
        result = result * (n - r + i) / i;
    }
    return result;
}

void enumerate(std::size_t nvars, std::size_t pos, std::uint32_t remaining, std::vector<std::uint32_t>& current,
               std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        current[pos] = remaining;
        out.emplace_back(current);
        return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
        current[pos] = e;
        enumerate(nvars, pos + 1, remaining - e, current, out);
    }
    current[pos] = 0;
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      degree_(static_cast<int>(std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0}))) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw InputError("variable index " + std::to_string(i) + " out of range");
    std::vector<std::uint32_t> e(nvars, 0);
    e[i] = 1;
    return Monomial(std::move(e));
}

std::size_t Monomial::index() const {
    const std::size_t n = exponents_.size();
    std::uint64_t idx = 0;
    std::uint64_t remaining = static_cast<std::uint64_t>(degree_);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // monomials sharing the prefix but with a larger exponent at position i come first
        for (std::uint64_t j = exponents_[i] + 1; j <= remaining; ++j) {
            idx += count_monomials(n - i - 1, static_cast<int>(remaining - j));
        }
        remaining -= exponents_[i];
    }
    return static_cast<std::size_t>(idx);
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i);
        if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
    }
    return out.empty() ? std::string("1") : out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("monomial product with mismatched variable counts");
    std::vector<std::uint32_t> e(a.exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents_[i];
    return Monomial(std::move(e));
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::uint64_t count_monomials(std::size_t nvars, int k) {
    if (k < 0 || nvars == 0) return (k == 0 && nvars == 0) ? 1 : 0;
    return binomial(nvars + static_cast<std::uint64_t>(k) - 1, static_cast<std::uint64_t>(k));
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int k) {
    if (nvars == 0) throw InputError("monomials_of_degree needs at least one variable");
    std::vector<Monomial> out;
    if (k < 0) return out;
    out.reserve(count_monomials(nvars, k));
    std::vector<std::uint32_t> current(nvars, 0);
    enumerate(nvars, 0, static_cast<std::uint32_t>(k), current, out);
    return out;
}

GradedPolynomial::GradedPolynomial(std::size_t nvars, int degree, Field field)
    : nvars_(nvars), degree_(degree), field_(field) {}

GradedPolynomial GradedPolynomial::from_monomial(const Monomial& m, const Scalar& coeff) {
    GradedPolynomial p(m.nvars(), m.degree(), coeff.field());
    p.add_term(m, coeff);
    return p;
}

GradedPolynomial GradedPolynomial::from_dense(std::size_t nvars, int degree, std::span<const Scalar> coeffs,
                                              const Field& field) {
    const auto basis = monomials_of_degree(nvars, degree);
    if (coeffs.size() != basis.size()) {
        throw DimensionError("dense vector of length " + std::to_string(coeffs.size()) + " but " +
                             std::to_string(basis.size()) + " monomials of degree " + std::to_string(degree));
    }
    GradedPolynomial p(nvars, degree, field);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
    return p;
}

Scalar GradedPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void GradedPolynomial::add_term(const Monomial& m, const Scalar& c) {
    if (m.nvars() != nvars_) throw DimensionError("term has " + std::to_string(m.nvars()) + " variables, expected " +
                                                  std::to_string(nvars_));
    if (m.degree() != degree_) throw DegreeMismatchError("term " + m.to_string(), degree_, m.degree());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<Scalar> GradedPolynomial::to_dense() const {
    std::vector<Scalar> out(count_monomials(nvars_, degree_), Scalar::zero(field_));
    for (const auto& [m, c] : terms_) out[m.index()] = c;
    return out;
}

GradedPolynomial GradedPolynomial::to_field(const Field& target) const {
    if (field_ == target) return *this;
    if (!field_.is_rational()) throw std::invalid_argument("only rational polynomials can change field");
    GradedPolynomial out(nvars_, degree_, target);
    for (const auto& [m, c] : terms_) out.add_term(m, hodgejac::to_field(c.rational(), target));
    return out;
}

std::string GradedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string coeff = c.to_string();
        const bool negative = !coeff.empty() && coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const bool constant = m.degree() == 0;
        if (coeff != "1" || constant) {
            out += coeff;
            if (!constant) out += '*';
        }
        if (!constant) out += m.to_string();
    }
    return out;
}

void GradedPolynomial::check_compatible(const GradedPolynomial& rhs, const char* op) const {
    if (nvars_ != rhs.nvars_) throw DimensionError(std::string(op) + ": variable counts differ");
    if (degree_ != rhs.degree_) throw DegreeMismatchError(op, degree_, rhs.degree_);
    if (!(field_ == rhs.field_)) throw std::invalid_argument(std::string(op) + ": fields differ");
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& rhs) {
    check_compatible(rhs, "polynomial addition");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& rhs) {
    check_compatible(rhs, "polynomial subtraction");
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

GradedPolynomial partial_derivative(const GradedPolynomial& f, std::size_t i) {
    if (i >= f.nvars()) {
        throw InputError("derivative index " + std::to_string(i) + " out of range for " +
                         std::to_string(f.nvars()) + " variables");
    }
    if (f.degree() < 1) throw InputError("derivative of a degree-0 polynomial");
    GradedPolynomial out(f.nvars(), f.degree() - 1, f.field());
    for (const auto& [m, c] : f.terms()) {
        const std::uint32_t e = m.exponent(i);
        if (e == 0) continue;
        std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().end());
        exps[i] -= 1;
        out.add_term(Monomial(std::move(exps)), c * Scalar(static_cast<long>(e), f.field()));
    }
    return out;
}

GradedPolynomial multiply(const GradedPolynomial& a, const GradedPolynomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("polynomial product with mismatched variable counts");
    if (!(a.field() == b.field())) throw std::invalid_argument("polynomial product over different fields");
    GradedPolynomial out(a.nvars(), a.degree() + b.degree(), a.field());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

namespace {

struct RawTerm {
    mpq_class coeff;
    std::vector<std::uint32_t> exponents;  // grows to the largest variable index seen
    int degree = 0;
};

class Parser {
   public:
    explicit Parser(std::string_view text) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
        }
    }

    std::vector<RawTerm> parse() {
        if (text_.empty()) throw ParseError("empty polynomial");
        std::vector<RawTerm> terms;
        bool first = true;
        while (pos_ < text_.size()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            terms.push_back(term(negative));
            first = false;
        }
        return terms;
    }

   private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    RawTerm term(bool negative) {
        RawTerm t;
        t.coeff = 1;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string literal = digits();
            if (peek() == '/') {
                ++pos_;
                const std::string den = digits();
                if (den.empty()) fail("expected denominator");
                literal += '/' + den;
            }
            t.coeff = parse_rational(literal);
            have_factor = true;
            if (peek() == '*') {
                ++pos_;
                if (peek() != 'x') fail("expected variable after '*'");
            }
        }
        while (peek() == 'x') {
            ++pos_;
            const std::string index = digits();
            if (index.empty()) fail("expected variable index after 'x'");
            const std::size_t var = std::stoul(index);
            std::uint32_t exp = 1;
            if (peek() == '^') {
                ++pos_;
                const std::string e = digits();
                if (e.empty()) fail("expected exponent after '^'");
                exp = static_cast<std::uint32_t>(std::stoul(e));
            }
            if (t.exponents.size() <= var) t.exponents.resize(var + 1, 0);
            t.exponents[var] += exp;
            t.degree += static_cast<int>(exp);
            have_factor = true;
            if (peek() == '*') {
                ++pos_;
                if (peek() != 'x') fail("expected variable after '*'");
            }
        }
        if (!have_factor) {
            if (std::isalpha(static_cast<unsigned char>(peek()))) fail(std::string("unknown variable '") + peek() + "'");
            fail("expected a term");
        }
        if (peek() != '\0' && peek() != '+' && peek() != '-') {
            if (std::isalpha(static_cast<unsigned char>(peek()))) fail(std::string("unknown variable '") + peek() + "'");
            fail(std::string("unexpected character '") + peek() + "'");
        }
        if (negative) t.coeff = -t.coeff;
        return t;
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace

GradedPolynomial parse_polynomial(std::string_view text, const Field& field, const ParseOptions& options) {
    auto terms = Parser(text).parse();

    // Literal zeros ("0", "0*x1") carry no degree information.
    std::optional<int> degree;
    std::size_t used_vars = 0;
    for (const auto& t : terms) {
        used_vars = std::max(used_vars, t.exponents.size());
        if (sgn(t.coeff) == 0) continue;
        if (!degree) {
            degree = t.degree;
        } else if (*degree != t.degree) {
            throw InhomogeneousError(*degree, t.degree);
        }
    }

    std::size_t nvars = used_vars;
    if (options.nvars) {
        if (*options.nvars < used_vars) {
            throw ParseError("unknown variable x" + std::to_string(used_vars - 1) + " (only " +
                             std::to_string(*options.nvars) + " variables)");
        }
        nvars = *options.nvars;
    }
    if (nvars == 0) nvars = 1;

    GradedPolynomial out(nvars, degree.value_or(options.zero_degree.value_or(0)), field);
    for (auto& t : terms) {
        if (sgn(t.coeff) == 0) continue;
        t.exponents.resize(nvars, 0);
        out.add_term(Monomial(std::move(t.exponents)), to_field(t.coeff, field));
    }
    return out;
}

}  // namespace hodgejac
