#include "hodgejac/jacobian_ring.hpp"

#include <algorithm>

#include "hodgejac/errors.hpp"

namespace hodgejac {

Hypersurface::Hypersurface(GradedPolynomial f, std::optional<GradedPolynomial> rational_source)
    : f_(std::move(f)), rational_source_(std::move(rational_source)) {
    if (f_.nvars() < 3) {
        throw InputError("a hypersurface needs at least 3 variables (got " + std::to_string(f_.nvars()) + ")");
    }
    if (f_.is_zero()) throw InputError("the defining polynomial is zero");
    if (f_.degree() < 1) throw InputError("the defining polynomial must have degree at least 1");
    if (rational_source_ && !rational_source_->field().is_rational()) {
        throw std::invalid_argument("rational source must be defined over Q");
    }
    partials_.reserve(f_.nvars());
    for (std::size_t i = 0; i < f_.nvars(); ++i) partials_.push_back(partial_derivative(f_, i));
}

int socle_degree(const Hypersurface& h) { return (h.dimension() + 2) * (h.degree() - 2); }

namespace {

SparseRow generator_row(const Monomial& multiplier, const GradedPolynomial& partial) {
    SparseRow row;
    row.reserve(partial.terms().size());
    for (const auto& [m, c] : partial.terms()) row.emplace_back((multiplier * m).index(), c);
    return row;
}

}  // namespace

ExactMatrix ideal_graded_basis(const Hypersurface& h, int k) {
    const std::size_t cols = count_monomials(h.nvars(), k);
    const int shift = k - (h.degree() - 1);
    if (shift < 0) return ExactMatrix(0, cols, h.field());
    const auto multipliers = monomials_of_degree(h.nvars(), shift);
    ExactMatrix out(multipliers.size() * h.nvars(), cols, h.field());
    std::size_t r = 0;
    for (const auto& m : multipliers) {
        for (const auto& partial : h.partials()) {
            for (const auto& [j, s] : generator_row(m, partial)) out(r, j) = s;
            ++r;
        }
    }
    return out;
}

bool RingElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); });
}

struct JacobianRing::Piece {
    int degree = 0;
    std::size_t ambient = 0;
    std::size_t rank = 0;
    // J^k == S^k; nothing else is stored.
    bool saturated = false;
    std::vector<Monomial> standard;
    std::vector<std::size_t> pivots;
    std::vector<long> standard_pos;  // column -> position in `standard`, or -1
    std::vector<long> pivot_row;     // column -> index into `tails`, or -1
    // Reduced row of each pivot, restricted to the standard columns (the
    // entries at other pivot columns are zero by reduction).
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> tails;
};

struct JacobianRing::Slot {
    std::once_flag once;
    std::unique_ptr<Piece> piece;
};

JacobianRing::JacobianRing(Hypersurface h) : h_(std::move(h)), sigma_(hodgejac::socle_degree(h_)) {}

const JacobianRing::Piece& JacobianRing::piece(int k) const {
    std::shared_ptr<Slot> slot;
    {
        std::lock_guard lock(slots_mutex_);
        auto& entry = slots_[k];
        if (!entry) entry = std::make_shared<Slot>();
        slot = entry;
    }
    std::call_once(slot->once, [&] { slot->piece = build_piece(k); });
    return *slot->piece;
}

std::unique_ptr<JacobianRing::Piece> JacobianRing::build_piece(int k) const {
    auto p = std::make_unique<Piece>();
    p->degree = k;
    if (k < 0) {
        p->saturated = true;
        return p;
    }
    p->ambient = count_monomials(h_.nvars(), k);
    // Above sigma+1 a smooth ring vanishes identically.
    if (k > sigma_ + 1 && is_smooth()) {
        p->saturated = true;
        p->rank = p->ambient;
        return p;
    }

    RowEchelon echelon(p->ambient, field());
    const int shift = k - (h_.degree() - 1);
    if (shift >= 0) {
        for (const auto& m : monomials_of_degree(h_.nvars(), shift)) {
            for (const auto& partial : h_.partials()) {
                if (partial.is_zero()) continue;
                echelon.insert(generator_row(m, partial));
                if (echelon.full()) break;
            }
            if (echelon.full()) break;
        }
    }
    p->rank = echelon.rank();
    if (echelon.full()) {
        p->saturated = true;
        return p;
    }

    const auto rows = echelon.reduced_rows();
    p->pivot_row.assign(p->ambient, -1);
    p->standard_pos.assign(p->ambient, -1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        p->pivots.push_back(rows[r].pivot);
        p->pivot_row[rows[r].pivot] = static_cast<long>(r);
    }
    const auto basis = monomials_of_degree(h_.nvars(), k);
    for (std::size_t c = 0; c < p->ambient; ++c) {
        if (p->pivot_row[c] >= 0) continue;
        p->standard_pos[c] = static_cast<long>(p->standard.size());
        p->standard.push_back(basis[c]);
    }
    p->tails.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [c, s] : rows[r].entries) {
            if (c == rows[r].pivot) continue;
            p->tails[r].emplace_back(static_cast<std::size_t>(p->standard_pos[c]), s);
        }
    }
    return p;
}

std::size_t JacobianRing::dim(int k) const {
    const Piece& p = piece(k);
    return p.ambient - p.rank;
}

std::size_t JacobianRing::ambient_dim(int k) const { return piece(k).ambient; }

std::size_t JacobianRing::ideal_rank(int k) const { return piece(k).rank; }

const std::vector<Monomial>& JacobianRing::quotient_basis(int k) const { return piece(k).standard; }

ReducedForm JacobianRing::ideal_row_space(int k) const {
    const Piece& p = piece(k);
    const ExactMatrix generators = ideal_graded_basis(h_, k);
    if (p.saturated) return row_reduce(generators);
    ReducedForm out;
    out.rank = p.rank;
    out.pivots = p.pivots;
    out.rref = ExactMatrix(generators.rows(), p.ambient, field());
    for (std::size_t r = 0; r < p.pivots.size(); ++r) {
        out.rref(r, p.pivots[r]) = Scalar::one(field());
        for (const auto& [j, s] : p.tails[r]) out.rref(r, p.standard[j].index()) = s;
    }
    return out;
}

RingElement JacobianRing::normal_form(const GradedPolynomial& poly) const {
    if (poly.nvars() != h_.nvars()) {
        throw DimensionError("polynomial in " + std::to_string(poly.nvars()) + " variables, ring has " +
                             std::to_string(h_.nvars()));
    }
    if (!(poly.field() == field())) throw InputError("polynomial and ring are over different fields");
    const Piece& p = piece(poly.degree());
    RingElement out{poly.degree(), Vector(p.standard.size(), Scalar::zero(field()))};
    if (p.saturated) return out;
    for (const auto& [m, c] : poly.terms()) {
        const std::size_t col = m.index();
        if (p.standard_pos[col] >= 0) {
            out.coords[static_cast<std::size_t>(p.standard_pos[col])] += c;
            continue;
        }
        for (const auto& [j, e] : p.tails[static_cast<std::size_t>(p.pivot_row[col])]) out.coords[j] -= c * e;
    }
    return out;
}

RingElement JacobianRing::normal_form(const GradedPolynomial& poly, int k) const {
    if (poly.degree() != k) throw DegreeMismatchError("normal form", k, poly.degree());
    return normal_form(poly);
}

GradedPolynomial JacobianRing::lift(const RingElement& a) const {
    const auto& basis = quotient_basis(a.degree);
    if (a.coords.size() != basis.size()) {
        throw DimensionError("ring element has " + std::to_string(a.coords.size()) + " coordinates, R^" +
                             std::to_string(a.degree) + " has dimension " + std::to_string(basis.size()));
    }
    GradedPolynomial out(h_.nvars(), a.degree, field());
    for (std::size_t j = 0; j < basis.size(); ++j) out.add_term(basis[j], a.coords[j]);
    return out;
}

RingElement JacobianRing::multiply(const RingElement& a, const RingElement& b) const {
    return normal_form(hodgejac::multiply(lift(a), lift(b)));
}

RingElement JacobianRing::zero(int k) const { return RingElement{k, Vector(dim(k), Scalar::zero(field()))}; }

RingElement JacobianRing::basis_element(int k, std::size_t j) const {
    RingElement e = zero(k);
    if (j >= e.coords.size()) throw InputError("basis index out of range for R^" + std::to_string(k));
    e.coords[j] = Scalar::one(field());
    return e;
}

bool JacobianRing::is_smooth() const { return dim(sigma_ + 1) == 0; }

void JacobianRing::require_smooth() const {
    const bool smooth_here = is_smooth() && (sigma_ < 0 || dim(sigma_) == 1);
    if (smooth_here) return;
    if (field().is_prime() && h_.rational_source()) {
        JacobianRing exact{Hypersurface(*h_.rational_source())};
        if (exact.is_smooth()) {
            throw BadPrimeError("modulo " + std::to_string(field().modulus()) + " dim R^" + std::to_string(sigma_) +
                                " = " + std::to_string(dim(sigma_)) + " and dim R^" + std::to_string(sigma_ + 1) +
                                " = " + std::to_string(dim(sigma_ + 1)) +
                                ", but the hypersurface is smooth over Q: bad prime");
        }
    }
    throw NotSmoothError("hypersurface is not smooth: dim R^" + std::to_string(sigma_ + 1) + " = " +
                         std::to_string(dim(sigma_ + 1)) + " (must vanish above the socle degree " +
                         std::to_string(sigma_) + ")");
}

}  // namespace hodgejac
