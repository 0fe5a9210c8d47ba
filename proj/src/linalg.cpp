#include "hodgejac/linalg.hpp"

#include <algorithm>
#include <variant>

#include "hodgejac/errors.hpp"

namespace hodgejac {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, const Field& field) {
    ExactMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, const Field& field) {
    ExactMatrix m(rows.size(), cols, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("ragged rows in ExactMatrix::from_rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows, const Field& field) {
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    ExactMatrix m(rows.size(), cols, field);
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionError("ragged rows in ExactMatrix::from_ints");
        std::size_t j = 0;
        for (long v : r) m(i, j++) = Scalar(v, field);
        ++i;
    }
    return m;
}

Vector ExactMatrix::column(std::size_t j) const {
    Vector out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

ExactMatrix ExactMatrix::scaled(const Scalar& s) const {
    ExactMatrix out = *this;
    for (auto& e : out.entries_) e *= s;
    return out;
}

Vector ExactMatrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) {
        throw DimensionError("matrix with " + std::to_string(cols_) + " columns applied to vector of length " +
                             std::to_string(v.size()));
    }
    Vector out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
        }
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimensionError("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " by " +
                             std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    ExactMatrix out(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

namespace {

struct IntegerArith {
    using Value = mpz_class;

    static bool is_zero(const Value& v) { return sgn(v) == 0; }

    // acc <- (a/g) acc - (b/g) row, which clears column c. Entries of acc
    // before `lo` are zero.
    static void eliminate(std::vector<Value>& acc, std::size_t lo, std::size_t c,
                          const std::vector<std::pair<std::size_t, Value>>& row) {
        const Value& a = row.front().second;
        Value b = acc[c];
        if (a != 1) {
            Value g = gcd(a, b);
            Value scale = a / g;
            b /= g;
            if (scale != 1) {
                for (std::size_t j = lo; j < acc.size(); ++j) {
                    if (j != c && sgn(acc[j]) != 0) acc[j] *= scale;
                }
            }
        }
        acc[c] = 0;
        for (std::size_t t = 1; t < row.size(); ++t) acc[row[t].first] -= b * row[t].second;
    }

    static void normalize(std::vector<std::pair<std::size_t, Value>>& row) {
        Value g = 0;
        for (const auto& [j, v] : row) {
            g = gcd(g, v);
            if (g == 1) break;
        }
        if (sgn(row.front().second) < 0) g = -g;
        if (g != 1) {
            for (auto& [j, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
    }

    // Clears denominators of a rational row.
    static std::vector<std::pair<std::size_t, Value>> import(const SparseRow& row) {
        mpz_class lcm_den = 1;
        for (const auto& [j, s] : row) lcm_den = lcm(lcm_den, s.rational().get_den());
        std::vector<std::pair<std::size_t, Value>> out;
        out.reserve(row.size());
        for (const auto& [j, s] : row) {
            const mpq_class& q = s.rational();
            out.emplace_back(j, q.get_num() * (lcm_den / q.get_den()));
        }
        return out;
    }

    static SparseRow export_row(const std::vector<std::pair<std::size_t, Value>>& row, const Field& field) {
        SparseRow out;
        out.reserve(row.size());
        const Value& lead = row.front().second;
        for (const auto& [j, v] : row) out.emplace_back(j, Scalar(mpq_class(v, lead), field));
        return out;
    }
};

struct ModArith {
    using Value = std::uint64_t;
    Field field;
    std::uint64_t p;

    static bool is_zero(Value v) { return v == 0; }

    void eliminate(std::vector<Value>& acc, std::size_t /*lo*/, std::size_t c,
                   const std::vector<std::pair<std::size_t, Value>>& row) const {
        const std::uint64_t b = p - acc[c];
        acc[c] = 0;
        for (std::size_t t = 1; t < row.size(); ++t) {
            Value& x = acc[row[t].first];
            x = (x + b * row[t].second) % p;
        }
    }

    void normalize(std::vector<std::pair<std::size_t, Value>>& row) const {
        const Value lead = row.front().second;
        if (lead == 1) return;
        const Value inv = Scalar(static_cast<long>(lead), field).inverse().residue();
        for (auto& [j, v] : row) v = v * inv % p;
    }

    std::vector<std::pair<std::size_t, Value>> import(const SparseRow& row) const {
        std::vector<std::pair<std::size_t, Value>> out;
        out.reserve(row.size());
        for (const auto& [j, s] : row) out.emplace_back(j, s.residue());
        return out;
    }

    static SparseRow export_row(const std::vector<std::pair<std::size_t, Value>>& row, const Field& field) {
        SparseRow out;
        out.reserve(row.size());
        for (const auto& [j, v] : row) out.emplace_back(j, Scalar(static_cast<long>(v), field));
        return out;
    }
};

template <class Arith>
class EchelonCore {
   public:
    using Value = typename Arith::Value;
    using Entries = std::vector<std::pair<std::size_t, Value>>;

    EchelonCore(std::size_t cols, Arith arith)
        : cols_(cols), arith_(arith), pivot_row_(cols, -1), acc_(cols, Value(0)) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    bool insert(const SparseRow& input) {
        if (rows_.size() == cols_ || input.empty()) return false;
        Entries row = arith_.import(input);
        std::size_t lo = cols_;
        for (const auto& [j, v] : row) {
            if (j >= cols_) throw DimensionError("row entry beyond column count");
            acc_[j] += v;
            lo = std::min(lo, j);
        }
        sweep(acc_, lo, lo, pivot_row_, rows_);
        Entries reduced = gather(acc_, lo);
        if (reduced.empty()) return false;
        arith_.normalize(reduced);
        pivot_row_[reduced.front().first] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(reduced));
        return true;
    }

    std::vector<RowEchelon::Row> reduced_rows(const Field& field) const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });

        // Back substitution, highest pivot first; rows with larger pivots are
        // already fully reduced when they are used.
        std::vector<Entries> reduced(rows_.size());
        std::vector<Value> acc(cols_, Value(0));
        for (std::size_t idx : order) {
            const Entries& row = rows_[idx];
            const std::size_t pivot = row.front().first;
            for (const auto& [j, v] : row) acc[j] = v;
            sweep(acc, pivot, pivot + 1, pivot_row_, reduced);
            Entries out = gather(acc, pivot);
            arith_.normalize(out);
            reduced[idx] = std::move(out);
        }

        std::vector<RowEchelon::Row> result;
        result.reserve(rows_.size());
        for (std::size_t i = order.size(); i-- > 0;) {
            const Entries& row = reduced[order[i]];
            result.push_back({row.front().first, Arith::export_row(row, field)});
        }
        return result;
    }

   private:
    // Clears every pivot column >= from; acc is zero before lo.
    void sweep(std::vector<Value>& acc, std::size_t lo, std::size_t from, const std::vector<long>& pivot_row,
               const std::vector<Entries>& table) const {
        for (std::size_t c = from; c < cols_; ++c) {
            if (Arith::is_zero(acc[c])) continue;
            const long r = pivot_row[c];
            if (r < 0) continue;
            arith_.eliminate(acc, lo, c, table[static_cast<std::size_t>(r)]);
        }
    }

    // Collects and clears the nonzero entries of acc from column lo on.
    Entries gather(std::vector<Value>& acc, std::size_t lo) const {
        Entries out;
        for (std::size_t c = lo; c < cols_; ++c) {
            if (Arith::is_zero(acc[c])) continue;
            out.emplace_back(c, std::move(acc[c]));
            acc[c] = Value(0);
        }
        return out;
    }

    std::size_t cols_;
    Arith arith_;
    std::vector<long> pivot_row_;
    std::vector<Entries> rows_;
    std::vector<Value> acc_;
};

}  // namespace

struct RowEchelon::Impl {
    Field field;
    std::variant<EchelonCore<IntegerArith>, EchelonCore<ModArith>> core;

    Impl(std::size_t cols, const Field& f)
        : field(f),
          core(f.is_rational() ? decltype(core)(EchelonCore<IntegerArith>(cols, IntegerArith{}))
                               : decltype(core)(EchelonCore<ModArith>(cols, ModArith{f, f.modulus()}))) {}
};

RowEchelon::RowEchelon(std::size_t cols, const Field& field) : impl_(std::make_unique<Impl>(cols, field)) {}
RowEchelon::~RowEchelon() = default;
RowEchelon::RowEchelon(RowEchelon&&) noexcept = default;
RowEchelon& RowEchelon::operator=(RowEchelon&&) noexcept = default;

bool RowEchelon::insert(std::span<const Scalar> dense_row) {
    if (dense_row.size() != cols()) {
        throw DimensionError("row of length " + std::to_string(dense_row.size()) + " inserted into echelon with " +
                             std::to_string(cols()) + " columns");
    }
    SparseRow sparse;
    for (std::size_t j = 0; j < dense_row.size(); ++j) {
        if (!dense_row[j].is_zero()) sparse.emplace_back(j, dense_row[j]);
    }
    return insert(sparse);
}

bool RowEchelon::insert(const SparseRow& row) {
    for (const auto& [j, s] : row) {
        if (!(s.field() == impl_->field)) throw std::invalid_argument("row over a different field");
    }
    return std::visit([&](auto& core) { return core.insert(row); }, impl_->core);
}

std::size_t RowEchelon::rank() const {
    return std::visit([](const auto& core) { return core.rank(); }, impl_->core);
}

std::size_t RowEchelon::cols() const {
    return std::visit([](const auto& core) { return core.cols(); }, impl_->core);
}

std::vector<RowEchelon::Row> RowEchelon::reduced_rows() const {
    return std::visit([&](const auto& core) { return core.reduced_rows(impl_->field); }, impl_->core);
}

ReducedForm row_reduce(const ExactMatrix& m) {
    RowEchelon echelon(m.cols(), m.field());
    for (std::size_t i = 0; i < m.rows() && !echelon.full(); ++i) echelon.insert(m.row(i));
    ReducedForm out;
    out.rref = ExactMatrix(m.rows(), m.cols(), m.field());
    const auto rows = echelon.reduced_rows();
    out.rank = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.pivots.push_back(rows[i].pivot);
        for (const auto& [j, s] : rows[i].entries) out.rref(i, j) = s;
    }
    return out;
}

std::size_t rank(const ExactMatrix& m) {
    RowEchelon echelon(m.cols(), m.field());
    for (std::size_t i = 0; i < m.rows() && !echelon.full(); ++i) echelon.insert(m.row(i));
    return echelon.rank();
}

std::optional<Vector> membership(std::span<const Scalar> v, const ExactMatrix& m) {
    if (v.size() != m.cols()) {
        throw DimensionError("membership: vector of length " + std::to_string(v.size()) + " against " +
                             std::to_string(m.cols()) + " columns");
    }
    // Solve m^T c = v via the reduced augmented system [m^T | v].
    const std::size_t unknowns = m.rows();
    ExactMatrix augmented(m.cols(), unknowns + 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) augmented(j, i) = m(i, j);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) augmented(j, unknowns) = v[j];
    const ReducedForm reduced = row_reduce(augmented);

    Vector coeffs(unknowns, Scalar::zero(m.field()));
    for (std::size_t r = 0; r < reduced.rank; ++r) {
        const std::size_t pivot = reduced.pivots[r];
        if (pivot == unknowns) return std::nullopt;
        coeffs[pivot] = reduced.rref(r, unknowns);
    }
    return coeffs;
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
    const ReducedForm reduced = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : reduced.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector x(m.cols(), Scalar::zero(m.field()));
        x[free] = Scalar::one(m.field());
        for (std::size_t r = 0; r < reduced.rank; ++r) x[reduced.pivots[r]] = -reduced.rref(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace hodgejac
