#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hodgejac/field.hpp"

namespace hodgejac {

using Vector = std::vector<Scalar>;
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

// Dense row-major matrix over an exact field.
class ExactMatrix {
   public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, const Field& field);

    static ExactMatrix identity(std::size_t n, const Field& field);
    static ExactMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols, const Field& field);
    // Integer literal entries, mostly for tests and examples.
    static ExactMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows, const Field& field);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Field& field() const noexcept { return field_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    std::span<const Scalar> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    Vector column(std::size_t j) const;

    ExactMatrix transpose() const;
    bool is_zero() const;
    ExactMatrix scaled(const Scalar& s) const;
    // Matrix-vector product; throws DimensionError on length mismatch.
    Vector apply(std::span<const Scalar> v) const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_;
    std::vector<Scalar> entries_;
};

struct ReducedForm {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing
    ExactMatrix rref;                 // same shape as the input; zero rows last
};

// Incremental Gauss-Jordan elimination with sparse row storage.
//
// Rows are streamed in through insert(); each is reduced against the pivot
// rows seen so far, sweeping columns left to right, and kept if a nonzero
// remainder survives. Over Q the work is done on primitive integer rows
// (fraction-free: r <- (a/g) r - (b/g) p, then divide by the content), and the
// rational normalization happens only in reduced_rows(). Over F_p rows are
// kept monic.
class RowEchelon {
   public:
    struct Row {
        std::size_t pivot;
        SparseRow entries;  // includes the leading 1 at pivot
    };

    RowEchelon(std::size_t cols, const Field& field);
    ~RowEchelon();
    RowEchelon(RowEchelon&&) noexcept;
    RowEchelon& operator=(RowEchelon&&) noexcept;

    // Returns true when the row raised the rank.
    bool insert(std::span<const Scalar> dense_row);
    bool insert(const SparseRow& row);

    std::size_t rank() const;
    std::size_t cols() const;
    bool full() const { return rank() == cols(); }

    // The reduced row-echelon basis, sorted by pivot column.
    std::vector<Row> reduced_rows() const;

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

ReducedForm row_reduce(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

// Coefficients c with sum_i c_i * row_i(m) == v, or nullopt if v is not in
// the row span of m.
std::optional<Vector> membership(std::span<const Scalar> v, const ExactMatrix& m);

// Basis of {x : m x = 0}, one vector per non-pivot column.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

}  // namespace hodgejac
