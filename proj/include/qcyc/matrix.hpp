#ifndef QCYC_MATRIX_HPP
#define QCYC_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcyc/base_field.hpp"

namespace qcyc {

using FieldPtr = std::shared_ptr<const BaseField>;

/// Dense immutable matrix over GF(q), row-major. A matrix may have zero rows (the empty
/// spanning set) but always has at least one column.
class GFqMatrix {
   public:
    /// Zero matrix.
    GFqMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
    GFqMatrix(FieldPtr field, std::size_t rows, std::size_t cols, ScalarVec entries);

    static GFqMatrix identity(FieldPtr field, std::size_t n);
    /// Every row must have length `cols`.
    static GFqMatrix from_rows(FieldPtr field, const std::vector<ScalarVec>& rows, std::size_t cols);
    /// n x n matrix with entry (i, j) = v[(i - j) mod n]; row 0 reads v_0, v_{n-1}, ..., v_1.
    static GFqMatrix circulant(FieldPtr field, std::span<const Scalar> first_column);

    const BaseField& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
    std::span<const Scalar> row(std::size_t i) const {
        return std::span<const Scalar>(entries_).subspan(i * cols_, cols_);
    }
    std::vector<ScalarVec> row_vectors() const;
    const ScalarVec& entries() const noexcept { return entries_; }

    GFqMatrix transpose() const;

    friend bool operator==(const GFqMatrix& a, const GFqMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.field_ == *b.field_ && a.entries_ == b.entries_;
    }

   private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    ScalarVec entries_;
};

struct EchelonForm {
    GFqMatrix reduced;                // same shape as the input
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination; the pivot for each column is the
/// first remaining row with a nonzero entry there.
EchelonForm rref(const GFqMatrix& m);
std::size_t rank(const GFqMatrix& m);
/// Nonzero rows of the reduced echelon form (rank x cols).
GFqMatrix row_basis(const GFqMatrix& m);
/// Basis of {v : m v = 0}: one vector per free column f with v_f = 1, read off the echelon
/// form, ordered by f.
std::vector<ScalarVec> nullspace(const GFqMatrix& m);
/// Throws std::invalid_argument when column counts differ.
bool row_space_equal(const GFqMatrix& a, const GFqMatrix& b);
ScalarVec mat_vec(const GFqMatrix& m, std::span<const Scalar> v);
GFqMatrix multiply(const GFqMatrix& a, const GFqMatrix& b);
/// Throws std::domain_error for singular or non-square input.
GFqMatrix inverse(const GFqMatrix& m);

/// q^k, or 0 when it overflows 64 bits.
std::uint64_t span_size(const BaseField& f, std::size_t k) noexcept;

/// Calls `visit` once per vector of the row space of m, starting with 0. Consecutive vectors
/// differ by one GF(p)-multiple of a basis row, so each step costs O(cols). Throws
/// CapExceeded when q^rank > cap.
void for_each_in_row_space(const GFqMatrix& m, std::uint64_t cap,
                           const std::function<void(std::span<const Scalar>)>& visit);
/// The row space as a sorted list of vectors.
std::vector<ScalarVec> enumerate_row_space(const GFqMatrix& m, std::uint64_t cap);

/// Line-oriented export:
///
///   gfq-matrix
///   p: 2
///   m: 1
///   base_poly: 0,1
///   level: q
///   rows: 2
///   cols: 3
///   row: 1,1,0
///   row: 0,1,1
std::string export_matrix(const GFqMatrix& m);
/// Inverse of export_matrix. Throws ParseError (with a line number) on malformed input and
/// std::invalid_argument when `expected` is given and the file's field differs from it.
GFqMatrix import_matrix(std::string_view text, const FieldPtr& expected = nullptr);

}  // namespace qcyc

#endif  // QCYC_MATRIX_HPP
