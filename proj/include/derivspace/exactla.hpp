#ifndef DERIVSPACE_EXACTLA_HPP
#define DERIVSPACE_EXACTLA_HPP

#include <cstddef>
#include <vector>

#include "derivspace/rational.hpp"

namespace derivspace {

/// Dense row-major matrix of rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    /// Throws DimensionMismatch on ragged input.
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    void append_row(const std::vector<Rational>& row);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t r) const;

    ExactMatrix transpose() const;
    /// Keeps the first `count` rows.
    void truncate_rows(std::size_t count);

    bool operator==(const ExactMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

struct RrefResult {
    ExactMatrix matrix;
    std::size_t rank = 0;
    /// Column of the leading 1 of each nonzero row, increasing.
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan reduction to reduced row echelon form. The pivot for each
/// column is the first row at or below the current pivot row with a nonzero
/// entry in that column; the result is therefore a deterministic function of
/// the input. Row elimination runs in parallel when OpenMP is enabled; see
/// reference::rref for the serial kernel it is checked against.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// RREF basis of {v : m v = 0}; one row per basis vector, cols() == m.cols().
ExactMatrix nullspace(const ExactMatrix& m);

/// Subspace of the graded piece S_{n,e}, represented by its canonical RREF
/// basis in enumerate(n, e) coordinates. Two subspaces are equal exactly
/// when their bases are identical.
class Subspace {
public:
    /// Zero subspace of S_{n,e}.
    Subspace(int n, int e);
    /// Throws DimensionMismatch if `basis` is not in canonical form.
    Subspace(int n, int e, ExactMatrix basis);

    int vars() const noexcept { return n_; }
    int degree() const noexcept { return e_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    const ExactMatrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Linear functionals vanishing exactly on this subspace: one row per
    /// non-pivot coordinate j, encoding w_j - sum_r basis(r, j) * w_{pivot(r)}.
    ExactMatrix annihilator() const;

    bool operator==(const Subspace& other) const = default;

private:
    int n_;
    int e_;
    std::size_t ambient_;
    ExactMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical span of the rows of m inside S_{n,e}. Throws DimensionMismatch.
Subspace row_space(const ExactMatrix& m, int n, int e);

/// Throws AmbientMismatch when the ambient pieces differ.
bool subspace_equal(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const std::vector<Rational>& v);
/// a is contained in b.
bool subspace_included(const Subspace& a, const Subspace& b);

} // namespace derivspace

#endif // DERIVSPACE_EXACTLA_HPP
