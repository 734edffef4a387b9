#include "derivspace/exactla.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "derivspace/error.hpp"
#include "derivspace/multiindex.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace derivspace {

namespace {

// Below this many entries the fork/join overhead dominates.
constexpr std::size_t kParallelEntries = 2048;

std::string shape(std::size_t r, std::size_t c)
{
    return std::to_string(r) + "x" + std::to_string(c);
}

} // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols)
{
    ExactMatrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Rational> ExactMatrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void ExactMatrix::append_row(const std::vector<Rational>& row)
{
    if (row.size() != cols_) {
        throw DomainError(ErrorKind::DimensionMismatch,
                          "row of length " + std::to_string(row.size()) + " appended to " +
                              shape(rows_, cols_) + " matrix");
    }
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

bool ExactMatrix::row_is_zero(std::size_t r) const
{
    for (std::size_t c = 0; c < cols_; ++c) {
        if ((*this)(r, c) != 0) return false;
    }
    return true;
}

ExactMatrix ExactMatrix::transpose() const
{
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

void ExactMatrix::truncate_rows(std::size_t count)
{
    if (count >= rows_) return;
    rows_ = count;
    data_.resize(rows_ * cols_);
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw DomainError(ErrorKind::DimensionMismatch,
                          shape(a.rows(), a.cols()) + " times " + shape(b.rows(), b.cols()));
    }
    ExactMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

RrefResult rref(const ExactMatrix& m)
{
    RrefResult res{m, 0, {}};
    ExactMatrix& a = res.matrix;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const bool parallel = rows * cols >= kParallelEntries;

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        a.swap_rows(sel, pivot_row);

        const Rational inv = 1 / a(pivot_row, col);
        for (std::size_t c = col; c < cols; ++c) a(pivot_row, c) *= inv;

        // Each thread owns whole rows; the pivot row is read-only here.
        const auto n_rows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (parallel)
        for (std::ptrdiff_t r = 0; r < n_rows; ++r) {
            const auto ur = static_cast<std::size_t>(r);
            if (ur == pivot_row || a(ur, col) == 0) continue;
            const Rational factor = a(ur, col);
            for (std::size_t c = col; c < cols; ++c) {
                if (a(pivot_row, c) != 0) a(ur, c) -= factor * a(pivot_row, c);
            }
        }
        res.pivots.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

ExactMatrix nullspace(const ExactMatrix& m)
{
    const RrefResult red = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;

    ExactMatrix basis(0, cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.matrix(i, free);
        basis.append_row(v);
    }
    ExactMatrix out = rref(basis).matrix;

#ifdef DERIVSPACE_CHECKED
    // rank-nullity and M v = 0 for every basis vector
    if (red.rank + out.rows() != cols) throw std::logic_error("rank-nullity violated");
    if (m.rows() > 0 && out.rows() > 0) {
        const ExactMatrix product = m * out.transpose();
        for (std::size_t r = 0; r < product.rows(); ++r) {
            if (!product.row_is_zero(r)) throw std::logic_error("nullspace vector not annihilated");
        }
    }
#endif
    return out;
}

Subspace::Subspace(int n, int e) : n_(n), e_(e), ambient_(graded_dim(n, e)), basis_(0, ambient_) {}

Subspace::Subspace(int n, int e, ExactMatrix basis)
    : n_(n), e_(e), ambient_(graded_dim(n, e)), basis_(std::move(basis))
{
    if (basis_.cols() != ambient_) {
        throw DomainError(ErrorKind::DimensionMismatch,
                          "basis has " + std::to_string(basis_.cols()) + " columns, S_{" +
                              std::to_string(n) + "," + std::to_string(e) + "} has dimension " +
                              std::to_string(ambient_));
    }
    RrefResult red = rref(basis_);
    if (red.rank != basis_.rows() || !(red.matrix == basis_)) {
        throw DomainError(ErrorKind::DimensionMismatch, "basis is not a canonical RREF basis");
    }
    pivots_ = std::move(red.pivots);
}

ExactMatrix Subspace::annihilator() const
{
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    ExactMatrix out(0, ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rational> phi(ambient_);
        phi[j] = 1;
        for (std::size_t r = 0; r < pivots_.size(); ++r) phi[pivots_[r]] = -basis_(r, j);
        out.append_row(phi);
    }
    return out;
}

Subspace row_space(const ExactMatrix& m, int n, int e)
{
    const std::size_t ambient = graded_dim(n, e);
    if (m.cols() != ambient) {
        throw DomainError(ErrorKind::DimensionMismatch,
                          "matrix has " + std::to_string(m.cols()) + " columns, expected " +
                              std::to_string(ambient));
    }
    RrefResult red = rref(m);
    red.matrix.truncate_rows(red.rank);
    return Subspace(n, e, std::move(red.matrix));
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b)
{
    if (a.vars() != b.vars() || a.degree() != b.degree()) {
        throw DomainError(ErrorKind::AmbientMismatch,
                          "S_{" + std::to_string(a.vars()) + "," + std::to_string(a.degree()) +
                              "} vs S_{" + std::to_string(b.vars()) + "," +
                              std::to_string(b.degree()) + "}");
    }
}

} // namespace

bool subspace_equal(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b);
    return a.basis() == b.basis();
}

bool subspace_contains(const Subspace& a, const std::vector<Rational>& v)
{
    if (v.size() != a.ambient_dim()) {
        throw DomainError(ErrorKind::AmbientMismatch,
                          "vector of length " + std::to_string(v.size()) + " tested against S_{" +
                              std::to_string(a.vars()) + "," + std::to_string(a.degree()) + "}");
    }
    ExactMatrix m = a.basis();
    m.append_row(v);
    return rank(m) == a.dim();
}

bool subspace_included(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b);
    ExactMatrix m = b.basis();
    for (std::size_t r = 0; r < a.dim(); ++r) m.append_row(a.basis().row(r));
    return rank(m) == b.dim();
}

} // namespace derivspace
