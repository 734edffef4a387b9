#include "derivspace/derivatives.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "derivspace/error.hpp"

namespace derivspace {

namespace {

void require_length(const HomPoly& f, const MultiIndex& index)
{
    if (index.vars() != f.vars()) {
        throw DomainError(ErrorKind::LengthMismatch,
                          "multi-index " + index.to_string() + " for polynomial in " +
                              std::to_string(f.vars() + 1) + " variables");
    }
}

void require_order(int d, int k)
{
    if (k < 0 || k > d) {
        throw DomainError(ErrorKind::OrderOutOfRange,
                          "k=" + std::to_string(k) + " outside [0, " + std::to_string(d) + "]");
    }
}

void check_rank_bound(const HomPoly& f, int k, std::size_t dim)
{
    if (dim > e_dim_bound(f.vars(), f.degree(), k)) {
        throw std::logic_error("dim E_k(f) exceeds min(dim S_{n,k}, dim S_{n,d-k})");
    }
}

} // namespace

HomPoly derivative(const HomPoly& f, const MultiIndex& index)
{
    require_length(f, index);
    const int out_degree = std::max(f.degree() - index.order(), 0);
    HomPoly out(f.vars(), out_degree);
    if (index.order() > f.degree()) return out;
    for (const auto& [exps, c] : f.terms()) {
        if (!geq(exps, index)) continue;
        mpz_class factor = 1;
        for (std::size_t m = 0; m < exps.size(); ++m) {
            for (int t = 0; t < index[m]; ++t) factor *= exps[m] - t;
        }
        out.add_term(exps - index, c * Rational(factor));
    }
    return out;
}

HomPoly apolar_pair(const HomPoly& dual, const HomPoly& f)
{
    if (dual.vars() != f.vars()) {
        throw DomainError(ErrorKind::LengthMismatch,
                          "dual polynomial in " + std::to_string(dual.vars() + 1) +
                              " variables paired with polynomial in " +
                              std::to_string(f.vars() + 1));
    }
    HomPoly out(f.vars(), std::max(f.degree() - dual.degree(), 0));
    if (dual.degree() > f.degree()) return out;
    for (const auto& [index, c] : dual.terms()) out = add_scaled(out, c, derivative(f, index));
    return out;
}

Catalecticant catalecticant(const HomPoly& f, int k)
{
    require_order(f.degree(), k);
    const int n = f.vars();
    const auto row_index = enumerate(n, k);
    Catalecticant cat{n, f.degree(), k, ExactMatrix(row_index.size(), graded_dim(n, f.degree() - k))};

    const auto rows = static_cast<std::ptrdiff_t>(row_index.size());
#pragma omp parallel for schedule(dynamic) if (rows > 8)
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
        const HomPoly partial_r = derivative(f, row_index[static_cast<std::size_t>(r)]);
        for (const auto& [exps, c] : partial_r.terms()) {
            cat.matrix(static_cast<std::size_t>(r), rank_in_degree(exps)) = c;
        }
    }
    return cat;
}

Subspace e_space(const HomPoly& f, int k)
{
    if (k < 0) throw DomainError(ErrorKind::OrderOutOfRange, "k=" + std::to_string(k));
    if (k > f.degree()) return Subspace(f.vars(), f.degree() - k);
    Subspace space = row_space(catalecticant(f, k).matrix, f.vars(), f.degree() - k);
    check_rank_bound(f, k, space.dim());
    return space;
}

std::size_t e_dim(const HomPoly& f, int k)
{
    if (k < 0) throw DomainError(ErrorKind::OrderOutOfRange, "k=" + std::to_string(k));
    if (k > f.degree()) return 0;
    const std::size_t dim = rank(catalecticant(f, k).matrix);
    check_rank_bound(f, k, dim);
    return dim;
}

std::size_t e_dim_bound(int n, int d, int k)
{
    if (k < 0 || k > d) return 0;
    return std::min(graded_dim(n, k), graded_dim(n, d - k));
}

} // namespace derivspace
