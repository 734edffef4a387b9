#ifndef DERIVSPACE_DERIVATIVES_HPP
#define DERIVSPACE_DERIVATIVES_HPP

#include "derivspace/exactla.hpp"
#include "derivspace/multiindex.hpp"
#include "derivspace/polyring.hpp"

namespace derivspace {

/// D_I f. Coefficients use falling factorials, i.e. the un-normalized
/// F(d/dx) convention: D_I x^J = prod_m j_m!/(j_m - i_m)! x^{J-I} when J >= I.
/// Returns the zero polynomial of degree max(d - |I|, 0) when |I| > d.
HomPoly derivative(const HomPoly& f, const MultiIndex& index);

/// <P, f> = P(d/dx_0, ..., d/dx_n) f = sum_I P_I D_I f.
HomPoly apolar_pair(const HomPoly& dual, const HomPoly& f);

/// Matrix of Q -> <Q, f> from degree-k dual polynomials to S_{n,d-k}.
/// Row I (in enumerate(n, k) order) is coeff_vector(D_I f); columns follow
/// enumerate(n, d - k).
struct Catalecticant {
    int n = 0;
    int d = 0;
    int k = 0;
    ExactMatrix matrix;
};

/// Rows are assembled in parallel. Throws OrderOutOfRange unless 0 <= k <= d.
Catalecticant catalecticant(const HomPoly& f, int k);

/// E_k(f), the span of all order-k partials, as a subspace of S_{n,d-k}.
/// For k > d this is the zero space. Throws OrderOutOfRange for k < 0.
Subspace e_space(const HomPoly& f, int k);

/// dim E_k(f).
std::size_t e_dim(const HomPoly& f, int k);

/// min(dim S_{n,k}, dim S_{n,d-k}), the largest possible dim E_k(f).
std::size_t e_dim_bound(int n, int d, int k);

} // namespace derivspace

#endif // DERIVSPACE_DERIVATIVES_HPP
