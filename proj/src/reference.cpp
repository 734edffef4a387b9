#include "derivspace/reference.hpp"

#include <string>

#include "derivspace/error.hpp"

namespace derivspace::reference {

RrefResult rref(const ExactMatrix& m)
{
    RrefResult res{m, 0, {}};
    ExactMatrix& a = res.matrix;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        a.swap_rows(sel, pivot_row);
        const Rational inv = 1 / a(pivot_row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a(r, col) == 0) continue;
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(pivot_row, c);
        }
        res.pivots.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

Catalecticant catalecticant(const HomPoly& f, int k)
{
    if (k < 0 || k > f.degree()) {
        throw DomainError(ErrorKind::OrderOutOfRange, "k=" + std::to_string(k));
    }
    const int n = f.vars();
    Catalecticant cat{n, f.degree(), k, ExactMatrix(0, graded_dim(n, f.degree() - k))};
    for (const auto& index : enumerate(n, k)) cat.matrix.append_row(coeff_vector(derivative(f, index)));
    return cat;
}

} // namespace derivspace::reference
