#include "derivspace/reconstruct.hpp"

#include <stdexcept>
#include <string>

#include "derivspace/error.hpp"

namespace derivspace {

namespace {

Verdict verdict_for(std::size_t dim)
{
    if (dim == 0) return Verdict::Empty;
    return dim == 1 ? Verdict::Unique : Verdict::Ambiguous;
}

ReconstructionResult result_from_rows(int n, int d, int k, const ExactMatrix& rows)
{
    ReconstructionResult res{n, d, k, rows.rows(), {}, verdict_for(rows.rows())};
    res.basis.reserve(rows.rows());
    for (std::size_t r = 0; r < rows.rows(); ++r) res.basis.push_back(from_coeff_vector(n, d, rows.row(r)));
    return res;
}

// prod_m j_m! / (j_m - i_m)!, the coefficient of x^{J-I} in D_I x^J.
mpz_class falling(const MultiIndex& exps, const MultiIndex& index)
{
    mpz_class factor = 1;
    for (std::size_t m = 0; m < exps.size(); ++m) {
        for (int t = 0; t < index[m]; ++t) factor *= exps[m] - t;
    }
    return factor;
}

void require_same_ring(const HomPoly& f, const HomPoly& g)
{
    if (f.vars() != g.vars()) {
        throw DomainError(ErrorKind::VariableMismatch,
                          "n=" + std::to_string(f.vars()) + " vs n=" + std::to_string(g.vars()));
    }
    if (f.degree() != g.degree()) {
        throw DomainError(ErrorKind::DegreeMismatch,
                          "d=" + std::to_string(f.degree()) + " vs d=" + std::to_string(g.degree()));
    }
}

} // namespace

std::string_view verdict_name(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Unique: return "UNIQUE";
    case Verdict::Ambiguous: return "AMBIGUOUS";
    case Verdict::Empty: return "EMPTY";
    }
    return "EMPTY";
}

ReconstructionResult solve_from_span(const Subspace& span, int n, int d, int k)
{
    if (k < 0 || k > d) {
        throw DomainError(ErrorKind::OrderOutOfRange,
                          "k=" + std::to_string(k) + " outside [0, " + std::to_string(d) + "]");
    }
    if (span.vars() != n || span.degree() != d - k) {
        throw DomainError(ErrorKind::AmbientMismatch,
                          "span lives in S_{" + std::to_string(span.vars()) + "," +
                              std::to_string(span.degree()) + "}, expected S_{" + std::to_string(n) +
                              "," + std::to_string(d - k) + "}");
    }
    if (k == 0) return result_from_rows(n, d, k, span.basis());
    if (span.dim() == span.ambient_dim()) {
        return result_from_rows(n, d, k, ExactMatrix::identity(graded_dim(n, d)));
    }

    const ExactMatrix phi = span.annihilator();
    const auto unknowns = enumerate(n, d);
    const auto orders = enumerate(n, k);
    const std::size_t block = phi.rows();
    ExactMatrix constraints(orders.size() * block, unknowns.size());

    // Row (I, phi) of the system: phi applied to D_I g, as a linear form in
    // the coefficients of g. Blocks for different I are independent.
    const auto n_orders = static_cast<std::ptrdiff_t>(orders.size());
#pragma omp parallel for schedule(dynamic) if (n_orders > 4)
    for (std::ptrdiff_t i = 0; i < n_orders; ++i) {
        const MultiIndex& index = orders[static_cast<std::size_t>(i)];
        for (std::size_t col = 0; col < unknowns.size(); ++col) {
            const MultiIndex& exps = unknowns[col];
            if (!geq(exps, index)) continue;
            const std::size_t target = rank_in_degree(exps - index);
            const Rational scale(falling(exps, index));
            for (std::size_t b = 0; b < block; ++b) {
                const Rational& w = phi(b, target);
                if (w != 0) constraints(static_cast<std::size_t>(i) * block + b, col) = w * scale;
            }
        }
    }
    return result_from_rows(n, d, k, nullspace(constraints));
}

RelationMatrix::RelationMatrix(int n, int k)
    : n_(n), k_(k), index_(enumerate(n, k)), a_(index_.size(), index_.size())
{
}

RelationMatrix::RelationMatrix(int n, int k, ExactMatrix coefficients)
    : n_(n), k_(k), index_(enumerate(n, k)), a_(std::move(coefficients))
{
    if (a_.rows() != index_.size() || a_.cols() != index_.size()) {
        throw DomainError(ErrorKind::DimensionMismatch, "relation matrix must be square over order-" +
                                                            std::to_string(k) + " indices");
    }
}

Rational RelationMatrix::at(const MultiIndex& row, const MultiIndex& col) const
{
    if (row.vars() != n_ || col.vars() != n_ || row.order() != k_ || col.order() != k_) return 0;
    return a_(rank_in_degree(row), rank_in_degree(col));
}

void RelationMatrix::set(const MultiIndex& row, const MultiIndex& col, const Rational& value)
{
    if (row.vars() != n_ || col.vars() != n_ || row.order() != k_ || col.order() != k_) {
        throw DomainError(ErrorKind::OrderOutOfRange, "relation index outside order-" +
                                                          std::to_string(k_) + " indices");
    }
    a_(rank_in_degree(row), rank_in_degree(col)) = value;
}

RelationMatrix RelationMatrix::scalar(int n, int k, const Rational& c)
{
    RelationMatrix a(n, k);
    for (std::size_t i = 0; i < a.index_.size(); ++i) a.a_(i, i) = c;
    return a;
}

RelationMatrix extract_relations(const HomPoly& f, const HomPoly& g, int k)
{
    require_same_ring(f, g);
    const ExactMatrix cf = catalecticant(f, k).matrix;
    const ExactMatrix cg = catalecticant(g, k).matrix;
    const std::size_t m = cf.rows();
    const std::size_t cols = cf.cols();

    // Solve cf^T a_I^T = (D_I g)^T for all I at once: reduce [cf^T | cg^T].
    ExactMatrix aug(cols, 2 * m);
    for (std::size_t r = 0; r < cols; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            aug(r, c) = cf(c, r);
            aug(r, m + c) = cg(c, r);
        }
    }
    const RrefResult red = rref(aug);
    std::size_t left_rank = 0;
    while (left_rank < red.pivots.size() && red.pivots[left_rank] < m) ++left_rank;
    if (left_rank < m) {
        throw DomainError(ErrorKind::DegenerateBasis,
                          "order-" + std::to_string(k) + " partials of f span only " +
                              std::to_string(left_rank) + " of " + std::to_string(m) + " dimensions");
    }
    if (red.rank > m) {
        throw DomainError(ErrorKind::NotContained,
                          "some order-" + std::to_string(k) + " partial of g lies outside E_k(f)");
    }
    ExactMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) a(i, j) = red.matrix(j, m + i);
    }
    return RelationMatrix(f.vars(), k, std::move(a));
}

SymmetryReport check_symmetry(const RelationMatrix& a)
{
    SymmetryReport report;
    const int n = a.vars();
    const auto& idx = a.indices();
    for (int p = 0; p <= n; ++p) {
        const MultiIndex ep = MultiIndex::unit(n, p);
        for (int q = 0; q <= n; ++q) {
            const MultiIndex eq = MultiIndex::unit(n, q);
            for (const auto& row : idx) {
                if (!geq(row, ep)) continue;
                const MultiIndex shifted_row = row - ep + eq;
                for (const auto& col : idx) {
                    const MultiIndex lifted = col + eq;
                    const Rational rhs = geq(lifted, ep) ? a.at(shifted_row, lifted - ep) : Rational(0);
                    if (a.at(row, col) != rhs) {
                        report.ok = false;
                        report.violations.push_back({row, col, p, q});
                    }
                }
            }
        }
    }
    return report;
}

std::map<MultiIndex, HomPoly> descend(const HomPoly& f, const RelationMatrix& a, int k)
{
    if (k < 1) throw DomainError(ErrorKind::OrderOutOfRange, "descent needs k >= 1");
    if (a.order() != k || a.vars() != f.vars()) {
        throw DomainError(ErrorKind::DimensionMismatch, "relation matrix does not match (f, k)");
    }
    const SymmetryReport sym = check_symmetry(a);
    if (!sym.ok) {
        throw DomainError(ErrorKind::SymmetryViolated,
                          std::to_string(sym.violations.size()) + " symmetry violations");
    }
    const int n = f.vars();
    const auto lower = enumerate(n, k - 1);
    const MultiIndex e0 = MultiIndex::unit(n, 0);

    std::map<MultiIndex, HomPoly> out;
    for (const auto& outer : lower) {
        HomPoly acc(n, std::max(f.degree() - k + 1, 0));
        for (const auto& inner : lower) {
            const Rational coeff = a.at(outer + e0, inner + e0);
            for (int p = 1; p <= n; ++p) {
                const MultiIndex ep = MultiIndex::unit(n, p);
                if (a.at(outer + ep, inner + ep) != coeff) {
                    throw std::logic_error("slot-dependent relation coefficient after symmetry check");
                }
            }
            if (coeff != 0) acc = add_scaled(acc, coeff, derivative(f, inner));
        }
        out.emplace(outer, std::move(acc));
    }
    return out;
}

TheoremReport verify_theorem(const HomPoly& f, int k)
{
    const int n = f.vars();
    const int d = f.degree();
    TheoremReport rep;
    rep.n = n;
    rep.d = d;
    rep.k = k;
    rep.within_bound = k >= 1 && 2 * k + 2 <= d;

    for (int r = 0; r <= k + 1; ++r) {
        const std::size_t dim = e_dim(f, r);
        rep.chain_dims.push_back(dim);
        rep.chain_full.push_back(dim == graded_dim(n, r));
    }
    rep.hypothesis = rep.chain_full.back();
    for (std::size_t r = 1; r < rep.chain_full.size(); ++r) {
        if (rep.chain_full[r] && !rep.chain_full[r - 1]) rep.chain_ok = false;
    }

    rep.result = solve_from_span(e_space(f, k), n, d, k);
    if (rep.result.verdict == Verdict::Unique) rep.witness = proportionality(rep.result.basis.front(), f);
    rep.contradiction = rep.hypothesis && !rep.witness;
    return rep;
}

} // namespace derivspace
