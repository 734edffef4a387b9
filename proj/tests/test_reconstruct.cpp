#include <doctest.h>

#include <random>

#include "derivspace/error.hpp"
#include "derivspace/genericity.hpp"
#include "derivspace/reconstruct.hpp"
#include "oracles.hpp"

using namespace derivspace;

namespace {

// {g : every D_I g, |I| = k, is orthogonal to the orthogonal complement of
// span(generators)}, built from iterated first partials and plain Gaussian
// elimination.
oracle::Rows brute_force_solutions(const oracle::Rows& generators, int n, int d, int k)
{
    const std::size_t target_dim = graded_dim(n, d - k);
    const oracle::Rows complement = oracle::gauss_nullspace(generators, target_dim);
    const auto unknowns = enumerate(n, d);
    oracle::Rows system;
    for (const auto& index : enumerate(n, k)) {
        for (const auto& w : complement) {
            std::vector<Rational> row;
            for (const auto& mono : unknowns) {
                const auto v = coeff_vector(oracle::iterated_partial(HomPoly::monomial(mono), index));
                Rational dot = 0;
                for (std::size_t i = 0; i < v.size(); ++i) dot += w[i] * v[i];
                row.push_back(dot);
            }
            system.push_back(std::move(row));
        }
    }
    if (system.empty()) {
        oracle::Rows all;
        for (std::size_t i = 0; i < unknowns.size(); ++i) {
            std::vector<Rational> e(unknowns.size());
            e[i] = 1;
            all.push_back(e);
        }
        return all;
    }
    return oracle::gauss_nullspace(system, unknowns.size());
}

oracle::Rows generators_of(const HomPoly& f, int k)
{
    oracle::Rows rows;
    for (const auto& index : enumerate(f.vars(), k)) rows.push_back(coeff_vector(oracle::iterated_partial(f, index)));
    return rows;
}

HomPoly certified_sample(int n, int d, int order, std::uint64_t seed, long bound = 1000)
{
    for (std::uint64_t attempt = 0;; ++attempt) {
        HomPoly f = sample(n, d, bound, substream_seed(seed, 0, attempt));
        if (certify_generic(f, order)) return f;
    }
}

const HomPoly kMixed = parse_poly("x0^4 + x0*x1^3", 1);

} // namespace

TEST_CASE("solve_from_span: k = 0 returns the line")
{
    const HomPoly f = parse_poly("2*x0^3 - x0*x1^2 + 7*x1^3", 1);
    const auto r = solve_from_span(e_space(f, 0), 1, 3, 0);
    CHECK(r.verdict == Verdict::Unique);
    REQUIRE(r.basis.size() == 1);
    CHECK(proportionality(r.basis[0], f).has_value());
}

TEST_CASE("solve_from_span: x0^4 + x0*x1^3 from its first partials")
{
    const auto r = solve_from_span(e_space(kMixed, 1), 1, 4, 1);
    CHECK(r.solution_dim == 1);
    CHECK(r.verdict == Verdict::Unique);
    CHECK(proportionality(r.basis[0], kMixed).has_value());

    // 2 derivatives x 2 complement functionals = 4 equations in 5 unknowns;
    // by hand: a = e, b = c = h = 0, i.e. g = a (x0^4 + x0*x1^3)
    const oracle::Rows oracle_basis = brute_force_solutions(generators_of(kMixed, 1), 1, 4, 1);
    REQUIRE(oracle_basis.size() == 1);
    CHECK(oracle_basis[0] == std::vector<Rational>{1, 0, 0, 1, 0});
    CHECK(coeff_vector(r.basis[0]) == oracle_basis[0]);
}

TEST_CASE("solve_from_span: middle order gives the whole space")
{
    const HomPoly f = certified_sample(1, 4, 2, 17);
    REQUIRE(e_space(f, 2).dim() == 3);
    const auto r = solve_from_span(e_space(f, 2), 1, 4, 2);
    CHECK(r.solution_dim == 5);
    CHECK(r.verdict == Verdict::Ambiguous);
    CHECK(brute_force_solutions(generators_of(f, 2), 1, 4, 2).size() == 5);
}

TEST_CASE("solve_from_span: errors and degenerate spans")
{
    CHECK_THROWS_AS(solve_from_span(e_space(kMixed, 1), 1, 4, 2), DomainError);
    CHECK_THROWS_AS(solve_from_span(e_space(kMixed, 1), 1, 4, 5), DomainError);
    CHECK_THROWS_AS(solve_from_span(e_space(kMixed, 1), 2, 4, 1), DomainError);
    const auto empty = solve_from_span(Subspace(1, 3), 1, 4, 1);
    CHECK(empty.verdict == Verdict::Empty);
    CHECK(empty.solution_dim == 0);
}

TEST_CASE("solve_from_span matches the brute-force solver")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 2);
        const int d = 2 + static_cast<int>(rng() % 4);
        const int k = static_cast<int>(rng() % (d + 1));
        HomPoly f(n, d);
        std::uniform_int_distribution<int> dist(-2, 2);
        for (const auto& e : enumerate(n, d)) f.add_term(e, rng() % 3 == 0 ? dist(rng) : 0);
        const auto r = solve_from_span(e_space(f, k), n, d, k);
        oracle::Rows mine;
        for (const auto& h : r.basis) mine.push_back(coeff_vector(h));
        CHECK(mine == brute_force_solutions(generators_of(f, k), n, d, k));
    }
}

TEST_CASE("Fermat quartic is not recovered from first partials")
{
    const HomPoly f = parse_poly("x0^4 + x1^4", 1);
    const TheoremReport t = verify_theorem(f, 1);
    CHECK_FALSE(t.hypothesis);
    CHECK(t.chain_dims == std::vector<std::size_t>{1, 2, 2});
    const std::size_t expected = brute_force_solutions(generators_of(f, 1), 1, 4, 1).size();
    CHECK(expected == 2);
    CHECK(t.result.solution_dim == expected);
    CHECK(t.result.verdict == Verdict::Ambiguous);
    CHECK_FALSE(t.contradiction);
}

TEST_CASE("verify_theorem on x0^4 + x0*x1^3")
{
    const TheoremReport t = verify_theorem(kMixed, 1);
    CHECK(t.within_bound);
    CHECK(t.hypothesis);
    CHECK(t.chain_dims == std::vector<std::size_t>{1, 2, 3});
    CHECK(t.chain_ok);
    CHECK(t.result.verdict == Verdict::Unique);
    REQUIRE(t.witness.has_value());
    CHECK(scaled(*t.witness, kMixed) == t.result.basis[0]);
    CHECK_FALSE(t.contradiction);
}

TEST_CASE("verify_theorem on a pure power")
{
    for (int d = 3; d <= 6; ++d) {
        const HomPoly f = HomPoly::monomial(MultiIndex{d, 0});
        for (int k = 1; k + 1 <= d; ++k) {
            const TheoremReport t = verify_theorem(f, k);
            CHECK_FALSE(t.hypothesis);
            CHECK(t.chain_dims[static_cast<std::size_t>(k + 1)] == 1);
            CHECK(t.result.solution_dim == brute_force_solutions(generators_of(f, k), 1, d, k).size());
        }
    }
}

TEST_CASE("extract_relations")
{
    const HomPoly f = certified_sample(1, 4, 1, 5);
    CHECK(extract_relations(f, f, 1) == RelationMatrix::scalar(1, 1, 1));
    CHECK(extract_relations(f, scaled(3, f), 1) == RelationMatrix::scalar(1, 1, 3));

    const HomPoly f25 = certified_sample(2, 5, 2, 8);
    const RelationMatrix a = extract_relations(f25, scaled(-2, f25), 2);
    CHECK(a == RelationMatrix::scalar(2, 2, -2));
    // substitute back: D_I g = sum a(I, I') D_I' f
    for (const auto& i : a.indices()) {
        HomPoly acc(2, 3);
        for (const auto& j : a.indices()) acc = add_scaled(acc, a.at(i, j), derivative(f25, j));
        CHECK(acc == derivative(scaled(-2, f25), i));
    }

    try {
        extract_relations(parse_poly("x0^4 + x1^4", 1), parse_poly("x0^4", 1), 2);
        FAIL("expected DegenerateBasis");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::DegenerateBasis);
    }
    try {
        extract_relations(kMixed, parse_poly("x0^3*x1", 1), 1);
        FAIL("expected NotContained");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::NotContained);
    }
    CHECK_THROWS_AS(extract_relations(kMixed, parse_poly("x0^3", 1), 1), DomainError);
}

TEST_CASE("check_symmetry")
{
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(check_symmetry(RelationMatrix::scalar(n, k, Rational(5, 3))).ok);
            CHECK(check_symmetry(RelationMatrix::scalar(n, k, 0)).ok);
        }
    }
    RelationMatrix a = RelationMatrix::scalar(1, 2, 2);
    a.set(MultiIndex{2, 0}, MultiIndex{0, 2}, 1);
    const SymmetryReport s = check_symmetry(a);
    CHECK_FALSE(s.ok);
    CHECK_FALSE(s.violations.empty());
    CHECK_THROWS_AS(descend(parse_poly("x0^4", 1), a, 2), DomainError);

    RelationMatrix diag = RelationMatrix::scalar(2, 2, 1);
    diag.set(MultiIndex{1, 1, 0}, MultiIndex{1, 1, 0}, 2);
    CHECK_FALSE(check_symmetry(diag).ok);
}

TEST_CASE("descend")
{
    const HomPoly f = certified_sample(1, 6, 3, 41);
    for (int k = 1; k <= 2; ++k) {
        const auto out = descend(f, RelationMatrix::scalar(1, k, 3), k);
        CHECK(out.size() == graded_dim(1, k - 1));
        for (const auto& [index, h] : out) CHECK(h == scaled(3, derivative(f, index)));
    }
    const auto single = descend(f, RelationMatrix::scalar(1, 1, Rational(-1, 2)), 1);
    REQUIRE(single.size() == 1);
    CHECK(single.begin()->second == scaled(Rational(-1, 2), f));

    const HomPoly g = scaled(3, f);
    const auto rel = extract_relations(f, g, 2);
    for (const auto& [index, h] : descend(f, rel, 2)) CHECK(h == derivative(g, index));

    CHECK_THROWS_AS(descend(f, RelationMatrix::scalar(1, 0, 1), 0), DomainError);
}

TEST_CASE("soundness, uniqueness, coherence, monotonicity on samples")
{
    struct Case {
        int n, d;
    };
    for (const auto [n, d] : {Case{1, 4}, Case{1, 5}, Case{1, 6}, Case{2, 4}, Case{2, 5}}) {
        for (std::uint64_t s = 0; s < 4; ++s) {
            const HomPoly f = sample(n, d, 50, substream_seed(1000 + s, n, d));
            bool unique_above = false;
            for (int k = d / 2; k >= 0; --k) {
                const Subspace v = e_space(f, k);
                const auto r = solve_from_span(v, n, d, k);

                // f lies in the solution space
                ExactMatrix sol(0, graded_dim(n, d));
                for (const auto& h : r.basis) sol.append_row(coeff_vector(h));
                CHECK(subspace_contains(row_space(sol, n, d), coeff_vector(f)));
                // every basis element has E_k inside V
                for (const auto& h : r.basis) CHECK(subspace_included(e_space(h, k), v));

                // scaling the generator does not change anything
                const auto r2 = solve_from_span(e_space(scaled(Rational(-9, 4), f), k), n, d, k);
                CHECK(r2.solution_dim == r.solution_dim);

                if (k >= 1 && certify_generic(f, k + 1)) {
                    CHECK(r.verdict == Verdict::Unique);
                    CHECK(proportionality(r.basis[0], f).has_value());
                    // Eq. (2) -> symmetry -> descent for a solution g = c f
                    const HomPoly g = scaled(Rational(7, 3), r.basis[0]);
                    const auto rel = extract_relations(f, g, k);
                    CHECK(check_symmetry(rel).ok);
                    for (const auto& [index, h] : descend(f, rel, k)) CHECK(h == derivative(g, index));
                }
                if (unique_above) CHECK(r.verdict == Verdict::Unique);
                if (r.verdict == Verdict::Unique) unique_above = true;
            }
        }
    }
}
