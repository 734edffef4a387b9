#ifndef DERIVSPACE_POLYRING_HPP
#define DERIVSPACE_POLYRING_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "derivspace/multiindex.hpp"
#include "derivspace/rational.hpp"

namespace derivspace {

/// Homogeneous polynomial in S_{n,d} with rational coefficients.
///
/// Terms are stored sparsely in canonical monomial order; zero coefficients
/// are never stored. The zero polynomial keeps a nominal degree so it can
/// participate in degree-checked arithmetic.
class HomPoly {
public:
    using Terms = std::map<MultiIndex, Rational>;

    HomPoly(int n, int d);
    /// Throws DegreeMismatch/VariableMismatch if a key has the wrong shape.
    HomPoly(int n, int d, Terms terms);

    static HomPoly monomial(const MultiIndex& exps, Rational coeff = 1);

    int vars() const noexcept { return n_; }
    int degree() const noexcept { return d_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Rational coeff(const MultiIndex& exps) const;

    /// Adds c * x^exps in place, dropping the term if it cancels.
    void add_term(const MultiIndex& exps, const Rational& c);

    bool operator==(const HomPoly& other) const;

private:
    int n_;
    int d_;
    Terms terms_;
};

/// Parses the ASCII grammar
///   poly := ['-'] term (('+'|'-') term)*
///   term := [coeff '*'] factor ('*' factor)* | coeff
///   coeff := integer ['/' positive-integer]
///   factor := <var> index ['^' positive-integer]
/// with <var> = `var` ('x' by default). If `degree` is set, a nonzero result
/// must have that degree and a zero result takes it as its nominal degree.
HomPoly parse_poly(std::string_view text, int n, std::optional<int> degree = std::nullopt,
                   char var = 'x');

/// Canonical text form; "0" for the zero polynomial.
std::string print_poly(const HomPoly& f, char var = 'x');

/// f + c*g.
HomPoly add_scaled(const HomPoly& f, const Rational& c, const HomPoly& g);

HomPoly scaled(const Rational& c, const HomPoly& f);

/// First partial derivative with respect to x_var.
HomPoly partial(const HomPoly& h, int var);

/// sum_p x_p * dh/dx_p, which equals deg(h) * h.
HomPoly euler_lhs(const HomPoly& h);

/// Coordinates in the enumerate(n, d) basis.
std::vector<Rational> coeff_vector(const HomPoly& f);

/// Inverse of coeff_vector.
HomPoly from_coeff_vector(int n, int d, const std::vector<Rational>& coeffs);

/// Evaluates f at a rational point of length n+1.
Rational evaluate(const HomPoly& f, const std::vector<Rational>& point);

/// Returns c when f == c * g for a nonzero c, std::nullopt otherwise.
std::optional<Rational> proportionality(const HomPoly& f, const HomPoly& g);

} // namespace derivspace

#endif // DERIVSPACE_POLYRING_HPP
