#include "derivspace/polyring.hpp"

#include <cctype>

#include "derivspace/error.hpp"

namespace derivspace {

namespace {

void check_shape(int n, int d, const MultiIndex& exps)
{
    if (exps.vars() != n) {
        throw DomainError(ErrorKind::VariableMismatch,
                          "monomial " + exps.to_string() + " in ring with n=" + std::to_string(n));
    }
    if (exps.order() != d) {
        throw DomainError(ErrorKind::DegreeMismatch,
                          "monomial " + exps.to_string() + " in degree " + std::to_string(d));
    }
}

class Parser {
public:
    Parser(std::string_view text, int n, char var) : text_(text), n_(n), var_(var) {}

    struct Term {
        Rational coeff;
        std::vector<int> exps;
        int degree = 0;
    };

    std::vector<Term> parse()
    {
        std::vector<Term> terms;
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        terms.push_back(term(negate));
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            terms.push_back(term(c == '-'));
        }
        return terms;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw DomainError(ErrorKind::SyntaxError,
                          what + " at position " + std::to_string(pos_) + " in '" +
                              std::string(text_) + "'");
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    mpz_class integer()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    int small_integer()
    {
        mpz_class z = integer();
        if (!z.fits_sint_p()) fail("integer too large");
        return static_cast<int>(z.get_si());
    }

    void factor(Term& t)
    {
        skip_ws();
        if (peek() != var_) fail(std::string("expected variable '") + var_ + "'");
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
        const std::size_t index_pos = pos_;
        const int index = small_integer();
        if (index > n_) {
            throw DomainError(ErrorKind::WrongVariable,
                              std::string(1, var_) + std::to_string(index) + " at position " +
                                  std::to_string(index_pos) + " exceeds n=" + std::to_string(n_));
        }
        int power = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            power = small_integer();
            if (power < 1) fail("exponent must be positive");
        }
        t.exps[index] += power;
        t.degree += power;
    }

    Term term(bool negate)
    {
        Term t;
        t.coeff = 1;
        t.exps.assign(n_ + 1, 0);
        skip_ws();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = integer();
            mpz_class den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                den = integer();
                if (den == 0) fail("zero denominator");
            }
            t.coeff = Rational(num, den);
            t.coeff.canonicalize();
            skip_ws();
            if (peek() != '*') {
                if (negate) t.coeff = -t.coeff;
                return t;
            }
            ++pos_;
        }
        factor(t);
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            factor(t);
        }
        if (negate) t.coeff = -t.coeff;
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int n_;
    char var_;
};

} // namespace

HomPoly::HomPoly(int n, int d) : n_(n), d_(d) {}

HomPoly::HomPoly(int n, int d, Terms terms) : n_(n), d_(d)
{
    for (auto& [exps, c] : terms) {
        check_shape(n, d, exps);
        if (c != 0) terms_.emplace(exps, std::move(c));
    }
}

HomPoly HomPoly::monomial(const MultiIndex& exps, Rational coeff)
{
    HomPoly p(exps.vars(), exps.order());
    p.add_term(exps, coeff);
    return p;
}

Rational HomPoly::coeff(const MultiIndex& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomPoly::add_term(const MultiIndex& exps, const Rational& c)
{
    check_shape(n_, d_, exps);
    Rational value = c;
    value.canonicalize();
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

bool HomPoly::operator==(const HomPoly& other) const
{
    if (n_ != other.n_) return false;
    if (terms_.empty() && other.terms_.empty()) return true;
    return d_ == other.d_ && terms_ == other.terms_;
}

HomPoly parse_poly(std::string_view text, int n, std::optional<int> degree, char var)
{
    if (n < 0) throw DomainError(ErrorKind::VariableMismatch, "n must be nonnegative");
    auto terms = Parser(text, n, var).parse();

    std::optional<int> seen;
    for (const auto& t : terms) {
        if (t.coeff == 0) continue;
        if (seen && *seen != t.degree) {
            throw DomainError(ErrorKind::NotHomogeneous,
                              "terms of degree " + std::to_string(*seen) + " and " +
                                  std::to_string(t.degree));
        }
        seen = t.degree;
    }
    if (degree && seen && *degree != *seen) {
        throw DomainError(ErrorKind::DegreeMismatch, "expected degree " + std::to_string(*degree) +
                                                         ", got " + std::to_string(*seen));
    }
    HomPoly f(n, seen.value_or(degree.value_or(0)));
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        f.add_term(MultiIndex(std::move(t.exps)), t.coeff);
    }
    return f;
}

std::string print_poly(const HomPoly& f, char var)
{
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exps, c] : f.terms()) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (std::size_t j = 0; j < exps.size(); ++j) {
            if (exps[j] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += var;
            mono += std::to_string(j);
            if (exps[j] > 1) {
                mono += '^';
                mono += std::to_string(exps[j]);
            }
        }
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

HomPoly add_scaled(const HomPoly& f, const Rational& c, const HomPoly& g)
{
    if (f.vars() != g.vars()) {
        throw DomainError(ErrorKind::VariableMismatch, "n=" + std::to_string(f.vars()) + " vs n=" +
                                                           std::to_string(g.vars()));
    }
    if (f.degree() != g.degree() && !f.is_zero() && !g.is_zero()) {
        throw DomainError(ErrorKind::DegreeMismatch, "d=" + std::to_string(f.degree()) + " vs d=" +
                                                         std::to_string(g.degree()));
    }
    if (c == 0 || g.is_zero()) return f;
    HomPoly out = f.is_zero() ? HomPoly(g.vars(), g.degree()) : f;
    for (const auto& [exps, gc] : g.terms()) out.add_term(exps, c * gc);
    return out;
}

HomPoly scaled(const Rational& c, const HomPoly& f)
{
    HomPoly out(f.vars(), f.degree());
    if (c == 0) return out;
    for (const auto& [exps, fc] : f.terms()) out.add_term(exps, c * fc);
    return out;
}

HomPoly partial(const HomPoly& h, int var)
{
    const int n = h.vars();
    HomPoly out(n, h.degree() > 0 ? h.degree() - 1 : 0);
    if (h.degree() == 0) return out;
    for (const auto& [exps, c] : h.terms()) {
        if (exps[var] == 0) continue;
        std::vector<int> e(exps.exponents().begin(), exps.exponents().end());
        const int power = e[var]--;
        out.add_term(MultiIndex(std::move(e)), c * power);
    }
    return out;
}

HomPoly euler_lhs(const HomPoly& h)
{
    HomPoly out(h.vars(), h.degree());
    if (h.degree() == 0) return out;
    for (int p = 0; p <= h.vars(); ++p) {
        const MultiIndex xp = MultiIndex::unit(h.vars(), p);
        const HomPoly dp = partial(h, p);
        for (const auto& [exps, c] : dp.terms()) out.add_term(exps + xp, c);
    }
    return out;
}

std::vector<Rational> coeff_vector(const HomPoly& f)
{
    std::vector<Rational> v(graded_dim(f.vars(), f.degree()));
    for (const auto& [exps, c] : f.terms()) v[rank_in_degree(exps)] = c;
    return v;
}

HomPoly from_coeff_vector(int n, int d, const std::vector<Rational>& coeffs)
{
    const auto basis = enumerate(n, d);
    if (coeffs.size() != basis.size()) {
        throw DomainError(ErrorKind::DimensionMismatch,
                          "expected " + std::to_string(basis.size()) + " coefficients, got " +
                              std::to_string(coeffs.size()));
    }
    HomPoly f(n, d);
    for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coeffs[i]);
    return f;
}

Rational evaluate(const HomPoly& f, const std::vector<Rational>& point)
{
    if (point.size() != static_cast<std::size_t>(f.vars() + 1)) {
        throw DomainError(ErrorKind::LengthMismatch, "evaluation point has wrong length");
    }
    Rational total = 0;
    for (const auto& [exps, c] : f.terms()) {
        Rational term = c;
        for (std::size_t j = 0; j < exps.size(); ++j) {
            for (int e = 0; e < exps[j]; ++e) term *= point[j];
        }
        total += term;
    }
    return total;
}

std::optional<Rational> proportionality(const HomPoly& f, const HomPoly& g)
{
    if (f.vars() != g.vars() || f.is_zero() || g.is_zero()) return std::nullopt;
    if (f.degree() != g.degree() || f.term_count() != g.term_count()) return std::nullopt;
    const auto& [lead_exps, lead] = *g.terms().begin();
    const Rational c = f.coeff(lead_exps) / lead;
    for (const auto& [exps, gc] : g.terms()) {
        if (f.coeff(exps) != c * gc) return std::nullopt;
    }
    return c;
}

} // namespace derivspace
