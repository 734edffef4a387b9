#include <doctest.h>

#include <random>

#include "derivspace/error.hpp"
#include "derivspace/polyring.hpp"

using namespace derivspace;

namespace {

ErrorKind parse_error(const std::string& text, int n)
{
    try {
        parse_poly(text, n);
    } catch (const DomainError& e) {
        return e.kind();
    }
    FAIL("expected a parse failure for '" << text << "'");
    return ErrorKind::FormatError;
}

HomPoly random_poly(std::mt19937_64& rng, int n, int d)
{
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 7);
    std::uniform_int_distribution<int> coin(0, 2);
    HomPoly f(n, d);
    for (const auto& e : enumerate(n, d)) {
        if (coin(rng) == 0) continue;
        f.add_term(e, make_rational(num(rng), den(rng)));
    }
    return f;
}

} // namespace

TEST_CASE("parse examples")
{
    const HomPoly a = parse_poly("x0^2*x1", 1);
    CHECK(a.degree() == 3);
    CHECK(a.term_count() == 1);
    CHECK(a.coeff(MultiIndex{2, 1}) == 1);

    const HomPoly b = parse_poly("x0^4 + x0*x1^3", 1);
    CHECK(b.degree() == 4);
    CHECK(b.coeff(MultiIndex{4, 0}) == 1);
    CHECK(b.coeff(MultiIndex{1, 3}) == 1);
    CHECK(b.term_count() == 2);

    CHECK(parse_error("x0^2 + x1", 1) == ErrorKind::NotHomogeneous);
    CHECK(parse_error("x0*x2", 1) == ErrorKind::WrongVariable);
    CHECK(parse_error("x0^", 1) == ErrorKind::SyntaxError);
    CHECK(parse_error("x0 + + x1", 1) == ErrorKind::SyntaxError);
    CHECK(parse_error("3/0*x0", 1) == ErrorKind::SyntaxError);
    CHECK(parse_error("x0^0", 1) == ErrorKind::SyntaxError);
    CHECK(parse_error("y0", 1) == ErrorKind::SyntaxError);
}

TEST_CASE("parse details")
{
    CHECK(parse_poly(" 3 / 4 * x0 * x0  -  x1^2 ", 1) == parse_poly("3/4*x0^2 - x1^2", 1));
    CHECK(parse_poly("x0*x1 + x1*x0", 1).coeff(MultiIndex{1, 1}) == 2);
    CHECK(parse_poly("x0^2 - x0^2", 1).is_zero());
    CHECK(parse_poly("-x0", 1).coeff(MultiIndex{1, 0}) == -1);
    CHECK(parse_poly("5", 2).degree() == 0);
    const HomPoly zero = parse_poly("0", 2, 3);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 3);
    CHECK_THROWS_AS(parse_poly("x0^2", 1, 3), DomainError);
    CHECK(parse_poly("y0*y1", 1, std::nullopt, 'y').coeff(MultiIndex{1, 1}) == 1);
}

TEST_CASE("print examples")
{
    CHECK(print_poly(parse_poly("x0^2*x1", 1)) == "x0^2*x1");
    CHECK(print_poly(HomPoly(1, 3)) == "0");
    HomPoly f(1, 4);
    f.add_term(MultiIndex{4, 0}, 1);
    f.add_term(MultiIndex{1, 3}, Rational(-1, 2));
    CHECK(print_poly(f) == "x0^4 - 1/2*x0*x1^3");
    CHECK(print_poly(parse_poly("-2*x1^2 + x0*x1", 1)) == "x0*x1 - 2*x1^2");
    CHECK(print_poly(parse_poly("-1/3", 1)) == "-1/3");
}

TEST_CASE("parse(print(f)) == f on random polynomials")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng() % 4);
        const int d = static_cast<int>(rng() % 7);
        const HomPoly f = random_poly(rng, n, d);
        CHECK(parse_poly(print_poly(f), n, d) == f);
    }
}

TEST_CASE("add_scaled")
{
    const HomPoly f = parse_poly("x0^2 - 3*x0*x1", 1);
    const HomPoly g = parse_poly("x1^2", 1);
    CHECK(add_scaled(f, 0, g) == f);
    CHECK(add_scaled(f, -1, f).is_zero());
    CHECK(add_scaled(parse_poly("x0^2", 1), 1, g) == parse_poly("x0^2 + x1^2", 1));
    CHECK(add_scaled(HomPoly(1, 0), 2, g) == parse_poly("2*x1^2", 1));
    CHECK_THROWS_AS(add_scaled(f, 1, parse_poly("x0^3", 1)), DomainError);
    CHECK_THROWS_AS(add_scaled(f, 1, parse_poly("x0^2", 2)), DomainError);
}

TEST_CASE("euler_lhs is deg(h) times h")
{
    CHECK(euler_lhs(parse_poly("x0^2*x1", 1)) == parse_poly("3*x0^2*x1", 1));
    CHECK(euler_lhs(parse_poly("x0^4 + x1^4", 1)) == parse_poly("4*x0^4 + 4*x1^4", 1));
    CHECK(euler_lhs(parse_poly("5", 1)).is_zero());

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng() % 4);
        const int d = static_cast<int>(rng() % 7);
        const HomPoly h = random_poly(rng, n, d);
        CHECK(euler_lhs(h) == scaled(d, h));
    }
}

TEST_CASE("coeff_vector")
{
    const auto v = coeff_vector(parse_poly("x0^2", 1));
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 1);
    CHECK(v[1] == 0);
    CHECK(v[2] == 0);
    CHECK(coeff_vector(HomPoly(1, 2)) == std::vector<Rational>(3));
    CHECK(coeff_vector(parse_poly("x0*x1", 1)) == std::vector<Rational>{0, 1, 0});

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int d = static_cast<int>(rng() % 6);
        const HomPoly f = random_poly(rng, n, d);
        const HomPoly g = random_poly(rng, n, d);
        const Rational c = make_rational(static_cast<long>(rng() % 9) - 4, 3);
        const auto lhs = coeff_vector(add_scaled(f, c, g));
        const auto vf = coeff_vector(f);
        const auto vg = coeff_vector(g);
        for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == vf[i] + c * vg[i]);
        CHECK(from_coeff_vector(n, d, vf) == f);
    }
}

TEST_CASE("evaluate and proportionality")
{
    const HomPoly f = parse_poly("x0^2 + 2*x0*x1", 1);
    CHECK(evaluate(f, {2, 3}) == 16);
    CHECK(proportionality(scaled(Rational(-7, 2), f), f) == Rational(-7, 2));
    CHECK_FALSE(proportionality(f, parse_poly("x0^2", 1)).has_value());
    CHECK_FALSE(proportionality(HomPoly(1, 2), f).has_value());
}
