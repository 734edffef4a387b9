#include <doctest.h>

#include <sstream>

#include "derivspace/error.hpp"
#include "derivspace/genericity.hpp"

using namespace derivspace;

TEST_CASE("profile examples")
{
    const GenericityProfile fermat = profile(parse_poly("x0^4 + x1^4", 1));
    CHECK(fermat.dims == std::vector<std::size_t>{1, 2, 2, 2, 1});
    CHECK(fermat.member[0]);
    CHECK(fermat.member[1]);
    CHECK_FALSE(fermat.member[2]);

    for (int d = 2; d <= 6; ++d) {
        const GenericityProfile power = profile(HomPoly::monomial(MultiIndex{d, 0, 0}));
        for (int k = 0; k <= d; ++k) CHECK(power.dims[static_cast<std::size_t>(k)] == 1);
        for (int k = 1; k <= d; ++k) CHECK_FALSE(power.member[static_cast<std::size_t>(k)]);
    }

    const GenericityProfile random = profile(sample(1, 4, 1000, 77));
    CHECK(random.dims == std::vector<std::size_t>{1, 2, 3, 2, 1});
    CHECK(random.member[2]);

    try {
        profile(HomPoly(1, 4));
        FAIL("expected ZeroPolynomial");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::ZeroPolynomial);
    }
}

TEST_CASE("chain and rank-bound helpers")
{
    GenericityProfile bad{1, 4, {1, 1, 4, 2, 1}, {true, false, true, false, false}};
    CHECK(chain_violations(bad) == std::vector<int>{2});
    CHECK(rank_bound_violations(bad) == std::vector<int>{2});
    CHECK(chain_violations(profile(sample(2, 5, 10, 3))).empty());
}

TEST_CASE("sample is deterministic per seed")
{
    CHECK(sample(2, 4, 1000, 5) == sample(2, 4, 1000, 5));
    CHECK_FALSE(sample(2, 4, 1000, 5) == sample(2, 4, 1000, 6));
    const HomPoly f = sample(2, 4, 3, 9);
    for (const auto& [e, c] : f.terms()) {
        CHECK(c >= -3);
        CHECK(c <= 3);
        CHECK(c.get_den() == 1);
    }
    CHECK(substream_seed(1, 2, 0) != substream_seed(1, 2, 1));
    CHECK(substream_seed(1, 2, 0) != substream_seed(1, 3, 0));
    CHECK(substream_seed(1, 2, 0) == substream_seed(1, 2, 0));
    CHECK(certify_generic(sample(2, 4, 1000, substream_seed(4, 0)), 2));
}

TEST_CASE("certify_generic examples")
{
    CHECK(certify_generic(parse_poly("x0^4 + x0*x1^3", 1), 2));
    CHECK_FALSE(certify_generic(parse_poly("x0^4 + x1^4", 1), 2));
    for (std::uint64_t s = 0; s < 5; ++s) CHECK_FALSE(certify_generic(sample(1, 4, 1000, s), 3));
    CHECK_FALSE(certify_generic(parse_poly("x0^4", 1), 5));
    CHECK_FALSE(certify_generic(parse_poly("x0^4", 1), -1));
}

TEST_CASE("fingerprints")
{
    const HomPoly f = sample(1, 4, 1000, 101);
    const HomPoly g = sample(1, 4, 1000, 202);
    REQUIRE(certify_generic(f, 2));
    REQUIRE(certify_generic(g, 2));

    CHECK(fingerprint(f, 1) == fingerprint(scaled(-7, f), 1));
    CHECK(fingerprint(f, 1).digest == fingerprint(scaled(Rational(3, 11), f), 1).digest);
    CHECK(fingerprint(f, 2) == fingerprint(g, 2)); // middle order: whole space
    CHECK_FALSE(fingerprint(f, 1) == fingerprint(g, 1));
    CHECK(fingerprint(f, 1).digest.size() == 64);

    CHECK_THROWS_AS(fingerprint(HomPoly(1, 4), 1), DomainError);
    CHECK_THROWS_AS(fingerprint(f, 5), DomainError);
}

TEST_CASE("sha256 matches a published test vector")
{
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("projective_normal")
{
    const HomPoly f = parse_poly("-3*x0^2 + 6*x1^2", 1);
    CHECK(projective_normal(f) == parse_poly("x0^2 - 2*x1^2", 1));
    CHECK(projective_normal(scaled(Rational(5, 2), f)) == projective_normal(f));
}

TEST_CASE("experiment config validation")
{
    ExperimentConfig c;
    c.trials = 0;
    CHECK_THROWS_AS(validate(c), DomainError);
    c.trials = 3;
    c.k = -1;
    CHECK_THROWS_AS(validate(c), DomainError);
    c.k = 5;
    CHECK_THROWS_AS(validate(c), DomainError);
    c.k = 1;
    c.bound = 0;
    CHECK_THROWS_AS(validate(c), DomainError);
    CHECK_THROWS_AS(parse_experiment_kind("nope"), DomainError);
    CHECK(parse_experiment_kind("chain") == ExperimentKind::Chain);
}

TEST_CASE("experiments run and report")
{
    ExperimentConfig c;
    c.n = 1;
    c.d = 4;
    c.k = 1;
    c.trials = 6;
    c.seed = 12;

    c.kind = ExperimentKind::Theorem;
    const auto theorem = run_experiment(c);
    CHECK(theorem.summary.unique == 6);
    CHECK(theorem.summary.contradictions == 0);

    c.kind = ExperimentKind::Genericity;
    c.k = 2;
    CHECK(run_experiment(c).summary.certified == 6);

    c.kind = ExperimentKind::Chain;
    const auto chain = run_experiment(c);
    CHECK(chain.records.size() == 9);
    CHECK(chain.summary.chain_violations == 0);
    CHECK(chain.records.back().source == "x0^(d-1)*x1");

    c.kind = ExperimentKind::Collision;
    c.k = 1;
    const auto coll = run_experiment(c);
    CHECK(coll.summary.collisions == 0);
    CHECK(coll.summary.theorem_applies);

    c.k = 2;
    const auto middle = run_experiment(c);
    CHECK(middle.summary.collisions == 5); // constant map at the middle order
    CHECK_FALSE(middle.summary.theorem_applies);
}

TEST_CASE("reports are byte-identical for equal configs")
{
    ExperimentConfig c;
    c.kind = ExperimentKind::Theorem;
    c.n = 2;
    c.d = 4;
    c.k = 1;
    c.trials = 5;
    c.seed = 99;
    std::ostringstream a, b;
    write_csv(run_experiment(c), a);
    write_csv(run_experiment(c), b);
    CHECK(a.str() == b.str());
    CHECK(to_json(run_experiment(c)).dump() == to_json(run_experiment(c)).dump());
    CHECK(a.str().rfind("trial,seed,n,d,k,certified,dimE_k,verdict,solution_dim,elapsed_ms\n", 0) == 0);

    c.seed = 100;
    std::ostringstream other;
    write_csv(run_experiment(c), other);
    CHECK(other.str() != a.str());
}
