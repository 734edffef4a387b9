#include <doctest.h>

#include <set>

#include "derivspace/error.hpp"
#include "derivspace/multiindex.hpp"

using namespace derivspace;

TEST_CASE("order sums the exponents")
{
    CHECK(order(MultiIndex{0, 0, 0}) == 0);
    CHECK(order(MultiIndex{2, 1}) == 3);
    CHECK(order(MultiIndex{1, 0, 2}) == 3);
}

TEST_CASE("geq is the componentwise partial order")
{
    CHECK(geq(MultiIndex{2, 1}, MultiIndex{1, 1}));
    CHECK_FALSE(geq(MultiIndex{2, 0}, MultiIndex{1, 1}));
    CHECK(geq(MultiIndex{3, 0, 2}, MultiIndex{3, 0, 2}));
    CHECK_THROWS_AS(geq(MultiIndex{1, 0}, MultiIndex{1, 0, 0}), DomainError);
}

TEST_CASE("add and sub")
{
    CHECK(add(MultiIndex{1, 0}, MultiIndex{0, 1}) == MultiIndex{1, 1});
    CHECK(sub(MultiIndex{2, 1}, MultiIndex{1, 0}) == MultiIndex{1, 1});
    try {
        sub(MultiIndex{1, 0}, MultiIndex{0, 1});
        FAIL("expected NotDominated");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::NotDominated);
    }
    try {
        add(MultiIndex{1, 0}, MultiIndex{1});
        FAIL("expected LengthMismatch");
    } catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::LengthMismatch);
    }
}

TEST_CASE("enumerate lists degree-e indices in canonical order")
{
    const auto two = enumerate(1, 2);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == MultiIndex{2, 0});
    CHECK(two[1] == MultiIndex{1, 1});
    CHECK(two[2] == MultiIndex{0, 2});
    CHECK(enumerate(2, 3).size() == 10);
    const auto single = enumerate(0, 4);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == MultiIndex{4});
}

TEST_CASE("enumerate: counts, strict order, ranks")
{
    for (int n = 0; n <= 4; ++n) {
        for (int e = 0; e <= 8; ++e) {
            const auto all = enumerate(n, e);
            CHECK(all.size() == binomial(n + e, e));
            std::set<MultiIndex> unique(all.begin(), all.end());
            CHECK(unique.size() == all.size());
            for (std::size_t i = 0; i < all.size(); ++i) {
                CHECK(all[i].order() == e);
                CHECK(rank_in_degree(all[i]) == i);
                if (i > 0) CHECK(all[i - 1] < all[i]);
            }
        }
    }
}

TEST_CASE("add and sub are inverse, geq is a partial order")
{
    for (int n = 0; n <= 2; ++n) {
        std::vector<MultiIndex> pool;
        for (int e = 0; e <= 4; ++e) {
            for (auto& i : enumerate(n, e)) pool.push_back(i);
        }
        for (const auto& a : pool) {
            CHECK(geq(a, a));
            for (const auto& b : pool) {
                CHECK(sub(add(a, b), b) == a);
                if (geq(a, b) && geq(b, a)) CHECK(a == b);
                for (const auto& c : pool) {
                    if (geq(a, b) && geq(b, c)) CHECK(geq(a, c));
                }
            }
        }
    }
}

TEST_CASE("textual forms")
{
    CHECK(MultiIndex{1, 0, 2}.to_string() == "(1,0,2)");
    CHECK(parse_multiindex("(1,0,2)") == MultiIndex{1, 0, 2});
    CHECK(parse_multiindex("2,1") == MultiIndex{2, 1});
    CHECK_THROWS_AS(parse_multiindex("2,-1"), DomainError);
    CHECK_THROWS_AS(parse_multiindex("(2,1"), DomainError);
    CHECK_THROWS_AS(parse_multiindex(""), DomainError);
}
