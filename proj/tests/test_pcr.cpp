#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "uma/dual_space.hpp"
#include "uma/oracle.hpp"
#include "uma/pcr.hpp"
#include "uma/quotient.hpp"
#include "uma/random_instances.hpp"
#include "uma/selection.hpp"

using namespace uma;
using test::lit;
using test::set;

TEST_CASE("literal layout") {
    Sigma s(std::vector<std::string>{"a", "b"});
    CHECK(s.size() == 6);
    CHECK(s.positive(0) == Literal{2});
    CHECK(s.negative(1) == Literal{5});
    CHECK(complement(Literal{4}) == Literal{5});
    CHECK(s.name(Literal{3}) == "a*");
    CHECK(s.name(kTrue) == "1");
    CHECK(s.find("b*") == Literal{5});
    CHECK(!s.find("c"));
    CHECK(s.format(set(s, {"a", "b*"})) == "{a,b*}");
    CHECK_THROWS(Sigma(std::vector<std::string>{"x*"}));
}

TEST_CASE("insert adds the contrapositive and the pointed relations") {
    Sigma s(std::vector<std::string>{"a", "b"});
    Pcr p(s);
    for (std::uint32_t x = 0; x < s.size(); ++x) {
        CHECK(p.leq(kFalse, Literal{x}));
        CHECK(p.leq(Literal{x}, kTrue));
    }
    p.insert(lit(s, "a"), lit(s, "b"));
    CHECK(p.contains(lit(s, "b*"), lit(s, "a*")));
    CHECK(!p.leq(lit(s, "b"), lit(s, "a")));
    CHECK(p.relations().size() == 1);
}

TEST_CASE("closure matches naive reachability on random PCRs") {
    auto rng = test::rng(3);
    for (int rep = 0; rep < 150; ++rep) {
        Sigma s = gen::sigma(1 + rep % 9);
        Pcr p = gen::nondegenerate_pcr(s, rng);
        if (rep % 3 == 0)  // degenerate inputs too
            p.insert(s.positive(0), s.negative(0)), p.insert(s.negative(0), s.positive(0));
        auto naive = oracle::naive_closure(p);
        Pcr frozen = p;
        frozen.freeze();
        for (std::uint32_t a = 0; a < s.size(); ++a)
            for (std::uint32_t b = 0; b < s.size(); ++b) {
                CHECK(p.leq(Literal{a}, Literal{b}) == naive[a][b]);
                CHECK(frozen.leq(Literal{a}, Literal{b}) == naive[a][b]);
                // contrapositive symmetry of the closure
                CHECK(naive[a][b] == naive[b ^ 1][a ^ 1]);
            }
        for (int k = 0; k < 5; ++k) {
            LiteralSet t = gen::subset(s, rng, 0.3);
            CHECK(frozen.up(t) == oracle::naive_up(naive, t));
            CHECK(frozen.is_coherent(t) == oracle::naive_coherent(naive, t));
        }
    }
}

TEST_CASE("up and down laws") {
    auto rng = test::rng(4);
    for (int rep = 0; rep < 100; ++rep) {
        Sigma s = gen::sigma(2 + rep % 7);
        Pcr p = gen::nondegenerate_pcr(s, rng);
        p.freeze();
        LiteralSet t = gen::subset(s, rng, 0.3), u = gen::subset(s, rng, 0.3);
        CHECK(t.is_subset_of(p.up(t)));
        CHECK(p.up(p.up(t)) == p.up(t));
        CHECK(p.up(t | u) == (p.up(t) | p.up(u)));
        CHECK(p.down(t) == starred(p.up(starred(t))));
        CHECK(p.up(t).test(kTrue) == t.any());
        CHECK(p.down(t).test(kFalse) == t.any());
        CHECK(p.is_forward_closed(p.up(t)));
    }
}

TEST_CASE("small examples") {
    SUBCASE("orthogonal") {
        Pcr p(Sigma(3));
        CHECK(!p.is_degenerate());
        CHECK(p.negligibles().members() == std::vector<Literal>{kFalse});
        CHECK(DualSpace::enumerate(p).size() == 8);
    }
    SUBCASE("chain") {
        Sigma s(std::vector<std::string>{"a", "b", "c"});
        Pcr p(s);
        p.insert(lit(s, "a"), lit(s, "b"));
        p.insert(lit(s, "b"), lit(s, "c"));
        CHECK(p.leq(lit(s, "a"), lit(s, "c")));
        CHECK(p.leq(lit(s, "c*"), lit(s, "a*")));
        CHECK(DualSpace::enumerate(p).size() == 4);
    }
    SUBCASE("one and zero identified") {
        Pcr p(Sigma(1));
        p.insert(kTrue, kFalse);
        CHECK(p.is_degenerate());
        CHECK_THROWS_AS(canonical_quotient(p), std::invalid_argument);
        CHECK_THROWS_AS(DualSpace::enumerate(p), std::invalid_argument);
    }
    SUBCASE("one-sided negligible") {
        Sigma s(std::vector<std::string>{"a", "b"});
        Pcr p(s);
        p.insert(lit(s, "a"), lit(s, "a*"));
        CHECK(p.negligibles() == set(s, {"0", "a"}));
        CHECK(!p.is_degenerate());
        CHECK(DualSpace::enumerate(p).size() == 2);
    }
}

TEST_CASE("equivalence classes and component ids") {
    Sigma s(std::vector<std::string>{"a", "b", "c"});
    Pcr p(s);
    p.insert(lit(s, "a"), lit(s, "b"));
    p.insert(lit(s, "b"), lit(s, "a"));
    CHECK(p.equivalence_class(lit(s, "a")) == set(s, {"a", "b"}));
    auto comp = p.component_ids();
    CHECK(comp[lit(s, "a").id()] == comp[lit(s, "b").id()]);
    CHECK(comp[lit(s, "a").id()] != comp[lit(s, "c").id()]);
}

TEST_CASE("canonical quotient") {
    Sigma s(std::vector<std::string>{"a", "b", "c", "d"});
    Pcr p(s);
    p.insert(lit(s, "a"), lit(s, "b"));
    p.insert(lit(s, "b"), lit(s, "a"));
    p.insert(lit(s, "d"), lit(s, "d*"));
    p.insert(lit(s, "a"), lit(s, "c"));
    auto q = canonical_quotient(p);
    CHECK(q.quotient.sigma().n_pairs() == 2);
    CHECK(q.project(lit(s, "d")) == kFalse);
    CHECK(q.project(lit(s, "d*")) == kTrue);
    CHECK(q.project(lit(s, "a")) == q.project(lit(s, "b")));
    CHECK(q.quotient.sigma().query_name(0) == "[a=b]");
    CHECK(q.pullback(q.project(set(s, {"a"}))) == set(s, {"a", "b"}));
    const Sigma& qs = q.quotient.sigma();
    CHECK(q.quotient.leq(q.project(lit(s, "a")), q.project(lit(s, "c"))));
    // the quotient is a poc set: antisymmetric, only 0 negligible
    CHECK(q.quotient.negligibles() == qs.set_of({kFalse}));
}

TEST_CASE("quotients of random PCRs are poc sets with the same dual size") {
    auto rng = test::rng(5);
    for (int rep = 0; rep < 100; ++rep) {
        Sigma s = gen::sigma(2 + rep % 6);
        Pcr p = gen::nondegenerate_pcr(s, rng);
        p.freeze();
        auto q = canonical_quotient(p);
        Pcr g = q.quotient;
        g.freeze();
        CHECK(g.negligibles().count() == 1);
        auto comp = g.component_ids();
        CHECK(std::set<std::uint32_t>(comp.begin(), comp.end()).size() == g.size());
        CHECK(oracle::brute_dual(p).size() == oracle::brute_dual(g).size());
        for (std::uint32_t a = 0; a < s.size(); ++a)
            for (std::uint32_t b = 0; b < s.size(); ++b)
                if (p.leq(Literal{a}, Literal{b})) CHECK(g.leq(q.project(Literal{a}), q.project(Literal{b})));
    }
}

TEST_CASE("direct sum multiplies dual sizes") {
    auto rng = test::rng(6);
    for (int rep = 0; rep < 40; ++rep) {
        Pcr p = gen::nondegenerate_pcr(gen::sigma(1 + rep % 4), rng);
        Pcr q = gen::nondegenerate_pcr(gen::sigma(1 + rep % 3), rng);
        Pcr sum = direct_sum(p, q);
        CHECK(sum.sigma().n_pairs() == p.sigma().n_pairs() + q.sigma().n_pairs());
        CHECK(oracle::brute_dual(sum).size() == oracle::brute_dual(p).size() * oracle::brute_dual(q).size());
    }
}

TEST_CASE("selection helpers") {
    Sigma s(std::vector<std::string>{"a", "b", "c"});
    LiteralSet u = complete_from_mask(s, 0b101);
    CHECK(is_complete(s, u));
    CHECK(u == set(s, {"1", "a", "b*", "c"}));
    CHECK(mask_of(s, u) == 0b101);
    CHECK(cube_size(s) == 8);
    LiteralSet w = flip(u, set(s, {"a"}));
    CHECK(hamming_distance(u, w) == 1);
    CHECK_THROWS_AS(flip(u, set(s, {"a*"})), std::invalid_argument);
    CHECK(is_star_selection(s, set(s, {"a", "b*"})));
    CHECK(!is_star_selection(s, set(s, {"a", "a*"})));
}
