#include <doctest.h>

#include "helpers.hpp"
#include "uma/dual_space.hpp"
#include "uma/oracle.hpp"
#include "uma/projection.hpp"
#include "uma/propagation.hpp"
#include "uma/random_instances.hpp"
#include "uma/selection.hpp"

using namespace uma;
using test::lit;
using test::set;

TEST_CASE("propagation equals the set of pointwise projections") {
    auto rng = test::rng(20);
    for (int rep = 0; rep < 150; ++rep) {
        Pcr p = gen::nondegenerate_pcr(gen::sigma(1 + rep % 9), rng);
        auto d = DualSpace::enumerate(p);
        for (int k = 0; k < 3; ++k) {
            LiteralSet sset = gen::sub_of(d.vertex(rng() % d.size()), rng, 0.3);
            LiteralSet t = gen::sub_of(d.vertex(rng() % d.size()), rng, 0.3);
            auto proj = oracle::bfs_project_all(d, d.halfspace(t));
            VertexSet image = d.no_vertices();
            d.halfspace(sset).for_each([&](std::size_t v) { image.set(proj[v]); });
            PropagationStats stats;
            LiteralSet base = propagate(p, sset, t, &stats);
            CHECK(d.halfspace(base) == image);
            CHECK(base == p.up(sset | t) - p.down(starred(t)));
            CHECK((stats.literals_visited > 0) == (sset | t).any());
            LoadedPcr loaded(p, sset);
            CHECK(loaded.propagate(t) == base);
        }
    }
}

TEST_CASE("loading an incoherent set throws") {
    Sigma s(std::vector<std::string>{"a", "b"});
    Pcr p(s);
    p.insert(lit(s, "a"), lit(s, "b*"));
    CHECK_THROWS_AS(LoadedPcr(p, set(s, {"a", "b"})), std::invalid_argument);
    CHECK_THROWS_AS(LoadedPcr(p, set(s, {"a", "a*"})), std::invalid_argument);
    CHECK_NOTHROW(LoadedPcr(p, set(s, {"a", "b*"})));
}

TEST_CASE("coherent projection of a contradicted pair keeps only 1") {
    Sigma s(std::vector<std::string>{"a", "b"});
    Pcr p(s);
    p.insert(lit(s, "a"), lit(s, "b*"));
    CHECK(coherent_projection(p, set(s, {"a", "b"})) == set(s, {"1"}));
    CHECK(coherent_projection(p, set(s, {"a"})) == set(s, {"1", "a", "b*"}));
    LiteralSet u = set(s, {"1", "a", "b"});
    CHECK(belief_update(p, u) == coherent_projection(p, u));
    CHECK_THROWS(belief_update(p, set(s, {"a"})));
}

TEST_CASE("coherent projection laws") {
    auto rng = test::rng(21);
    for (int rep = 0; rep < 200; ++rep) {
        Sigma s = gen::sigma(1 + rep % 8);
        Pcr p = gen::nondegenerate_pcr(s, rng);
        p.freeze();
        auto leq = oracle::naive_closure(p);
        LiteralSet a = gen::subset(s, rng, 0.4), b = gen::subset(s, rng, 0.4);
        LiteralSet ca = coherent_projection(p, a);
        // closed and coherent
        CHECK(oracle::naive_coherent(leq, ca));
        CHECK(oracle::naive_up(leq, ca) == ca);
        // idempotent
        CHECK(coherent_projection(p, ca) == ca);
        // fixed points are exactly the closed coherent sets
        CHECK((coherent_projection(p, a) == a) == p.is_closed_coherent(a));
        // a coherent input is kept
        if (p.is_coherent(a)) CHECK(a.is_subset_of(ca));
        // monotone on coherent inputs
        if (p.is_coherent(a | b)) CHECK(coherent_projection(p, a).is_subset_of(coherent_projection(p, a | b)));
        // nearest vertices of a complete selection lie inside <coh(u)>
        auto vs = oracle::brute_dual(p);
        LiteralSet u = gen::complete(s, rng);
        LiteralSet cu = coherent_projection(p, u);
        std::size_t best = SIZE_MAX;
        for (const auto& v : vs) best = std::min(best, hamming_distance(u, v));
        for (const auto& v : vs)
            if (hamming_distance(u, v) == best) CHECK(cu.is_subset_of(v));
    }
}
