#include <doctest.h>

#include "helpers.hpp"
#include "uma/dual_space.hpp"
#include "uma/oracle.hpp"
#include "uma/qual_snapshot.hpp"
#include "uma/random_instances.hpp"
#include "uma/selection.hpp"

using namespace uma;
using test::lit;
using test::set;

namespace {

bool relations_subset(const Pcr& a, const Pcr& b) {
    for (std::uint32_t x = 0; x < a.size(); ++x)
        if (!a.successors(Literal{x}).is_subset_of(b.successors(Literal{x}))) return false;
    return true;
}

}  // namespace

TEST_CASE("the first update installs the point mass") {
    Sigma s(std::vector<std::string>{"a", "b", "c"});
    QualSnapshot q(s);
    CHECK(!q.initialized());
    CHECK(q.minset().none());
    CHECK(q.derived_pcr() == Pcr(s));
    LiteralSet u = set(s, {"1", "a", "b*", "c"});
    CHECK(q.update(u, 3));
    CHECK(q.matrix() == point_mass_restriction(s, u, 3));
    CHECK(q.update_count() == 1);
    CHECK(!q.update(u, 3));
    CHECK(!q.update(u, 5));
    CHECK(q.update_count() == 3);
    CHECK(q.update(u, 1));
    CHECK(q.weight(lit(s, "a"), lit(s, "c")) == 1);
    CHECK(q.weight(lit(s, "a*")) == kInfiniteRank);
    CHECK_THROWS_AS(q.update(set(s, {"1", "a"}), 0), std::invalid_argument);
    CHECK_THROWS_AS(q.update(u, kInfiniteRank), std::invalid_argument);
}

TEST_CASE("a point mass derives its own vertex") {
    auto rng = test::rng(30);
    for (int rep = 0; rep < 30; ++rep) {
        Sigma s = gen::sigma(1 + rep % 6);
        LiteralSet u = gen::complete(s, rng);
        QualSnapshot q(s);
        q.update(u, static_cast<Rank>(rep % 4));
        CHECK(q.is_valid());
        CHECK(q.minset() == u);
        Pcr g = q.derived_pcr();
        CHECK(!g.is_degenerate());
        auto d = DualSpace::enumerate(g);
        REQUIRE(d.size() == 1);
        CHECK(d.vertex(0) == u);
    }
}

TEST_CASE("exposure to every world at one rank leaves the orthogonal PCR") {
    Sigma s(3);
    QualSnapshot q(s);
    for (std::uint64_t m = 0; m < cube_size(s); ++m) q.update(complete_from_mask(s, m), 0);
    CHECK(q.is_valid());
    CHECK(q.derived_pcr() == Pcr(s));
    CHECK(q.minset() == s.set_of({kTrue}));
    QualSnapshot inf(s, kInfiniteRank);
    for (std::uint64_t m = 0; m < cube_size(s); ++m) inf.update(complete_from_mask(s, m), 0);
    CHECK(inf.derived_pcr() == Pcr(s));
}

TEST_CASE("min-updates equal the 2-restriction of the min of point masses") {
    auto rng = test::rng(31);
    for (int rep = 0; rep < 60; ++rep) {
        Sigma s = gen::sigma(1 + rep % 6);
        QualSnapshot q(s);
        std::optional<Ranking> k;
        for (int t = 0; t < 1 + rep % 12; ++t) {
            LiteralSet u = gen::complete(s, rng);
            Rank r = static_cast<Rank>(rng() % 5);
            q.update(u, r);
            auto pm = Ranking::point_mass(s, u, r);
            k = k ? min(*k, pm) : pm;
            CHECK(q.is_valid());
        }
        CHECK(q.matrix() == two_restriction(*k).matrix());
    }
}

TEST_CASE("derived relations sit inside the residual relations and never degenerate") {
    auto rng = test::rng(32);
    for (int rep = 0; rep < 100; ++rep) {
        Sigma s = gen::sigma(1 + rep % 7);
        const Rank delta = static_cast<Rank>(rep % 3);
        QualSnapshot q(s, delta);
        for (int t = 0; t < 1 + rep % 20; ++t) q.update(gen::complete(s, rng), static_cast<Rank>(rng() % 6));
        Pcr g = q.derived_pcr();
        CHECK(relations_subset(g, q.residual_pcr(delta)));
        CHECK(!g.is_degenerate());
        q.set_delta(kInfiniteRank);
        Pcr ginf = q.derived_pcr();
        CHECK(!ginf.is_degenerate());
        CHECK(relations_subset(ginf, q.residual_pcr(kInfiniteRank)));
        // the minset is coherent and closed under the derived relations
        q.set_delta(delta);
        LiteralSet m = q.minset();
        g.freeze();
        CHECK(g.is_coherent(m));
    }
}

TEST_CASE("minset tolerance") {
    Sigma s(std::vector<std::string>{"a", "b"});
    QualSnapshot q(s);
    q.update(set(s, {"1", "a", "b"}), 1);
    q.update(set(s, {"1", "a*", "b"}), 3);
    q.update(set(s, {"1", "a*", "b*"}), 4);
    CHECK(q.is_valid());
    CHECK(q.minset(0) == set(s, {"1", "a", "b"}));
    CHECK(q.minset(1) == set(s, {"1", "a", "b"}));
    CHECK(q.minset(2) == set(s, {"1", "b"}));
    CHECK(q.minset(3) == set(s, {"1"}));
}

TEST_CASE("finite and infinite tolerance in the derived PCR") {
    Sigma s(std::vector<std::string>{"a", "b"});
    QualSnapshot q(s, 0);
    q.update(set(s, {"1", "a", "b"}), 0);
    q.update(set(s, {"1", "a*", "b*"}), 0);
    q.update(set(s, {"1", "a", "b*"}), 2);
    // a with b* costs 2 against 0 for both and neither
    CHECK(q.derived_pcr().leq(lit(s, "a"), lit(s, "b")));
    q.set_delta(1);
    CHECK(q.derived_pcr().leq(lit(s, "a"), lit(s, "b")));
    q.set_delta(2);
    CHECK(!q.derived_pcr().leq(lit(s, "a"), lit(s, "b")));
    q.set_delta(kInfiniteRank);
    CHECK(!q.derived_pcr().leq(lit(s, "a"), lit(s, "b")));
    QualSnapshot r(s, kInfiniteRank);
    r.update(set(s, {"1", "a", "b"}), 5);
    r.update(set(s, {"1", "a*", "b*"}), 0);
    CHECK(r.derived_pcr().leq(lit(s, "a"), lit(s, "b")));
    CHECK(r.derived_pcr().leq(lit(s, "b"), lit(s, "a")));
}

TEST_CASE("validation flags broken matrices") {
    Sigma s(1);
    QualSnapshot q(s);
    CHECK(!q.is_valid());
    q.update(set(s, {"1", "q0"}), 0);
    auto w = q.matrix();
    w[2 * s.size() + 3] = 0;  // q0 with q0*
    auto bad = QualSnapshot::from_matrix(s, w);
    CHECK(bad.validate().violates(1));
    w = q.matrix();
    w[1 * s.size() + 2] = 1;  // asymmetric
    CHECK(QualSnapshot::from_matrix(s, w).validate().violates(0));
    CHECK_THROWS_AS(completion(bad), std::invalid_argument);
}

TEST_CASE("completion and 2-restriction") {
    auto rng = test::rng(33);
    for (int rep = 0; rep < 150; ++rep) {
        Sigma s = gen::sigma(1 + rep % 6);
        Ranking k = gen::ranking(s, rng);
        QualSnapshot w = two_restriction(k);
        CHECK(w.is_valid());
        Ranking c = completion(w);
        for (std::size_t m = 0; m < k.values().size(); ++m) CHECK(c.at_mask(m) <= k.at_mask(m));
        CHECK(two_restriction(c).matrix() == w.matrix());
        CHECK(c.global_min() == k.global_min());
        auto rep_hull = oracle::ranking_min_hull(k);
        CHECK_MESSAGE(rep_hull.match, rep_hull.counterexample);
    }
}

TEST_CASE("ranking basics") {
    Sigma s(2);
    CHECK_THROWS(Ranking(s, std::vector<Rank>(4, kInfiniteRank)));
    CHECK_THROWS(Ranking(s, std::vector<Rank>(3, 0)));
    Ranking k(s, {3, 1, 1, kInfiniteRank});
    CHECK(k.global_min() == 1);
    CHECK(k.minima().size() == 2);
    CHECK(k.min_over({}) == kInfiniteRank);
    CHECK(k.at(complete_from_mask(s, 0)) == 3);
}
