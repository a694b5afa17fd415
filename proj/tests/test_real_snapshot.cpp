#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "uma/chernoff.hpp"
#include "uma/random_instances.hpp"
#include "uma/real_snapshot.hpp"
#include "uma/snapshot.hpp"

using namespace uma;
using test::lit;
using test::set;

TEST_CASE("empirical average of three observations") {
    Sigma s(std::vector<std::string>{"a", "b"});
    RealSnapshot r(s, DiscountSchedule::empirical(), 0.1);
    LiteralSet u = set(s, {"1", "a", "b"}), v = set(s, {"1", "a*", "b"});
    r.update(u, 1);
    r.update(v, 1);
    r.update(u, 1);
    CHECK(r.steps() == 3);
    CHECK(r.weight(lit(s, "a")) == doctest::Approx(2.0 / 3));
    CHECK(r.weight(lit(s, "a"), lit(s, "b")) == doctest::Approx(2.0 / 3));
    CHECK(r.weight(lit(s, "b")) == doctest::Approx(1.0));
    CHECK(r.weight(lit(s, "a*")) == doctest::Approx(1.0 / 3));
    CHECK(r.empty_weight() == doctest::Approx(1.0));
    CHECK(r.validate(1e-12).ok());
    CHECK(r.minset() == set(s, {"1", "a", "b"}));
}

TEST_CASE("discount one freezes the first observation") {
    Sigma s(2);
    RealSnapshot r(s, DiscountSchedule::fixed(1.0), 0.1);
    LiteralSet u = set(s, {"1", "q0", "q1*"});
    r.update(u, 2.5);
    auto before = r.matrix();
    CHECK(before == point_mass_weight(s, u, 2.5));
    r.update(set(s, {"1", "q0*", "q1"}), 7);
    CHECK(r.matrix() == before);
}

TEST_CASE("empirical weights equal the brute-force mean of point masses") {
    auto rng = test::rng(40);
    for (int rep = 0; rep < 40; ++rep) {
        Sigma s = gen::sigma(1 + rep % 6);
        RealSnapshot r(s, DiscountSchedule::empirical(), 0.2);
        std::vector<double> sum(s.size() * s.size(), 0.0);
        const int steps = 1 + rep * 7;
        for (int t = 0; t < steps; ++t) {
            LiteralSet u = gen::complete(s, rng);
            double v = 1.0 + static_cast<double>(rng() % 5);
            r.update(u, v);
            auto pm = point_mass_weight(s, u, v);
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += pm[i];
        }
        for (std::size_t i = 0; i < sum.size(); ++i)
            CHECK(r.matrix()[i] == doctest::Approx(sum[i] / steps).epsilon(1e-12));
        CHECK(r.validate(r.default_tolerance()).ok());
    }
}

TEST_CASE("discounted updates stay valid") {
    auto rng = test::rng(41);
    Sigma s(5);
    RealSnapshot r(s, DiscountSchedule::fixed(0.97), 0.1);
    for (int t = 0; t < 2000; ++t) r.update(gen::complete(s, rng), 1.0 + static_cast<double>(rng() % 10));
    auto rep = r.validate(r.default_tolerance());
    CHECK_MESSAGE(rep.ok(), rep.describe());
    CHECK(!r.derived_pcr().is_degenerate());
}

TEST_CASE("a point mass derives its own vertex") {
    Sigma s(3);
    RealSnapshot r(s, DiscountSchedule::empirical(), 0.1);
    LiteralSet u = set(s, {"1", "q0", "q1*", "q2"});
    r.update(u, 4);
    CHECK(r.minset() == u);
    Pcr g = r.derived_pcr();
    g.freeze();
    CHECK(g.up(u) == u);
    for (std::uint32_t a = 2; a < s.size(); ++a)
        if (!u.test(Literal{a})) CHECK(g.negligibles().test(Literal{a}));
}

TEST_CASE("thresholds") {
    Sigma s(std::vector<std::string>{"a", "b"});
    RealSnapshot r(s, DiscountSchedule::empirical(), 0.3);
    for (int i = 0; i < 4; ++i) r.update(set(s, {"1", "a", "b"}), 1);
    for (int i = 0; i < 4; ++i) r.update(set(s, {"1", "a*", "b*"}), 1);
    r.update(set(s, {"1", "a", "b*"}), 1);
    for (int i = 0; i < 3; ++i) r.update(set(s, {"1", "a*", "b"}), 1);
    // cross weight 1/12 of an empty weight 1, below the opposite cross 3/12
    CHECK(r.derived_pcr().leq(lit(s, "a"), lit(s, "b")));
    r.set_tau(lit(s, "a"), lit(s, "b"), 0.05);
    CHECK(r.tau(lit(s, "b*"), lit(s, "a*")) == 0.05);
    CHECK(!r.derived_pcr().leq(lit(s, "a"), lit(s, "b")));
    CHECK(!r.derived_pcr().leq(lit(s, "b"), lit(s, "a")));
    CHECK_THROWS_AS(r.set_tau(lit(s, "a"), lit(s, "b"), 1.0), std::invalid_argument);
}

TEST_CASE("real snapshot errors") {
    Sigma s(1);
    RealSnapshot r(s, DiscountSchedule::empirical(), 0.1);
    CHECK(r.is_trivial());
    CHECK_THROWS_AS(r.derived_pcr(), std::invalid_argument);
    CHECK_THROWS_AS(r.update(set(s, {"1", "q0"}), 0.5), std::invalid_argument);
    CHECK_THROWS_AS(RealSnapshot(s, DiscountSchedule::empirical(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(DiscountSchedule::fixed(0.0), std::invalid_argument);
    CHECK(DiscountSchedule::empirical().q(0) == doctest::Approx(0.5));
    CHECK(DiscountSchedule::empirical().q(8) == doctest::Approx(0.9));
}

TEST_CASE("snapshot wrapper") {
    Sigma s(2);
    auto q = Snapshot::make(s, SnapshotKind::qualitative, 0.9, 0.1, 0);
    auto e = Snapshot::make(s, SnapshotKind::empirical, 0.9, 0.1, 0);
    auto d = Snapshot::make(s, SnapshotKind::discounted, 0.9, 0.1, 0);
    CHECK(q.kind() == SnapshotKind::qualitative);
    CHECK(e.real()->schedule().is_empirical());
    CHECK(d.real()->schedule().fixed_q() == 0.9);
    CHECK(q.derived_pcr() == Pcr(s));
    CHECK(e.derived_pcr() == Pcr(s));
    LiteralSet u = set(s, {"1", "q0", "q1"});
    CHECK_THROWS(q.update(u, 0.5));
    CHECK_THROWS(e.update(u, 0.5));
    q.update(u, 2);
    e.update(u, 2);
    CHECK(q.update_count() == 1);
    CHECK(e.update_count() == 1);
    CHECK(q.minset() == u);
    CHECK(e.minset() == u);
    CHECK(parse_snapshot_kind("discounted") == SnapshotKind::discounted);
    CHECK(!parse_snapshot_kind("bogus"));
}

TEST_CASE("relative entropy and the deviation bound") {
    CHECK(kl_divergence(0.5, 0.5) == 0.0);
    const double kl = 0.6 * std::log(1.2) + 0.4 * std::log(0.8);
    CHECK(kl_divergence(0.6, 0.5) == doctest::Approx(kl));
    CHECK(kl_divergence(0.0, 0.25) == doctest::Approx(std::log(4.0 / 3)));
    CHECK(chernoff_bound(99, 0.1, 0.5, 1.0) == doctest::Approx(2 * std::exp(-100 * kl)));
    CHECK(chernoff_bound(99, 1.0, 0.5, 10.0) == doctest::Approx(2 * std::exp(-100 * kl)));
    CHECK(chernoff_bound(0, 0.01, 0.5, 1.0) == 1.0);
    CHECK_THROWS_AS(chernoff_bound(10, 0.6, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(chernoff_bound(10, 0.1, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(chernoff_bound(10, 0.0, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(kl_divergence(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("the bound holds for Bernoulli running averages") {
    auto rng = test::rng(42);
    for (double alpha : {0.3, 0.5, 0.8}) {
        const std::size_t t = 59;
        const double delta = 0.1;
        std::size_t hits = 0;
        const int trials = 4000;
        for (int k = 0; k < trials; ++k) {
            double sum = 0;
            for (std::size_t i = 0; i <= t; ++i) sum += std::bernoulli_distribution(alpha)(rng);
            hits += std::abs(sum / (t + 1) - alpha) >= delta;
        }
        CHECK(static_cast<double>(hits) / trials <= chernoff_bound(t, delta, alpha, 1.0));
    }
}
