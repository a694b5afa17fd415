#include <doctest.h>

#include "helpers.hpp"
#include "uma/bua.hpp"
#include "uma/propagation.hpp"
#include "uma/sniffy.hpp"

using namespace uma;
using test::lit;
using test::set;

TEST_CASE("delay extension") {
    Sigma base(std::vector<std::string>{"a", "b"});
    Sigma ext = delayed_extend(base);
    CHECK(ext.n_pairs() == 4);
    CHECK(ext.query_name(2) == "#a");
    CHECK(ext.query_name(3) == "#b");
    LiteralSet raw = set(base, {"1", "a", "b*"}), prev = set(base, {"1", "a*", "b*"});
    LiteralSet obs = extend_observation(ext, raw, prev);
    CHECK(obs == set(ext, {"1", "a", "b*", "#a*", "#b*"}));
    CHECK(shift_to_delayed(ext, obs) == set(ext, {"1", "#a", "#b*"}));
    CHECK(shift_to_delayed(ext, set(ext, {"#a", "b"})) == set(ext, {"1", "#b"}));
    CHECK_THROWS(BuaAgent(Sigma(3), SnapshotKind::qualitative, 1, 0.1, 0));
}

TEST_CASE("one-step motion relations hold in the transition ground truth") {
    auto env = Environment::interval_gps(8);
    Sigma ext = delayed_extend(env.sigma());
    std::vector<LiteralSet> worlds;
    for (std::size_t p = 0; p < env.positions(); ++p)
        for (Move m : {Move::stay, Move::left, Move::right})
            worlds.push_back(extend_observation(ext, env.sense(env.apply(p, m)), env.sense(p)));
    Pcr g = pcr_from_worlds(ext, worlds);
    g.freeze();
    for (std::size_t j = 1; j < 8; ++j) {
        const std::string aj = "a" + std::to_string(j), ak = "a" + std::to_string(j + 1);
        CHECK(g.leq(lit(ext, "#" + aj), lit(ext, ak)));
        CHECK(g.leq(lit(ext, aj), lit(ext, "#" + ak)));
        CHECK(!g.leq(lit(ext, "#" + ak), lit(ext, aj)));
    }
}

TEST_CASE("agents learn only on their own branch") {
    auto env = Environment::interval_gps(5);
    Sigma ext = delayed_extend(env.sigma());
    BuaAgent agent(ext, SnapshotKind::qualitative, 1, 0.1, 0);
    auto rng = test::rng(70);
    std::size_t acted = 0, pos = 2;
    for (int t = 0; t < 300; ++t) {
        Move m = random_move(rng);
        std::size_t next = env.apply(pos, m);
        bool a = m == Move::right;
        acted += a;
        agent.learn(a, extend_observation(ext, env.sense(next), env.sense(pos)), next == 3 ? 0 : 1);
        pos = next;
    }
    CHECK(agent.snapshot(true).update_count() == acted);
    CHECK(agent.snapshot(false).update_count() == 300 - acted);
    LiteralSet obs = extend_observation(ext, env.sense(pos), env.sense(pos));
    auto as = agent.assess(obs);
    for (const auto* b : {&as.acted, &as.rested}) {
        CHECK(b->divergence == (b->minset - b->prediction).count());
        CHECK(b->current.test(kTrue));
        CHECK(b->prediction.test(kTrue));
    }
    CHECK(as.acted.current == coherent_projection(agent.derived(true), obs));
    CHECK(as.acted.prediction == coherent_projection(agent.derived(true), shift_to_delayed(ext, as.acted.current)));
}

TEST_CASE("ties and conflicts go to a coin") {
    auto env = Environment::interval_gps(4);
    Sigma ext = delayed_extend(env.sigma());
    BuaAgent fresh(ext, SnapshotKind::qualitative, 1, 0.1, 0);
    auto rng = test::rng(71);
    LiteralSet obs = extend_observation(ext, env.sense(1), env.sense(1));
    int acts = 0;
    for (int k = 0; k < 400; ++k) acts += fresh.decide(obs, rng);
    CHECK(acts > 150);
    CHECK(acts < 250);
    int right = 0;
    for (int k = 0; k < 400; ++k) {
        Move m = arbitrate(true, true, rng);
        CHECK(m != Move::stay);
        right += m == Move::right;
    }
    CHECK(right > 150);
    CHECK(right < 250);
    CHECK(arbitrate(true, false, rng) == Move::right);
    CHECK(arbitrate(false, true, rng) == Move::left);
    CHECK(arbitrate(false, false, rng) == Move::stay);
}

TEST_CASE("sniffy traces") {
    auto env = Environment::interval_gps(6);
    ValueSignal sig{SignalFamily::qual_dull, 3};
    SniffySettings st;
    st.steps = 400;
    st.training = 300;
    std::vector<SniffyRecord> recs;
    auto rng = test::rng(72);
    auto res = run_sniffy(env, sig, st, rng, [&](const SniffyRecord& r) { recs.push_back(r); });
    REQUIRE(recs.size() == 401);
    CHECK(recs[0].t == 0);
    CHECK(recs[0].pos == res.start_pos);
    long disp = 0;
    for (std::size_t t = 1; t < recs.size(); ++t) {
        const auto& r = recs[t];
        CHECK(r.t == t);
        CHECK(r.control == (t > 300));
        CHECK(r.pos == env.apply(recs[t - 1].pos, r.action));
        CHECK(r.dist == env.distance(r.pos, 3));
        CHECK(r.value == signal_value(env, sig, r.pos));
        if (r.control) disp += static_cast<long>(r.pos) - static_cast<long>(recs[t - 1].pos);
        CHECK(r.displacement == disp);
    }
    CHECK(res.control_pos == recs[300].pos);
    CHECK(res.final_record.t == 400);

    auto rng2 = test::rng(72);
    auto again = run_sniffy(env, sig, st, rng2);
    CHECK(again.final_record.pos == res.final_record.pos);
    CHECK(again.start_pos == res.start_pos);
}

TEST_CASE("sniffy settings are checked") {
    auto env = Environment::interval_gps(6);
    auto rng = test::rng(73);
    SniffySettings st;
    st.steps = 10;
    st.training = 20;
    CHECK_THROWS(run_sniffy(env, {SignalFamily::qual_dull, 1}, st, rng));
    st.training = 5;
    st.start = StartMode::antipode;
    CHECK_THROWS(run_sniffy(env, {SignalFamily::qual_dull, 1}, st, rng));
    st.start = StartMode::random;
    CHECK_THROWS(run_sniffy(env, {SignalFamily::real_dull, 1}, st, rng));
    CHECK(st.q_for(env) == doctest::Approx(1 - 1.0 / 7));
}

TEST_CASE("antipode starts") {
    auto env = Environment::circle_beacons(20);
    SniffySettings st;
    st.steps = 220;
    st.training = 200;
    st.start = StartMode::antipode;
    for (std::size_t target : {0u, 7u}) {
        auto rng = test::rng(74 + target);
        auto res = run_sniffy(env, {SignalFamily::qual_dull, target}, st, rng);
        CHECK(res.control_pos == (target + 10) % 20);
    }
}
