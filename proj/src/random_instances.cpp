#include "uma/random_instances.hpp"

#include "uma/selection.hpp"

namespace uma::gen {

Sigma sigma(std::size_t n_pairs) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n_pairs; ++i) names.push_back(std::string(1, static_cast<char>('a' + i % 26)) +
                                                             (i < 26 ? "" : std::to_string(i / 26)));
    return Sigma(std::move(names));
}

LiteralSet complete(const Sigma& s, Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> d(0, cube_size(s) - 1);
    return complete_from_mask(s, d(rng));
}

LiteralSet subset(const Sigma& s, Rng& rng, double p) {
    std::bernoulli_distribution coin(p);
    LiteralSet out = s.empty_set();
    for (std::uint32_t a = 2; a < s.size(); ++a)
        if (coin(rng)) out.set(Literal{a});
    return out;
}

LiteralSet sub_of(const LiteralSet& base, Rng& rng, double p) {
    std::bernoulli_distribution coin(p);
    LiteralSet out(base.size());
    base.for_each([&](Literal a) {
        if (coin(rng)) out.set(a);
    });
    return out;
}

Pcr relation_pcr(const Sigma& s, Rng& rng, std::size_t relations) {
    const std::size_t n = s.n_pairs();
    if (relations == 0 && n > 0) relations = std::uniform_int_distribution<std::size_t>(0, 2 * n)(rng);
    Pcr p(s);
    if (n == 0) return p;
    std::uniform_int_distribution<std::uint32_t> lit(2, static_cast<std::uint32_t>(s.size() - 1));
    for (std::size_t k = 0; k < relations; ++k) {
        Literal a{lit(rng)}, b{lit(rng)};
        if (a == b) continue;
        Pcr next = p;
        next.insert(a, b);
        if (!next.is_degenerate()) p = std::move(next);
    }
    return p;
}

Pcr world_pcr(const Sigma& s, Rng& rng, std::size_t worlds) {
    if (worlds == 0) worlds = std::uniform_int_distribution<std::size_t>(1, 2 * s.n_pairs() + 2)(rng);
    std::vector<LiteralSet> ws;
    for (std::size_t i = 0; i < worlds; ++i) ws.push_back(complete(s, rng));
    return pcr_from_worlds(s, ws);
}

Pcr nondegenerate_pcr(const Sigma& s, Rng& rng) {
    return std::bernoulli_distribution(0.5)(rng) ? relation_pcr(s, rng) : world_pcr(s, rng);
}

Ranking ranking(const Sigma& s, Rng& rng, Rank max_rank, double p_inf) {
    std::uniform_int_distribution<Rank> value(0, max_rank);
    std::bernoulli_distribution inf(p_inf);
    std::vector<Rank> vs(cube_size(s));
    bool finite = false;
    for (auto& v : vs) {
        v = inf(rng) ? kInfiniteRank : value(rng);
        finite |= v != kInfiniteRank;
    }
    if (!finite) vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)] = value(rng);
    return Ranking(s, std::move(vs));
}

}  // namespace uma::gen
