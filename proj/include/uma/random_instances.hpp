#pragma once

#include <cstddef>

#include "uma/environment.hpp"
#include "uma/ranking.hpp"

// Seeded generators for the verification suites and property tests.
namespace uma::gen {

Sigma sigma(std::size_t n_pairs);

LiteralSet complete(const Sigma& s, Rng& rng);
// each proper literal independently with probability p; never 0 or 1
LiteralSet subset(const Sigma& s, Rng& rng, double p);
// each member of base independently with probability p
LiteralSet sub_of(const LiteralSet& base, Rng& rng, double p);

// Random relations added one at a time, skipping any that would make the
// PCR degenerate. relations = 0 picks a count in [0, 2n].
Pcr relation_pcr(const Sigma& s, Rng& rng, std::size_t relations = 0);
// ab iff every one of `worlds` random complete selections containing a contains b
Pcr world_pcr(const Sigma& s, Rng& rng, std::size_t worlds = 0);
// either of the above, with a fair coin
Pcr nondegenerate_pcr(const Sigma& s, Rng& rng);

// values in [0, max_rank] with probability 1 - p_inf, infinite otherwise;
// at least one finite value
Ranking ranking(const Sigma& s, Rng& rng, Rank max_rank = 4, double p_inf = 0.3);

}  // namespace uma::gen
