#include "uma/propagation.hpp"

#include <stdexcept>
#include <vector>

#include "uma/selection.hpp"

namespace uma {
namespace {

void sweep(const Pcr& p, const LiteralSet& seeds, LiteralSet& visited, std::vector<Literal>& stack,
           PropagationStats& stats) {
    seeds.for_each([&](Literal a) {
        if (visited.test(a)) return;
        visited.set(a);
        stack.push_back(a);
        while (!stack.empty()) {
            Literal x = stack.back();
            stack.pop_back();
            ++stats.literals_visited;
            p.successors(x).for_each([&](Literal y) {
                ++stats.edges_touched;
                if (!visited.test(y)) {
                    visited.set(y);
                    stack.push_back(y);
                }
            });
        }
    });
}

LiteralSet run(const Pcr& p, const LiteralSet& s, const LiteralSet& t, PropagationStats* stats) {
    if (s.size() != p.size() || t.size() != p.size())
        throw std::invalid_argument("propagate: literal set width does not match PCR");
    PropagationStats local;
    LiteralSet visited(p.size());
    std::vector<Literal> stack;
    stack.reserve(p.size());
    sweep(p, t, visited, stack, local);
    LiteralSet forbidden = starred(visited);
    sweep(p, s, visited, stack, local);
    visited -= forbidden;
    if (stats) *stats = local;
    return visited;
}

}  // namespace

LoadedPcr::LoadedPcr(const Pcr& p, LiteralSet load) : pcr_(&p), load_(std::move(load)) {
    if (!p.is_coherent(load_)) throw std::invalid_argument("propagate: load is incoherent");
}

LiteralSet LoadedPcr::propagate(const LiteralSet& t, PropagationStats* stats) const {
    return run(*pcr_, load_, t, stats);
}

LiteralSet coherent_projection(const Pcr& p, const LiteralSet& t) { return run(p, p.sigma().empty_set(), t, nullptr); }

LiteralSet propagate(const Pcr& p, const LiteralSet& s, const LiteralSet& t, PropagationStats* stats) {
    return LoadedPcr(p, s).propagate(t, stats);
}

LiteralSet belief_update(const Pcr& p, const LiteralSet& observation) {
    if (!is_complete(p.sigma(), observation))
        throw std::invalid_argument("belief_update: observation is not a complete selection");
    return coherent_projection(p, observation);
}

}  // namespace uma
