#include "uma/dual_space.hpp"

#include <stdexcept>
#include <string>

#include "uma/selection.hpp"

namespace uma {
namespace {

Pcr frozen_copy(const Pcr& p) {
    Pcr copy = p;
    copy.freeze();
    return copy;
}

void extend(const Pcr& p, std::size_t pair, LiteralSet& chosen, const LiteralSet& reach,
            std::vector<LiteralSet>& out) {
    const auto& sigma = p.sigma();
    if (pair == sigma.n_pairs()) {
        out.push_back(chosen);
        return;
    }
    for (Literal x : {sigma.positive(pair), sigma.negative(pair)}) {
        if (reach.test(complement(x))) continue;
        LiteralSet next_reach = reach | p.up(x);
        chosen.set(x);
        if (!next_reach.intersects(starred(chosen))) extend(p, pair + 1, chosen, next_reach, out);
        chosen.reset(x);
    }
}

}  // namespace

DualSpace::DualSpace(const Pcr& p, std::vector<LiteralSet> vertices)
    : pcr_(frozen_copy(p)), quotient_(canonical_quotient(pcr_)), vertices_(std::move(vertices)) {
    projected_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        projected_.push_back(quotient_.project(vertices_[i]));
        index_.emplace(mask_of(pcr_.sigma(), vertices_[i]), i);
    }
}

DualSpace DualSpace::enumerate(const Pcr& p, std::size_t cap) {
    if (p.sigma().n_pairs() > cap)
        throw std::invalid_argument("dual enumeration is limited to " + std::to_string(cap) + " pairs");
    if (p.is_degenerate()) throw std::invalid_argument("dual enumeration: degenerate PCR");
    Pcr frozen = frozen_copy(p);
    std::vector<LiteralSet> out;
    LiteralSet chosen = frozen.sigma().empty_set();
    chosen.set(kTrue);
    extend(frozen, 0, chosen, frozen.up(kTrue), out);
    return DualSpace(frozen, std::move(out));
}

DualSpace DualSpace::from_vertices(const Pcr& p, std::vector<LiteralSet> vertices) {
    return DualSpace(p, std::move(vertices));
}

std::optional<std::size_t> DualSpace::find(const LiteralSet& u) const {
    if (u.size() != pcr_.size()) return std::nullopt;
    auto it = index_.find(mask_of(pcr_.sigma(), u));
    if (it == index_.end() || !(vertices_[it->second] == u)) return std::nullopt;
    return it->second;
}

std::size_t DualSpace::index_of(const LiteralSet& u) const {
    auto i = find(u);
    if (!i) throw std::invalid_argument("selection is not a vertex of this dual");
    return *i;
}

std::size_t DualSpace::distance(std::size_t i, std::size_t j) const {
    return (projected_.at(i) - projected_.at(j)).count();
}

std::size_t DualSpace::raw_distance(std::size_t i, std::size_t j) const {
    return hamming_distance(vertices_.at(i), vertices_.at(j));
}

std::vector<std::size_t> DualSpace::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    const LiteralSet& u = vertices_.at(i);
    const auto& qs = quotient_.quotient.sigma();
    for (std::size_t c = 0; c < qs.n_pairs(); ++c) {
        const LiteralSet& pos = quotient_.classes[qs.positive(c).id()];
        const LiteralSet& neg = quotient_.classes[qs.negative(c).id()];
        LiteralSet w = pos.is_subset_of(u) ? (u - pos) | neg : (u - neg) | pos;
        if (auto j = find(w)) out.push_back(*j);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> DualSpace::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (auto j : neighbors(i))
            if (i < j) out.emplace_back(i, j);
    return out;
}

VertexSet DualSpace::all_vertices() const {
    VertexSet all(size());
    all.fill();
    return all;
}

VertexSet DualSpace::halfspace(const LiteralSet& s) const {
    VertexSet out(size());
    for (std::size_t i = 0; i < size(); ++i)
        if (s.is_subset_of(vertices_[i])) out.set(i);
    return out;
}

VertexSet DualSpace::interval(std::size_t i, std::size_t j) const {
    return halfspace(vertices_.at(i) & vertices_.at(j));
}

LiteralSet DualSpace::sharp(const VertexSet& k) const {
    if (k.none()) throw std::invalid_argument("sharp: empty vertex set");
    LiteralSet out = pcr_.sigma().all();
    k.for_each([&](std::size_t i) { out &= vertices_[i]; });
    return out;
}

VertexSet DualSpace::convex_hull(const VertexSet& k) const { return halfspace(sharp(k)); }

LiteralSet DualSpace::separator(const VertexSet& k, const VertexSet& l) const {
    return sharp(k) & starred(sharp(l));
}

std::size_t DualSpace::class_count(const LiteralSet& s) const { return quotient_.project(s).count(); }

}  // namespace uma
