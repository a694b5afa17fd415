#include "uma/pcr.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace uma {

Pcr::Pcr(Sigma sigma) : sigma_(std::move(sigma)), adj_(sigma_.size(), LiteralSet(sigma_.size())) {
    for (std::uint32_t a = 0; a < sigma_.size(); ++a) {
        adj_[kFalse.id()].set(Literal{a});
        adj_[a].set(kTrue);
    }
}

void Pcr::check(Literal x) const {
    if (!sigma_.valid(x)) throw std::out_of_range("literal index out of range for this PCR");
}

void Pcr::check(const LiteralSet& s) const {
    if (s.size() != sigma_.size()) throw std::invalid_argument("literal set width does not match PCR");
}

void Pcr::insert(Literal a, Literal b) {
    check(a);
    check(b);
    adj_[a.id()].set(b);
    adj_[complement(b).id()].set(complement(a));
    fresh_ = false;
}

std::size_t Pcr::relation_count() const {
    std::size_t total = 0;
    for (const auto& row : adj_) total += row.count();
    return total;
}

void Pcr::freeze() {
    if (fresh_) return;
    closure_ = adj_;
    const std::size_t n = sigma_.size();
    for (std::uint32_t i = 0; i < n; ++i) closure_[i].set(Literal{i});
    const auto& k = simd::kernels();
    const std::size_t words = closure_.empty() ? 0 : closure_[0].word_count();
    for (std::uint32_t mid = 0; mid < n; ++mid) {
        const std::uint64_t* via = closure_[mid].words();
        for (std::uint32_t i = 0; i < n; ++i)
            if (i != mid && closure_[i].test(Literal{mid})) k.or_into(closure_[i].words(), via, words);
    }
    fresh_ = true;
}

void Pcr::dfs_from(LiteralSet& visited, std::vector<Literal>& stack) const {
    while (!stack.empty()) {
        Literal x = stack.back();
        stack.pop_back();
        adj_[x.id()].for_each([&](Literal y) {
            if (!visited.test(y)) {
                visited.set(y);
                stack.push_back(y);
            }
        });
    }
}

bool Pcr::leq(Literal a, Literal b) const {
    check(a);
    check(b);
    if (fresh_) return closure_[a.id()].test(b);
    if (a == b) return true;
    return up(a).test(b);
}

LiteralSet Pcr::up(const LiteralSet& s) const {
    check(s);
    if (fresh_) {
        LiteralSet out(size());
        s.for_each([&](Literal a) { out |= closure_[a.id()]; });
        return out;
    }
    LiteralSet visited = s;
    std::vector<Literal> stack = s.members();
    dfs_from(visited, stack);
    return visited;
}

LiteralSet Pcr::up(Literal a) const {
    check(a);
    if (fresh_) return closure_[a.id()];
    LiteralSet s(size());
    s.set(a);
    return up(s);
}

LiteralSet Pcr::down(const LiteralSet& s) const { return starred(up(starred(s))); }

LiteralSet Pcr::down(Literal a) const { return starred(up(complement(a))); }

bool Pcr::is_coherent(const LiteralSet& s) const { return !up(s).intersects(starred(s)); }

bool Pcr::is_forward_closed(const LiteralSet& s) const { return up(s) == s; }

LiteralSet Pcr::negligibles() const {
    LiteralSet out(size());
    for (std::uint32_t a = 0; a < size(); ++a)
        if (leq(Literal{a}, complement(Literal{a}))) out.set(Literal{a});
    return out;
}

bool Pcr::is_degenerate() const {
    LiteralSet n = negligibles();
    return n.intersects(starred(n));
}

std::vector<std::uint32_t> Pcr::component_ids() const {
    // iterative Tarjan
    const std::size_t n = size();
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, unset), low(n, 0), comp(n, unset);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> scc_stack;
    std::vector<std::pair<std::uint32_t, std::vector<Literal>>> call;
    std::uint32_t counter = 0, next_comp = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        auto visit = [&](std::uint32_t v) {
            index[v] = low[v] = counter++;
            scc_stack.push_back(v);
            on_stack[v] = true;
            auto succ = adj_[v].members();
            std::reverse(succ.begin(), succ.end());
            call.emplace_back(v, std::move(succ));
        };
        visit(root);
        while (!call.empty()) {
            auto& [v, pending] = call.back();
            if (!pending.empty()) {
                std::uint32_t w = pending.back().id();
                pending.pop_back();
                if (index[w] == unset) {
                    visit(w);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            std::uint32_t done = v;
            call.pop_back();
            if (low[done] == index[done]) {
                std::uint32_t w;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                } while (w != done);
                ++next_comp;
            }
            if (!call.empty()) {
                auto parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
    return comp;
}

LiteralSet Pcr::equivalence_class(Literal a) const {
    check(a);
    auto comp = component_ids();
    LiteralSet out(size());
    for (std::uint32_t b = 0; b < size(); ++b)
        if (comp[b] == comp[a.id()]) out.set(Literal{b});
    return out;
}

std::vector<std::pair<Literal, Literal>> Pcr::relations() const {
    std::vector<std::pair<Literal, Literal>> out;
    for (std::uint32_t i = 0; i < size(); ++i) {
        Literal a{i};
        if (a == kFalse) continue;
        adj_[i].for_each([&](Literal b) {
            if (b == kTrue || b == a) return;
            Literal ca = complement(b), cb = complement(a);
            if (std::pair{a.id(), b.id()} <= std::pair{ca.id(), cb.id()}) out.emplace_back(a, b);
        });
    }
    return out;
}

}  // namespace uma
