#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "uma/bitset.hpp"
#include "uma/sigma.hpp"

namespace uma {

// A pointed complemented relation: a relation over Sigma containing 0a for
// every a and closed under ab -> b*a*. Reads after freeze() use the cached
// reflexive-transitive closure; before that they fall back to DFS, so const
// access never mutates and a frozen Pcr can be shared across threads.
class Pcr {
public:
    Pcr() = default;
    // The orthogonal PCR over sigma: only 0a and a1.
    explicit Pcr(Sigma sigma);

    const Sigma& sigma() const { return sigma_; }
    std::size_t size() const { return sigma_.size(); }

    // Adds ab and b*a*; invalidates the closure.
    void insert(Literal a, Literal b);
    bool contains(Literal a, Literal b) const { return adj_[a.id()].test(b); }
    const LiteralSet& successors(Literal a) const { return adj_[a.id()]; }
    // |G|, counting every stored pair
    std::size_t relation_count() const;

    void freeze();
    bool frozen() const { return fresh_; }

    bool leq(Literal a, Literal b) const;
    LiteralSet up(const LiteralSet& s) const;
    LiteralSet up(Literal a) const;
    LiteralSet down(const LiteralSet& s) const;
    LiteralSet down(Literal a) const;

    bool is_coherent(const LiteralSet& s) const;
    bool is_forward_closed(const LiteralSet& s) const;
    // member of C(G): coherent and forward-closed
    bool is_closed_coherent(const LiteralSet& s) const { return is_forward_closed(s) && is_coherent(s); }

    LiteralSet negligibles() const;
    bool is_degenerate() const;

    LiteralSet equivalence_class(Literal a) const;
    // strongly connected component id per literal, numbered from 0
    std::vector<std::uint32_t> component_ids() const;

    // Non-trivial generating relations (neither 0a nor a1, no loops), one
    // representative per contrapositive pair.
    std::vector<std::pair<Literal, Literal>> relations() const;

    friend bool operator==(const Pcr& a, const Pcr& b) { return a.sigma_ == b.sigma_ && a.adj_ == b.adj_; }

private:
    void check(Literal x) const;
    void check(const LiteralSet& s) const;
    void dfs_from(LiteralSet& visited, std::vector<Literal>& stack) const;

    Sigma sigma_;
    std::vector<LiteralSet> adj_;
    std::vector<LiteralSet> closure_;
    bool fresh_ = false;
};

}  // namespace uma
