#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uma/pcr.hpp"
#include "uma/quotient.hpp"

namespace uma {

// The set of maximal coherent selections of a non-degenerate PCR, with the
// median-graph structure induced by single class flips. Oracle scale only.
class DualSpace {
public:
    static constexpr std::size_t kDefaultCap = 14;

    // Throws std::invalid_argument for degenerate input or n_pairs > cap.
    static DualSpace enumerate(const Pcr& p, std::size_t cap = kDefaultCap);
    // Unchecked vertex list, for corrupted-input controls in the oracle.
    static DualSpace from_vertices(const Pcr& p, std::vector<LiteralSet> vertices);

    const Pcr& pcr() const { return pcr_; }
    const PocQuotient& quotient() const { return quotient_; }

    std::size_t size() const { return vertices_.size(); }
    const LiteralSet& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::vector<LiteralSet>& vertices() const { return vertices_; }
    std::optional<std::size_t> find(const LiteralSet& u) const;
    std::size_t index_of(const LiteralSet& u) const;

    // quotient Hamming distance: classes in u that are not in w
    std::size_t distance(std::size_t i, std::size_t j) const;
    // raw literal count |u \ w|
    std::size_t raw_distance(std::size_t i, std::size_t j) const;
    std::vector<std::size_t> neighbors(std::size_t i) const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    VertexSet no_vertices() const { return VertexSet(size()); }
    VertexSet all_vertices() const;
    VertexSet halfspace(const LiteralSet& s) const;
    VertexSet interval(std::size_t i, std::size_t j) const;
    // literals a with K inside <a>; throws for empty K
    LiteralSet sharp(const VertexSet& k) const;
    VertexSet convex_hull(const VertexSet& k) const;
    LiteralSet separator(const VertexSet& k, const VertexSet& l) const;
    // number of quotient classes met by s
    std::size_t class_count(const LiteralSet& s) const;

private:
    DualSpace(const Pcr& p, std::vector<LiteralSet> vertices);

    Pcr pcr_;
    PocQuotient quotient_;
    std::vector<LiteralSet> vertices_;
    std::vector<LiteralSet> projected_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace uma
