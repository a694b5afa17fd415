#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "uma/dual_space.hpp"
#include "uma/environment.hpp"
#include "uma/ranking.hpp"

// Brute-force references. Everything here works on explicit vertex lists and
// hop distances and never calls the closed-form geometry it is checked against.
namespace uma::oracle {

struct OracleReport {
    std::string case_name;
    std::string formula;
    std::string brute_force;
    bool match = true;
    std::string counterexample;

    void fail(std::string formula_side, std::string brute_side, std::string detail);
};

// thrown when a hop-distance minimizer is not unique
class NonUniqueProjection : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// reachability by repeated relaxation over the stored relation
std::vector<std::vector<bool>> naive_closure(const Pcr& p);
bool naive_coherent(const std::vector<std::vector<bool>>& leq, const LiteralSet& s);
LiteralSet naive_up(const std::vector<std::vector<bool>>& leq, const LiteralSet& s);
// every complete selection that is coherent, in cube-mask order
std::vector<LiteralSet> brute_dual(const Pcr& p);

// Vertices u, w are adjacent iff no third vertex contains u n w.
using Adjacency = std::vector<std::vector<std::size_t>>;
Adjacency flip_graph(const DualSpace& dual);

// all-pairs hop distances in the flip graph, by BFS from every vertex
using HopTable = std::vector<std::vector<std::uint32_t>>;
HopTable hop_distances(const DualSpace& dual);
HopTable hop_distances(const Adjacency& adj);

// The unique vertex of K nearest to vertex u. Throws std::invalid_argument for
// empty K and NonUniqueProjection when the minimum is attained twice.
std::size_t bfs_project(const DualSpace& dual, std::size_t u, const VertexSet& k);
// Nearest point of K for every vertex, by one multi-source BFS.
std::vector<std::size_t> bfs_project_all(const DualSpace& dual, const VertexSet& k);
std::vector<std::size_t> bfs_project_all(const DualSpace& dual, const Adjacency& adj, const VertexSet& k);

// Exhaustive triple check: exactly one vertex on all three pairwise
// intervals, and it equals the majority formula. Then, for convex_samples
// random halfspace intersections, the BFS projection must preserve sampled
// medians and never increase hop distance.
OracleReport check_median_axioms(const DualSpace& dual, Rng& rng, std::size_t convex_samples = 8,
                                 std::size_t triple_samples = 64);
std::size_t brute_median(const HopTable& hops, std::size_t i, std::size_t j, std::size_t k, std::size_t& count);

// Global minima F of k, global minima F^ of its completion, the derived PCR G
// and minset M of k's 2-restriction: checks F in F^, F^ in the dual of G,
// F^ = <M;G> and F^ = hull(F).
OracleReport ranking_min_hull(const Ranking& k);
OracleReport ranking_min_hull(const Ranking& k, const Pcr& derived, const LiteralSet& minset);

struct StationaryResult {
    std::vector<double> distribution;
    std::size_t iterations = 0;
    double residual = 0.0;
};

// Power iteration pi <- pi P from the uniform start until the L1 residual is
// below tolerance. Throws std::runtime_error past max_iterations.
StationaryResult stationary_distribution(const std::vector<std::vector<double>>& transition,
                                         double tolerance = 1e-12, std::size_t max_iterations = 1000000);
StationaryResult stationary_distribution(const Environment& env);

}  // namespace uma::oracle
