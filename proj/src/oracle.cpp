#include "uma/oracle.hpp"

#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include "uma/projection.hpp"
#include "uma/qual_snapshot.hpp"
#include "uma/selection.hpp"

namespace uma::oracle {

void OracleReport::fail(std::string formula_side, std::string brute_side, std::string detail) {
    if (!match) return;  // keep the first counterexample
    match = false;
    formula = std::move(formula_side);
    brute_force = std::move(brute_side);
    counterexample = std::move(detail);
}

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// u ~ w iff no third vertex agrees with both wherever they agree
Adjacency flip_graph_impl(const DualSpace& dual) {
    const auto& vs = dual.vertices();
    const std::size_t n = vs.size();
    std::vector<std::uint64_t> mask(n);
    for (std::size_t i = 0; i < n; ++i) mask[i] = mask_of(dual.pcr().sigma(), vs[i]);
    Adjacency adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint64_t agree = ~(mask[i] ^ mask[j]);
            bool between = false;
            for (std::size_t k = 0; k < n && !between; ++k)
                between = k != i && k != j && ((mask[k] ^ mask[i]) & agree) == 0;
            if (!between) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    return adj;
}

std::vector<std::uint32_t> bfs(const Adjacency& adj, std::size_t src) {
    std::vector<std::uint32_t> d(adj.size(), kUnreached);
    std::deque<std::size_t> queue{src};
    d[src] = 0;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adj[v])
            if (d[w] == kUnreached) {
                d[w] = d[v] + 1;
                queue.push_back(w);
            }
    }
    return d;
}

std::string vertex_text(const DualSpace& dual, std::size_t i) { return dual.pcr().sigma().format(dual.vertex(i)); }

std::string index_list(const std::vector<std::size_t>& xs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << ']';
    return os.str();
}

std::vector<std::size_t> members(const VertexSet& s) {
    std::vector<std::size_t> out;
    s.for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

}  // namespace

std::vector<std::vector<bool>> naive_closure(const Pcr& p) {
    const std::size_t n = p.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::uint32_t a = 0; a < n; ++a) {
        leq[a][a] = true;
        for (std::uint32_t b = 0; b < n; ++b)
            if (p.contains(Literal{a}, Literal{b})) leq[a][b] = true;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (leq[a][b])
                    for (std::size_t c = 0; c < n; ++c)
                        if (leq[b][c] && !leq[a][c]) {
                            leq[a][c] = true;
                            changed = true;
                        }
    }
    return leq;
}

bool naive_coherent(const std::vector<std::vector<bool>>& leq, const LiteralSet& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b)
            if (s.test(Literal{static_cast<std::uint32_t>(a)}) && s.test(Literal{static_cast<std::uint32_t>(b)}) &&
                leq[a][b ^ 1u])
                return false;
    return true;
}

LiteralSet naive_up(const std::vector<std::vector<bool>>& leq, const LiteralSet& s) {
    LiteralSet out(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
        if (s.test(Literal{static_cast<std::uint32_t>(a)}))
            for (std::size_t b = 0; b < s.size(); ++b)
                if (leq[a][b]) out.set(Literal{static_cast<std::uint32_t>(b)});
    return out;
}

std::vector<LiteralSet> brute_dual(const Pcr& p) {
    auto leq = naive_closure(p);
    std::vector<LiteralSet> out;
    for (std::uint64_t m = 0; m < cube_size(p.sigma()); ++m) {
        LiteralSet u = complete_from_mask(p.sigma(), m);
        if (naive_coherent(leq, u)) out.push_back(std::move(u));
    }
    return out;
}

Adjacency flip_graph(const DualSpace& dual) { return flip_graph_impl(dual); }

HopTable hop_distances(const DualSpace& dual) { return hop_distances(flip_graph(dual)); }

HopTable hop_distances(const Adjacency& adj) {
    HopTable table;
    table.reserve(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) table.push_back(bfs(adj, i));
    return table;
}

std::size_t bfs_project(const DualSpace& dual, std::size_t u, const VertexSet& k) {
    if (k.none()) throw std::invalid_argument("bfs_project: empty target set");
    auto d = bfs(flip_graph(dual), u);
    std::uint32_t best = kUnreached;
    std::size_t arg = 0, ties = 0;
    k.for_each([&](std::size_t v) {
        if (d[v] < best) {
            best = d[v];
            arg = v;
            ties = 1;
        } else if (d[v] == best) {
            ++ties;
        }
    });
    if (best == kUnreached) throw NonUniqueProjection("bfs_project: target unreachable");
    if (ties != 1)
        throw NonUniqueProjection("bfs_project: " + std::to_string(ties) + " vertices at distance " +
                                  std::to_string(best) + " from " + vertex_text(dual, u));
    return arg;
}

std::vector<std::size_t> bfs_project_all(const DualSpace& dual, const VertexSet& k) {
    return bfs_project_all(dual, flip_graph(dual), k);
}

std::vector<std::size_t> bfs_project_all(const DualSpace& dual, const Adjacency& adj, const VertexSet& k) {
    if (k.none()) throw std::invalid_argument("bfs_project_all: empty target set");
    const std::size_t n = adj.size();
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::uint32_t> d(n, kUnreached);
    std::vector<std::size_t> label(n, kNone);
    std::deque<std::size_t> queue;
    k.for_each([&](std::size_t v) {
        d[v] = 0;
        label[v] = v;
        queue.push_back(v);
    });
    // A vertex with two nearest points has two BFS parents carrying different
    // labels, provided every closer vertex was labelled uniquely.
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adj[v]) {
            if (d[w] == kUnreached) {
                d[w] = d[v] + 1;
                label[w] = label[v];
                queue.push_back(w);
            } else if (d[w] == d[v] + 1 && label[w] != label[v]) {
                throw NonUniqueProjection("bfs_project_all: " + vertex_text(dual, w) + " is equidistant from " +
                                          vertex_text(dual, label[w]) + " and " + vertex_text(dual, label[v]));
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (label[v] == kNone) throw NonUniqueProjection("bfs_project_all: flip graph is disconnected");
    return label;
}

OracleReport check_median_axioms(const DualSpace& dual, Rng& rng, std::size_t convex_samples,
                                 std::size_t triple_samples) {
    OracleReport rep;
    rep.case_name = "median axioms, " + std::to_string(dual.size()) + " vertices";
    const std::size_t n = dual.size();
    if (n == 0) {
        rep.fail("-", "empty dual", "no vertices");
        return rep;
    }
    const auto adj = flip_graph(dual);
    const auto hops = hop_distances(adj);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (hops[i][j] == kUnreached) {
                rep.fail("connected", "disconnected", vertex_text(dual, i) + " / " + vertex_text(dual, j));
                return rep;
            }

    std::vector<VertexSet> interval(n * n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            VertexSet& s = interval[i * n + j];
            for (std::size_t x = 0; x < n; ++x)
                if (hops[i][x] + hops[x][j] == hops[i][j]) s.set(x);
            interval[j * n + i] = s;
        }
    const std::size_t words = interval.front().word_count();
    auto median_of = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t& count) {
        const std::uint64_t* a = interval[i * n + j].words();
        const std::uint64_t* b = interval[j * n + k].words();
        const std::uint64_t* c = interval[i * n + k].words();
        std::size_t first = n;
        count = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t m = a[w] & b[w] & c[w];
            if (m == 0) continue;
            if (first == n) first = 64 * w + static_cast<std::size_t>(std::countr_zero(m));
            count += static_cast<std::size_t>(std::popcount(m));
        }
        return first;
    };

    for (std::size_t i = 0; i < n && rep.match; ++i)
        for (std::size_t j = i; j < n && rep.match; ++j)
            for (std::size_t k = j; k < n; ++k) {
                std::size_t count = 0;
                std::size_t m = median_of(i, j, k, count);
                std::string triple = vertex_text(dual, i) + " " + vertex_text(dual, j) + " " + vertex_text(dual, k);
                if (count != 1) {
                    rep.fail("1 median", std::to_string(count) + " medians", triple);
                    break;
                }
                auto formula = dual.find(median(dual.vertex(i), dual.vertex(j), dual.vertex(k)));
                if (!formula || *formula != m) {
                    rep.fail(formula ? vertex_text(dual, *formula) : "not a vertex", vertex_text(dual, m), triple);
                    break;
                }
            }
    if (!rep.match) return rep;

    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::bernoulli_distribution keep(0.3);
    for (std::size_t s = 0; s < convex_samples; ++s) {
        // a nonempty halfspace intersection: literals of one vertex
        const LiteralSet& v = dual.vertex(pick(rng));
        LiteralSet t = dual.pcr().sigma().empty_set();
        v.for_each([&](Literal a) {
            if (keep(rng)) t.set(a);
        });
        VertexSet k(n);
        for (std::size_t x = 0; x < n; ++x)
            if (t.is_subset_of(dual.vertex(x))) k.set(x);
        std::vector<std::size_t> proj;
        try {
            proj = bfs_project_all(dual, adj, k);
        } catch (const NonUniqueProjection& e) {
            rep.fail("unique gate", "tie", e.what());
            return rep;
        }
        const std::string where = "K = <" + dual.pcr().sigma().format(t) + ">";
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (hops[proj[x]][proj[y]] > hops[x][y]) {
                    rep.fail("non-expanding", "expanding",
                             where + ", " + vertex_text(dual, x) + " " + vertex_text(dual, y));
                    return rep;
                }
        for (std::size_t r = 0; r < triple_samples; ++r) {
            std::size_t x = pick(rng), y = pick(rng), z = pick(rng), c = 0;
            std::size_t lhs = proj[median_of(x, y, z, c)];
            std::size_t rhs = median_of(proj[x], proj[y], proj[z], c);
            if (lhs != rhs) {
                rep.fail(vertex_text(dual, lhs), vertex_text(dual, rhs),
                         where + ", triple " + vertex_text(dual, x) + " " + vertex_text(dual, y) + " " +
                             vertex_text(dual, z));
                return rep;
            }
        }
    }
    return rep;
}

std::size_t brute_median(const HopTable& hops, std::size_t i, std::size_t j, std::size_t k, std::size_t& count) {
    const std::size_t n = hops.size();
    std::size_t first = n;
    count = 0;
    for (std::size_t x = 0; x < n; ++x)
        if (hops[i][x] + hops[x][j] == hops[i][j] && hops[j][x] + hops[x][k] == hops[j][k] &&
            hops[i][x] + hops[x][k] == hops[i][k]) {
            if (count++ == 0) first = x;
        }
    return first;
}

OracleReport ranking_min_hull(const Ranking& k) {
    QualSnapshot s = two_restriction(k);
    return ranking_min_hull(k, s.derived_pcr(), s.minset(0));
}

OracleReport ranking_min_hull(const Ranking& k, const Pcr& derived, const LiteralSet& minset) {
    OracleReport rep;
    rep.case_name = "minset plateau, " + std::to_string(k.sigma().n_pairs()) + " pairs";
    const Sigma& sigma = k.sigma();
    Ranking khat = completion(two_restriction(k));

    std::vector<std::uint64_t> f, fhat;
    for (std::uint64_t m = 0; m < k.values().size(); ++m) {
        if (k.at_mask(m) == k.global_min()) f.push_back(m);
        if (khat.at_mask(m) == khat.global_min()) fhat.push_back(m);
    }
    auto in = [](const std::vector<std::uint64_t>& xs, std::uint64_t m) {
        for (auto x : xs)
            if (x == m) return true;
        return false;
    };
    for (auto m : f)
        if (!in(fhat, m)) {
            rep.fail("F in F^", "missing", sigma.format(complete_from_mask(sigma, m)));
            return rep;
        }

    DualSpace dual = DualSpace::enumerate(derived);
    const std::size_t n = dual.size();
    VertexSet fhat_v(n), f_v(n), half(n);
    for (auto m : fhat) {
        auto i = dual.find(complete_from_mask(sigma, m));
        if (!i) {
            rep.fail("F^ in dual", "not a vertex", sigma.format(complete_from_mask(sigma, m)));
            return rep;
        }
        fhat_v.set(*i);
        if (in(f, m)) f_v.set(*i);
    }
    for (std::size_t x = 0; x < n; ++x)
        if (minset.is_subset_of(dual.vertex(x))) half.set(x);
    if (!(half == fhat_v)) {
        rep.fail("<M;G> = " + index_list(members(half)), "F^ = " + index_list(members(fhat_v)),
                 "M = " + sigma.format(minset));
        return rep;
    }

    // geodesic hull of F: close under intervals
    const auto hops = hop_distances(dual);
    VertexSet hull = f_v;
    for (bool grew = true; grew;) {
        grew = false;
        auto cur = members(hull);
        for (std::size_t a : cur)
            for (std::size_t b : cur)
                for (std::size_t x = 0; x < n; ++x)
                    if (!hull.test(x) && hops[a][x] + hops[x][b] == hops[a][b]) {
                        hull.set(x);
                        grew = true;
                    }
    }
    if (!(hull == fhat_v)) {
        rep.fail("F^ = " + index_list(members(fhat_v)), "hull(F) = " + index_list(members(hull)),
                 "M = " + sigma.format(minset));
        return rep;
    }
    rep.formula = "<M;G> with " + std::to_string(half.count()) + " vertices";
    rep.brute_force = "hull(F) with " + std::to_string(hull.count()) + " vertices";
    return rep;
}

StationaryResult stationary_distribution(const std::vector<std::vector<double>>& transition, double tolerance,
                                         std::size_t max_iterations) {
    const std::size_t n = transition.size();
    if (n == 0) throw std::invalid_argument("stationary_distribution: empty chain");
    for (const auto& row : transition)
        if (row.size() != n) throw std::invalid_argument("stationary_distribution: matrix is not square");
    StationaryResult r;
    r.distribution.assign(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    for (r.iterations = 1; r.iterations <= max_iterations; ++r.iterations) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) next[j] += r.distribution[i] * transition[i][j];
        double sum = 0.0;
        for (double x : next) sum += x;
        r.residual = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            next[j] /= sum;
            r.residual += std::abs(next[j] - r.distribution[j]);
        }
        r.distribution.swap(next);
        if (r.residual < tolerance) return r;
    }
    throw std::runtime_error("stationary_distribution: no convergence after " + std::to_string(max_iterations) +
                             " iterations");
}

StationaryResult stationary_distribution(const Environment& env) {
    return stationary_distribution(env.lazy_transition());
}

}  // namespace uma::oracle
