#include "uma/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "uma/projection.hpp"
#include "uma/propagation.hpp"
#include "uma/qual_snapshot.hpp"
#include "uma/quotient.hpp"
#include "uma/random_instances.hpp"
#include "uma/real_snapshot.hpp"
#include "uma/selection.hpp"

namespace uma::suites {

std::string_view to_string(Fault f) {
    switch (f) {
        case Fault::none:
            return "none";
        case Fault::propagation:
            return "propagation";
        case Fault::median:
            return "median";
        case Fault::projection:
            return "projection";
        case Fault::quotient:
            return "quotient";
        case Fault::minset:
            return "minset";
        case Fault::weights:
            return "weights";
    }
    return "?";
}

std::optional<Fault> parse_fault(std::string_view text) {
    for (Fault f : {Fault::none, Fault::propagation, Fault::median, Fault::projection, Fault::quotient, Fault::minset,
                    Fault::weights})
        if (text == to_string(f)) return f;
    return std::nullopt;
}

namespace {

constexpr std::size_t kKeep = 5;

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

Rng suite_rng(const Options& o, std::uint32_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32), salt};
    std::array<std::uint32_t, 2> w{};
    seq.generate(w.begin(), w.end());
    return Rng((std::uint64_t{w[0]} << 32) | w[1]);
}

void record(Result& r, oracle::OracleReport rep) {
    ++r.cases;
    if (rep.match) return;
    ++r.failures;
    if (r.counterexamples.size() < kKeep) r.counterexamples.push_back(std::move(rep));
}

std::size_t pick_pairs(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string describe_pcr(const Pcr& p) {
    std::string out = "pairs=" + std::to_string(p.sigma().n_pairs()) + " relations={";
    bool first = true;
    for (auto [a, b] : p.relations()) {
        out += (first ? "" : ",") + p.sigma().name(a) + "<" + p.sigma().name(b);
        first = false;
    }
    return out + "}";
}

std::string case_tag(std::uint64_t seed, const Pcr& p) {
    return "case seed=" + std::to_string(seed) + " " + describe_pcr(p);
}

VertexSet brute_halfspace(const std::vector<LiteralSet>& vs, const LiteralSet& s) {
    VertexSet out(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (s.is_subset_of(vs[i])) out.set(i);
    return out;
}

std::string vertex_list(const std::vector<LiteralSet>& vs, const VertexSet& k, const Sigma& sigma) {
    std::string out = "{";
    bool first = true;
    k.for_each([&](std::size_t i) {
        out += (first ? "" : " ") + sigma.format(vs[i]);
        first = false;
    });
    return out + "}";
}

// drops one proper literal, or adds one when there is none
LiteralSet corrupt(const Sigma& sigma, LiteralSet s) {
    for (std::uint32_t a = 2; a < sigma.size(); ++a)
        if (s.test(Literal{a})) {
            s.reset(Literal{a});
            return s;
        }
    if (sigma.n_pairs() > 0) s.set(sigma.positive(0));
    return s;
}

}  // namespace

Result propagation(const Options& o) {
    Result r{"propagation", 0, 0, 0.0, 0.0, {}};
    Timer timer;
    Rng rng = suite_rng(o, 1);
    const std::size_t pcrs = o.quick ? 60 : 500;
    const std::size_t loads = 4;
    for (std::size_t c = 0; c < pcrs; ++c) {
        const std::uint64_t seed = rng();
        Rng crng(seed);
        Sigma sigma = gen::sigma(pick_pairs(crng, 1, 10));
        Pcr p = gen::nondegenerate_pcr(sigma, crng);
        DualSpace dual = DualSpace::enumerate(p);
        const auto& vs = dual.vertices();
        auto adj = oracle::flip_graph(dual);
        std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
        oracle::OracleReport rep;
        rep.case_name = "propagation";
        for (std::size_t l = 0; l < loads && rep.match; ++l) {
            LiteralSet s = gen::sub_of(vs[pick(crng)], crng, 0.3);
            LiteralSet t = gen::sub_of(vs[pick(crng)], crng, 0.3);
            LiteralSet base = propagate(p, s, t);
            if (o.fault == Fault::propagation) base = corrupt(sigma, base);
            VertexSet formula = brute_halfspace(vs, base);
            VertexSet from = brute_halfspace(vs, s), onto = brute_halfspace(vs, t);
            VertexSet brute(vs.size());
            try {
                auto proj = oracle::bfs_project_all(dual, adj, onto);
                from.for_each([&](std::size_t u) { brute.set(proj[u]); });
            } catch (const oracle::NonUniqueProjection& e) {
                rep.fail("<" + sigma.format(base) + ">", e.what(), case_tag(seed, p));
                break;
            }
            if (!(formula == brute))
                rep.fail("<" + sigma.format(base) + "> = " + vertex_list(vs, formula, sigma),
                         vertex_list(vs, brute, sigma),
                         case_tag(seed, p) + " S=" + sigma.format(s) + " T=" + sigma.format(t));
        }
        record(r, std::move(rep));
    }
    r.seconds = timer.seconds();
    return r;
}

namespace {

// a vertex that is the median of three of its distinct neighbours, or none
std::optional<std::size_t> removable_median(const DualSpace& dual) {
    for (std::size_t m = 0; m < dual.size(); ++m) {
        auto nb = dual.neighbors(m);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (median(dual.vertex(nb[i]), dual.vertex(nb[j]), dual.vertex(nb[k])) == dual.vertex(m))
                        return m;
    }
    return std::nullopt;
}

}  // namespace

Result median_helly(const Options& o) {
    Result r{"median-helly", 0, 0, 0.0, 0.0, {}};
    Timer timer;
    Rng rng = suite_rng(o, 2);
    const std::size_t duals = o.quick ? 30 : 200;
    for (std::size_t c = 0; c < duals; ++c) {
        const std::uint64_t seed = rng();
        Rng crng(seed);
        Sigma sigma = gen::sigma(pick_pairs(crng, 1, 8));
        Pcr p = gen::nondegenerate_pcr(sigma, crng);
        DualSpace dual = DualSpace::enumerate(p);
        if (o.fault == Fault::median) {
            if (auto m = removable_median(dual)) {
                auto vs = dual.vertices();
                vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(*m));
                dual = DualSpace::from_vertices(p, std::move(vs));
            }
        }
        auto rep = oracle::check_median_axioms(dual, crng, 4, 32);
        if (!rep.match) rep.counterexample = case_tag(seed, p) + "; " + rep.counterexample;
        record(r, std::move(rep));
    }

    const std::size_t triples = o.quick ? 100 : 1000;
    for (std::size_t c = 0; c < triples; ++c) {
        const std::uint64_t seed = rng();
        Rng crng(seed);
        Sigma sigma = gen::sigma(pick_pairs(crng, 2, 8));
        Pcr p = gen::nondegenerate_pcr(sigma, crng);
        auto vs = oracle::brute_dual(p);
        std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
        LiteralSet sets[3];
        VertexSet half[3];
        for (int i = 0; i < 3; ++i) {
            sets[i] = gen::sub_of(vs[pick(crng)], crng, 0.25);
            half[i] = brute_halfspace(vs, sets[i]);
        }
        oracle::OracleReport rep;
        rep.case_name = "helly";
        bool pairwise = true;
        for (int i = 0; i < 3; ++i) {
            const LiteralSet& x = sets[i];
            const LiteralSet& y = sets[(i + 1) % 3];
            bool formula = p.is_coherent(x | y);
            bool brute = (half[i] & half[(i + 1) % 3]).any();
            pairwise = pairwise && brute;
            if (formula != brute)
                rep.fail(formula ? "coherent union" : "incoherent union", brute ? "meet" : "disjoint",
                         case_tag(seed, p) + " A=" + sigma.format(x) + " B=" + sigma.format(y));
        }
        VertexSet all3 = half[0] & half[1] & half[2];
        if (pairwise && all3.none())
            rep.fail("pairwise meeting halfspaces share a vertex", "empty triple intersection",
                     case_tag(seed, p) + " A=" + sigma.format(sets[0]) + " B=" + sigma.format(sets[1]) +
                         " C=" + sigma.format(sets[2]));
        record(r, std::move(rep));
    }
    r.seconds = timer.seconds();
    return r;
}

Result coherent_projection(const Options& o) {
    Result r{"coherent-projection", 0, 0, 0.0, 0.0, {}};
    Timer timer;
    Rng rng = suite_rng(o, 3);
    const std::size_t instances = o.quick ? 100 : 1000;
    for (std::size_t c = 0; c < instances; ++c) {
        const std::uint64_t seed = rng();
        Rng crng(seed);
        Sigma sigma = gen::sigma(pick_pairs(crng, 1, 8));
        Pcr p = gen::nondegenerate_pcr(sigma, crng);
        auto leq = oracle::naive_closure(p);
        auto vs = oracle::brute_dual(p);
        auto coh = [&](const LiteralSet& a) {
            LiteralSet out = coherent_projection(p, a);
            if (o.fault == Fault::projection) out = p.up(a);
            return out;
        };
        oracle::OracleReport rep;
        rep.case_name = "coherent projection";
        const std::string tag = case_tag(seed, p);

        LiteralSet a = gen::subset(sigma, crng, 0.4);
        if (std::bernoulli_distribution(0.5)(crng)) a.set(kTrue);
        LiteralSet ca = coh(a);
        if (!oracle::naive_coherent(leq, ca) || !(oracle::naive_up(leq, ca) == ca))
            rep.fail("coh(A) = " + sigma.format(ca), "not closed and coherent", tag + " A=" + sigma.format(a));
        if (!(coh(ca) == ca))
            rep.fail("coh(coh(A)) = " + sigma.format(coh(ca)), "coh(A) = " + sigma.format(ca),
                     tag + " A=" + sigma.format(a));
        if (oracle::naive_coherent(leq, a) && !a.is_subset_of(ca))
            rep.fail("coh(A) = " + sigma.format(ca), "coherent A not contained", tag + " A=" + sigma.format(a));

        LiteralSet closed = oracle::naive_up(leq, gen::sub_of(vs[crng() % vs.size()], crng, 0.3));
        for (const LiteralSet& x : {a, closed}) {
            bool fixed = coh(x) == x;
            bool brute = oracle::naive_coherent(leq, x) && oracle::naive_up(leq, x) == x;
            if (fixed != brute)
                rep.fail(fixed ? "fixed point" : "moved", brute ? "closed and coherent" : "not closed and coherent",
                         tag + " A=" + sigma.format(x));
        }

        LiteralSet u = gen::complete(sigma, crng);
        LiteralSet cu = coh(u);
        std::size_t best = sigma.size();
        for (const auto& v : vs) best = std::min(best, hamming_distance(u, v));
        for (const auto& v : vs)
            if (hamming_distance(u, v) == best && !cu.is_subset_of(v))
                rep.fail("nearest vertices inside <" + sigma.format(cu) + ">", "nearest " + sigma.format(v),
                         tag + " u=" + sigma.format(u));
        record(r, std::move(rep));
    }
    r.seconds = timer.seconds();
    return r;
}

Result quotient_duality(const Options& o) {
    Result r{"quotient-duality", 0, 0, 0.0, 0.0, {}};
    Timer timer;
    Rng rng = suite_rng(o, 4);
    const std::size_t pcrs = o.quick ? 30 : 200;
    for (std::size_t c = 0; c < pcrs; ++c) {
        const std::uint64_t seed = rng();
        Rng crng(seed);
        Sigma sigma = gen::sigma(pick_pairs(crng, 1, 8));
        Pcr p = gen::relation_pcr(sigma, crng, pick_pairs(crng, 0, 3 * sigma.n_pairs()));
        PocQuotient q = canonical_quotient(p);
        auto project = [&](const LiteralSet& u) {
            LiteralSet out = q.project(u);
            if (o.fault == Fault::quotient && q.quotient.sigma().n_pairs() > 0) {
                out.reset(q.quotient.sigma().negative(0));
                out.set(q.quotient.sigma().positive(0));
            }
            return out;
        };
        auto d1 = oracle::brute_dual(p);
        auto d2 = oracle::brute_dual(q.quotient);
        oracle::OracleReport rep;
        rep.case_name = "quotient duality";
        const std::string tag = case_tag(seed, p);
        if (d1.size() != d2.size()) {
            rep.fail(std::to_string(d1.size()) + " vertices", std::to_string(d2.size()) + " quotient vertices", tag);
        } else {
            std::vector<bool> hit(d2.size(), false);
            const Sigma& qs = q.quotient.sigma();
            for (const auto& u : d1) {
                LiteralSet image = project(u);
                std::size_t j = 0;
                while (j < d2.size() && !(d2[j] == image)) ++j;
                if (j == d2.size()) {
                    rep.fail("image " + qs.format(image), "not a quotient vertex", tag + " u=" + sigma.format(u));
                    break;
                }
                if (hit[j]) {
                    rep.fail("image " + qs.format(image), "hit twice", tag + " u=" + sigma.format(u));
                    break;
                }
                hit[j] = true;
            }
        }
        record(r, std::move(rep));
    }
    r.seconds = timer.seconds();
    return r;
}

Result minset_plateau(const Options& o) {
    Result r{"minset-plateau", 0, 0, 0.0, 0.0, {}};
    Timer timer;
    Rng rng = suite_rng(o, 5);
    const std::size_t rankings = o.quick ? 30 : 200;
    for (std::size_t c = 0; c < rankings; ++c) {
        const std::uint64_t seed = rng();
        Rng crng(seed);
        Sigma sigma = gen::sigma(pick_pairs(crng, 1, 6));
        Ranking k = gen::ranking(sigma, crng, 4, std::uniform_real_distribution<double>(0.0, 0.8)(crng));
        QualSnapshot s = two_restriction(k);
        LiteralSet m = s.minset(0);
        if (o.fault == Fault::minset) m = corrupt(sigma, m);
        auto rep = oracle::ranking_min_hull(k, s.derived_pcr(), m);
        if (!rep.match) rep.counterexample = "case seed=" + std::to_string(seed) + "; " + rep.counterexample;
        record(r, std::move(rep));
    }
    r.seconds = timer.seconds();
    return r;
}

Result weight_validity(const Options& o) {
    Result r{"weight-validity", 0, 0, 0.0, 0.0, {}};
    Timer timer;
    Rng rng = suite_rng(o, 6);
    const std::size_t runs = 10, updates = o.quick ? 100 : 10000;
    for (std::size_t c = 0; c < runs; ++c) {
        const std::uint64_t seed = rng();
        Rng crng(seed);
        Sigma sigma = gen::sigma(pick_pairs(crng, 1, 8));
        auto schedule = c % 3 == 0 ? DiscountSchedule::empirical()
                                   : DiscountSchedule::fixed(std::uniform_real_distribution<double>(0.5, 1.0)(crng));
        RealSnapshot snap(sigma, schedule, 0.05);
        std::uniform_real_distribution<double> value(1.0, 100.0);
        for (std::size_t t = 0; t < updates; ++t) {
            LiteralSet u = gen::complete(sigma, crng);
            double v = value(crng);
            snap.update(u, v);
            const RealSnapshot* checked = &snap;
            RealSnapshot corrupted = snap;
            if (o.fault == Fault::weights) {
                auto w = snap.matrix();
                w[2 * sigma.size() + 3] += 1e-6 * snap.empty_weight();  // the (a, a*) entry
                corrupted = RealSnapshot::from_matrix(sigma, std::move(w), schedule, 0.05, snap.steps());
                checked = &corrupted;
            }
            auto report = checked->validate(0.0);
            const double ratio = report.worst_residual() / checked->empty_weight();
            r.worst = std::max(r.worst, ratio);
            oracle::OracleReport rep;
            rep.case_name = "weight validity";
            if (ratio >= 1e-9)
                rep.fail("residual ratio " + std::to_string(ratio), "limit 1e-9",
                         "case seed=" + std::to_string(seed) + " update " + std::to_string(t) + "\n" +
                             report.describe());
            record(r, std::move(rep));
        }
    }
    r.seconds = timer.seconds();
    return r;
}

std::vector<Result> run_all(const Options& o) {
    return {propagation(o),      median_helly(o),   coherent_projection(o),
            quotient_duality(o), minset_plateau(o), weight_validity(o)};
}

std::string format_table(const std::vector<Result>& rs) {
    std::ostringstream os;
    os << std::left << std::setw(22) << "suite" << std::right << std::setw(8) << "cases" << std::setw(10) << "failures"
       << std::setw(10) << "seconds" << "  result\n";
    for (const auto& r : rs)
        os << std::left << std::setw(22) << r.name << std::right << std::setw(8) << r.cases << std::setw(10)
           << r.failures << std::setw(10) << std::fixed << std::setprecision(2) << r.seconds << "  "
           << (r.passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::string format_counterexamples(const std::vector<Result>& rs) {
    std::ostringstream os;
    for (const auto& r : rs)
        for (const auto& c : r.counterexamples)
            os << "[" << r.name << "] " << c.case_name << "\n  formula: " << c.formula
               << "\n  oracle:  " << c.brute_force << "\n  input:   " << c.counterexample << "\n";
    return os.str();
}

}  // namespace uma::suites
