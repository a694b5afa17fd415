#include "uma/projection.hpp"

#include <optional>
#include <stdexcept>

#include "uma/selection.hpp"

namespace uma {

LiteralSet median(const LiteralSet& u, const LiteralSet& v, const LiteralSet& w) {
    LiteralSet out = u & v;
    out |= u & w;
    out |= v & w;
    return out;
}

std::size_t divergence(const Pcr& p, const LiteralSet& s, const LiteralSet& t) {
    if (!p.is_closed_coherent(s) || !p.is_closed_coherent(t))
        throw std::invalid_argument("divergence: arguments must be coherent and forward-closed");
    return (t - s).count();
}

LiteralSet project_point(const Pcr& p, const LiteralSet& u, const LiteralSet& t) {
    if (!p.is_coherent(t)) throw std::invalid_argument("project_point: target set is incoherent");
    if (!is_complete(p.sigma(), u) || !p.is_coherent(u))
        throw std::invalid_argument("project_point: source is not a vertex");
    LiteralSet reach = p.up(t);
    return (u - starred(reach)) | reach;
}

LiteralSet project_convex(const Pcr& p, const LiteralSet& s, const LiteralSet& t) {
    if (!p.is_coherent(s)) throw std::invalid_argument("project_convex: source set is incoherent");
    return p.up(s | t) - starred(p.up(t));
}

std::vector<LiteralSet> geodesic_to(const Pcr& p, const LiteralSet& u, const LiteralSet& t) {
    if (!p.is_coherent(t)) throw std::invalid_argument("geodesic_to: target set is incoherent");
    auto comp = p.component_ids();
    auto class_of = [&](Literal c) {
        LiteralSet cls(p.size());
        for (std::uint32_t x = 0; x < p.size(); ++x)
            if (comp[x] == comp[c.id()]) cls.set(Literal{x});
        return cls;
    };

    std::vector<LiteralSet> path{u};
    LiteralSet cur = u;
    while (!t.is_subset_of(cur)) {
        Literal b = (t - cur).members().front();
        LiteralSet candidates = cur & p.down(complement(b));
        std::optional<Literal> pick;
        candidates.for_each([&](Literal c) {
            if (pick) return;
            LiteralSet below = (p.down(c) & cur) - class_of(c);
            if (below.none()) pick = c;
        });
        if (!pick) throw std::logic_error("geodesic_to: no minimal literal to flip");
        cur = flip(cur, class_of(*pick));
        path.push_back(cur);
    }
    return path;
}

}  // namespace uma
