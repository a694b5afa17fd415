#include "uma/quotient.hpp"

#include <stdexcept>
#include <string>

namespace uma {

LiteralSet PocQuotient::project(const LiteralSet& s) const {
    LiteralSet out(quotient.size());
    s.for_each([&](Literal a) { out.set(projection[a.id()]); });
    return out;
}

LiteralSet PocQuotient::pullback(const LiteralSet& s) const {
    LiteralSet out(projection.size());
    s.for_each([&](Literal c) { out |= classes[c.id()]; });
    return out;
}

PocQuotient canonical_quotient(const Pcr& p) {
    if (p.is_degenerate()) throw std::invalid_argument("canonical_quotient: degenerate PCR");
    const std::size_t n = p.size();
    const auto& sigma = p.sigma();
    LiteralSet negl = p.negligibles();
    LiteralSet negl_star = starred(negl);
    auto comp = p.component_ids();

    constexpr std::uint32_t unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> target(n, unset);
    negl.for_each([&](Literal a) { target[a.id()] = 0; });
    negl_star.for_each([&](Literal a) { target[a.id()] = 1; });

    std::vector<std::string> names;
    std::vector<LiteralSet> members{negl, negl_star};
    for (std::uint32_t x = 2; x < n; ++x) {
        if (target[x] != unset) continue;
        std::uint32_t pos = static_cast<std::uint32_t>(2 + 2 * names.size());
        LiteralSet cls(n), cls_star(n);
        std::string name;
        std::uint32_t cx = comp[x], cxs = comp[x ^ 1u];
        for (std::uint32_t y = 0; y < n; ++y) {
            if (comp[y] == cx) {
                cls.set(Literal{y});
                target[y] = pos;
                if (!name.empty()) name += '=';
                name += sigma.name(Literal{y});
            } else if (comp[y] == cxs) {
                cls_star.set(Literal{y});
                target[y] = pos + 1;
            }
        }
        // a class led by a negative literal would end in '*'
        if (name.back() == '*' || name.find('=') != std::string::npos) name = "[" + name + "]";
        names.push_back(std::move(name));
        members.push_back(std::move(cls));
        members.push_back(std::move(cls_star));
    }

    PocQuotient q{Pcr(Sigma(std::move(names))), {}, std::move(members)};
    q.projection.reserve(n);
    for (std::uint32_t x = 0; x < n; ++x) q.projection.push_back(Literal{target[x]});
    for (std::uint32_t a = 0; a < n; ++a) {
        Literal qa = q.projection[a];
        p.successors(Literal{a}).for_each([&](Literal b) {
            Literal qb = q.projection[b.id()];
            if (qa != qb) q.quotient.insert(qa, qb);
        });
    }
    q.quotient.freeze();
    return q;
}

Pcr direct_sum(const Pcr& p, const Pcr& q) {
    std::vector<std::string> names = p.sigma().query_names();
    const auto& qn = q.sigma().query_names();
    names.insert(names.end(), qn.begin(), qn.end());
    Pcr out{Sigma(std::move(names))};
    const auto shift = static_cast<std::uint32_t>(2 * p.sigma().n_pairs());
    auto copy = [&](const Pcr& src, std::uint32_t offset) {
        auto map = [&](Literal x) { return x.is_constant() ? x : Literal{x.id() + offset}; };
        for (std::uint32_t a = 0; a < src.size(); ++a)
            src.successors(Literal{a}).for_each([&](Literal b) { out.insert(map(Literal{a}), map(b)); });
    };
    copy(p, 0);
    copy(q, shift);
    return out;
}

}  // namespace uma
