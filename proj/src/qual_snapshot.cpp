#include "uma/qual_snapshot.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "uma/selection.hpp"

namespace uma {

bool ValidationReport::violates(int condition) const {
    return std::any_of(issues.begin(), issues.end(), [&](const auto& i) { return i.condition == condition; });
}

double ValidationReport::worst_residual() const {
    double worst = 0.0;
    for (const auto& i : issues) worst = std::max(worst, i.residual);
    return worst;
}

std::string ValidationReport::describe() const {
    std::ostringstream os;
    for (const auto& i : issues)
        os << "condition " << i.condition << ": residual " << i.residual << " at " << i.witness << '\n';
    return os.str();
}

void ValidationReport::record(int condition, double residual, std::string witness) {
    for (auto& i : issues) {
        if (i.condition != condition) continue;
        if (residual > i.residual) {
            i.residual = residual;
            i.witness = std::move(witness);
        }
        return;
    }
    issues.push_back({condition, residual, std::move(witness)});
}

namespace {

bool same_pair(Literal a, Literal b) { return (a.id() >> 1) == (b.id() >> 1); }

double gap(Rank hi, Rank lo) {
    if (!is_finite(hi) && !is_finite(lo)) return 0.0;
    if (!is_finite(hi) || !is_finite(lo)) return 1e300;
    return static_cast<double>(hi) - static_cast<double>(lo);
}

}  // namespace

QualSnapshot::QualSnapshot(Sigma sigma, Rank delta)
    : sigma_(std::move(sigma)), delta_(delta), w_(sigma_.size() * sigma_.size(), kInfiniteRank) {}

QualSnapshot QualSnapshot::from_matrix(Sigma sigma, std::vector<Rank> w, Rank delta, std::size_t updates) {
    QualSnapshot s(std::move(sigma), delta);
    if (w.size() != s.w_.size()) throw std::invalid_argument("weight matrix has the wrong size");
    s.w_ = std::move(w);
    s.initialized_ = true;
    s.updates_ = updates;
    return s;
}

bool QualSnapshot::update(const LiteralSet& u, Rank value) {
    if (!is_finite(value)) throw std::invalid_argument("qualitative update value must be finite");
    if (!is_complete(sigma_, u)) throw std::invalid_argument("update needs a complete selection");
    const std::size_t n = size();
    bool changed = false;
    u.for_each([&](Literal a) {
        const Rank* row = &w_[a.id() * n];
        u.for_each([&](Literal b) { changed = changed || row[b.id()] > value; });
    });
    if (changed) {
        const auto& k = simd::kernels();
        u.for_each([&](Literal a) { k.min_masked_u32(&w_[a.id() * n], u.words(), n, value); });
    }
    initialized_ = true;
    ++updates_;
    return changed;
}

ValidationReport QualSnapshot::validate() const {
    ValidationReport report;
    const std::size_t n = size();
    if (!initialized_) {
        report.record(2, 1e300, "uninitialized");
        return report;
    }
    auto nm = [&](std::uint32_t x) { return sigma_.name(Literal{x}); };
    auto at = [&](std::uint32_t a, std::uint32_t b) { return w_[a * n + b]; };

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
            if (at(a, b) != at(b, a)) report.record(0, std::abs(gap(at(a, b), at(b, a))), nm(a) + "," + nm(b));

    for (std::uint32_t a = 0; a < n; ++a) {
        if (is_finite(at(0, a))) report.record(1, 1e300, "0," + nm(a));
        if (is_finite(at(a, a ^ 1u))) report.record(1, 1e300, nm(a) + "," + nm(a ^ 1u));
    }

    Rank base = std::min(at(0, 0), at(1, 1));
    if (!is_finite(base)) report.record(2, 1e300, "w_0");
    for (std::uint32_t a = 2; a < n; a += 2) {
        Rank m = std::min(at(a, a), at(a + 1, a + 1));
        if (m != base) report.record(2, std::abs(gap(m, base)), nm(a));
    }

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            Rank m = std::min(at(a, b), at(a, b ^ 1u));
            if (m != at(a, a)) report.record(3, std::abs(gap(m, at(a, a))), nm(a) + "," + nm(b));
        }

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            Rank ab = at(a, b ^ 1u);
            for (std::uint32_t c = 0; c < n; ++c) {
                Rank floor = std::min(ab, at(b, c ^ 1u));
                if (at(a, c ^ 1u) < floor)
                    report.record(4, gap(floor, at(a, c ^ 1u)), nm(a) + "," + nm(b) + "," + nm(c));
            }
        }
    return report;
}

Pcr QualSnapshot::residual_pcr(Rank delta) const {
    Pcr out(sigma_);
    if (!initialized_) return out;
    const std::size_t n = size();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            Literal la{a}, lb{b};
            if (same_pair(la, lb)) continue;
            Rank cross = w_[a * n + (b ^ 1u)];
            if (!is_finite(cross) || (is_finite(delta) && cross > delta)) out.insert(la, lb);
        }
    return out;
}

Pcr QualSnapshot::derived_pcr() const {
    Pcr out(sigma_);
    if (!initialized_) return out;
    const std::size_t n = size();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            Literal la{a}, lb{b};
            if (same_pair(la, lb)) continue;
            Rank cross = w_[a * n + (b ^ 1u)];
            Rank both = w_[a * n + b];
            Rank neither = w_[(a ^ 1u) * n + (b ^ 1u)];
            bool rel;
            if (is_finite(delta_))
                rel = !is_finite(cross) || cross > saturating_add(delta_, std::max(both, neither));
            else
                rel = !is_finite(cross) && is_finite(both) && is_finite(neither);
            if (rel) out.insert(la, lb);
        }
    return out;
}

LiteralSet QualSnapshot::minset(Rank epsilon) const {
    LiteralSet out = sigma_.empty_set();
    if (!initialized_) return out;
    for (std::uint32_t a = 0; a < size(); ++a) {
        Rank wa = weight(Literal{a}), wc = weight(Literal{a ^ 1u});
        bool in = is_finite(wc) ? (is_finite(wa) && wc >= epsilon && wa < wc - epsilon) : is_finite(wa);
        if (in) out.set(Literal{a});
    }
    return out;
}

std::vector<Rank> point_mass_restriction(const Sigma& sigma, const LiteralSet& u, Rank r) {
    if (!is_complete(sigma, u)) throw std::invalid_argument("point mass needs a complete selection");
    const std::size_t n = sigma.size();
    std::vector<Rank> w(n * n, kInfiniteRank);
    u.for_each([&](Literal a) { u.for_each([&](Literal b) { w[a.id() * n + b.id()] = r; }); });
    return w;
}

QualSnapshot two_restriction(const Ranking& k) {
    const Sigma& sigma = k.sigma();
    const std::size_t n = sigma.size();
    std::vector<Rank> w(n * n, kInfiniteRank);
    for (std::uint64_t mask = 0; mask < k.values().size(); ++mask) {
        Rank r = k.at_mask(mask);
        if (!is_finite(r)) continue;
        LiteralSet u = complete_from_mask(sigma, mask);
        u.for_each([&](Literal a) {
            u.for_each([&](Literal b) {
                Rank& cell = w[a.id() * n + b.id()];
                cell = std::min(cell, r);
            });
        });
    }
    return QualSnapshot::from_matrix(sigma, std::move(w));
}

Ranking completion(const QualSnapshot& s) {
    auto report = s.validate();
    if (!report.ok()) throw std::invalid_argument("completion: not a 2-ranking\n" + report.describe());
    const Sigma& sigma = s.sigma();
    std::vector<Rank> values(cube_size(sigma));
    for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
        LiteralSet u = complete_from_mask(sigma, mask);
        Rank best = 0;
        u.for_each([&](Literal a) { u.for_each([&](Literal b) { best = std::max(best, s.weight(a, b)); }); });
        values[mask] = best;
    }
    return Ranking(sigma, std::move(values));
}

}  // namespace uma
