#include "uma/real_snapshot.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uma/selection.hpp"

namespace uma {

DiscountSchedule DiscountSchedule::fixed(double q) {
    if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("discount must lie in (0, 1]");
    return DiscountSchedule(false, q);
}

double DiscountSchedule::q(std::size_t t) const {
    if (!empirical_) return q_;
    return static_cast<double>(t + 1) / static_cast<double>(t + 2);
}

RealSnapshot::RealSnapshot(Sigma sigma, DiscountSchedule schedule, double tau)
    : sigma_(std::move(sigma)),
      schedule_(schedule),
      w_(sigma_.size() * sigma_.size(), 0.0),
      tau_(sigma_.size() * sigma_.size(), tau) {
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("threshold tau must lie in (0, 1)");
}

RealSnapshot RealSnapshot::from_matrix(Sigma sigma, std::vector<double> w, DiscountSchedule schedule, double tau,
                                       std::size_t steps) {
    RealSnapshot s(std::move(sigma), schedule, tau);
    if (w.size() != s.w_.size()) throw std::invalid_argument("weight matrix has the wrong size");
    s.w_ = std::move(w);
    s.steps_ = steps;
    return s;
}

void RealSnapshot::set_tau(Literal a, Literal b, double value) {
    if (!(value > 0.0 && value < 1.0)) throw std::invalid_argument("threshold tau must lie in (0, 1)");
    const std::size_t n = size();
    for (Literal x : {a, complement(a)})
        for (Literal y : {b, complement(b)}) {
            tau_[x.id() * n + y.id()] = value;
            tau_[y.id() * n + x.id()] = value;
        }
}

void RealSnapshot::set_tau_table(std::vector<double> table) {
    if (table.size() != tau_.size()) throw std::invalid_argument("tau table has the wrong size");
    tau_ = std::move(table);
}

void RealSnapshot::update(const LiteralSet& u, double value) {
    if (!(value >= 1.0)) throw std::invalid_argument("real-valued update needs a value >= 1");
    if (!is_complete(sigma_, u)) throw std::invalid_argument("update needs a complete selection");
    const std::size_t n = size();
    if (steps_ == 0) {
        std::fill(w_.begin(), w_.end(), 0.0);
        u.for_each([&](Literal a) { u.for_each([&](Literal b) { w_[a.id() * n + b.id()] = value; }); });
    } else {
        const double q = schedule_.q(steps_ - 1);
        const double add = (1.0 - q) * value;
        const auto& k = simd::kernels();
        for (std::uint32_t a = 0; a < n; ++a)
            k.scale_add_masked_f64(&w_[a * n], u.words(), n, q, u.test(Literal{a}) ? add : 0.0);
    }
    ++steps_;
}

bool RealSnapshot::is_trivial() const {
    return std::all_of(w_.begin(), w_.end(), [](double x) { return x == 0.0; });
}

ValidationReport RealSnapshot::validate(double tolerance) const {
    ValidationReport report;
    const std::size_t n = size();
    auto nm = [&](std::uint32_t x) { return sigma_.name(Literal{x}); };
    auto at = [&](std::uint32_t a, std::uint32_t b) { return w_[a * n + b]; };
    auto check = [&](int cond, double residual, auto witness) {
        if (!(residual <= tolerance)) report.record(cond, std::isnan(residual) ? 1e300 : residual, witness());
    };

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
            check(0, std::abs(at(a, b) - at(b, a)), [&] { return nm(a) + "," + nm(b); });

    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) check(1, -at(a, b), [&] { return nm(a) + "," + nm(b); });
        check(1, std::abs(at(0, a)), [&] { return "0," + nm(a); });
        check(1, std::abs(at(a, a ^ 1u)), [&] { return nm(a) + "," + nm(a ^ 1u); });
    }

    const double empty = at(1, 1) + at(0, 0);
    for (std::uint32_t a = 2; a < n; a += 2)
        check(2, std::abs(at(a, a) + at(a + 1, a + 1) - empty), [&] { return nm(a); });

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            check(3, std::abs(at(a, a) - at(a, b) - at(a, b ^ 1u)), [&] { return nm(a) + "," + nm(b); });

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c) {
                auto w3 = [&] { return nm(a) + "," + nm(b) + "," + nm(c); };
                double lhs = at(a, b ^ 1u) + at(b, c ^ 1u) + at(c, a ^ 1u);
                double rhs = at(a ^ 1u, b) + at(b ^ 1u, c) + at(c ^ 1u, a);
                check(4, std::abs(lhs - rhs), w3);
                double quad_l = at(a, c ^ 1u) + at(a ^ 1u, c);
                double quad_r = at(a, b ^ 1u) + at(a ^ 1u, b) + at(b, c ^ 1u) + at(b ^ 1u, c);
                check(5, quad_l - quad_r, w3);
            }
    return report;
}

Pcr RealSnapshot::derived_pcr() const {
    if (is_trivial()) throw std::invalid_argument("derived_pcr: trivial 2-weight");
    Pcr out(sigma_);
    const std::size_t n = size();
    const double empty = empty_weight();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            if ((a >> 1) == (b >> 1)) continue;
            double cross = w_[a * n + (b ^ 1u)];
            double other = w_[(a ^ 1u) * n + b];
            double bound = std::min({tau_[a * n + b] * empty, w_[a * n + b], w_[(a ^ 1u) * n + (b ^ 1u)], other});
            if (cross < bound || (cross == 0.0 && other == 0.0)) out.insert(Literal{a}, Literal{b});
        }
    return out;
}

LiteralSet RealSnapshot::minset() const {
    LiteralSet out = sigma_.empty_set();
    for (std::uint32_t a = 0; a < size(); ++a)
        if (weight(Literal{a}) > weight(Literal{a ^ 1u})) out.set(Literal{a});
    return out;
}

std::vector<double> point_mass_weight(const Sigma& sigma, const LiteralSet& u, double r) {
    if (!is_complete(sigma, u)) throw std::invalid_argument("point mass needs a complete selection");
    if (!(r >= 1.0)) throw std::invalid_argument("point mass value must be >= 1");
    const std::size_t n = sigma.size();
    std::vector<double> w(n * n, 0.0);
    u.for_each([&](Literal a) { u.for_each([&](Literal b) { w[a.id() * n + b.id()] = r; }); });
    return w;
}

}  // namespace uma
