#include "uma/snapshot.hpp"

#include <cmath>
#include <stdexcept>

namespace uma {

std::string_view to_string(SnapshotKind kind) {
    switch (kind) {
        case SnapshotKind::qualitative:
            return "qualitative";
        case SnapshotKind::empirical:
            return "empirical";
        case SnapshotKind::discounted:
            return "discounted";
    }
    return "unknown";
}

std::optional<SnapshotKind> parse_snapshot_kind(std::string_view text) {
    if (text == "qualitative") return SnapshotKind::qualitative;
    if (text == "empirical") return SnapshotKind::empirical;
    if (text == "discounted") return SnapshotKind::discounted;
    return std::nullopt;
}

Snapshot Snapshot::make(const Sigma& sigma, SnapshotKind kind, double q, double tau, Rank delta) {
    switch (kind) {
        case SnapshotKind::qualitative:
            return Snapshot(QualSnapshot(sigma, delta));
        case SnapshotKind::empirical:
            return Snapshot(RealSnapshot(sigma, DiscountSchedule::empirical(), tau));
        case SnapshotKind::discounted:
            return Snapshot(RealSnapshot(sigma, DiscountSchedule::fixed(q), tau));
    }
    throw std::invalid_argument("unknown snapshot kind");
}

SnapshotKind Snapshot::kind() const {
    if (is_qualitative()) return SnapshotKind::qualitative;
    return real()->schedule().is_empirical() ? SnapshotKind::empirical : SnapshotKind::discounted;
}

const Sigma& Snapshot::sigma() const {
    return std::visit([](const auto& s) -> const Sigma& { return s.sigma(); }, s_);
}

bool Snapshot::update(const LiteralSet& u, double value) {
    if (auto* q = std::get_if<QualSnapshot>(&s_)) {
        if (!(value >= 0.0) || value != std::floor(value) || value >= static_cast<double>(kInfiniteRank))
            throw std::invalid_argument("qualitative values must be finite nonnegative integers");
        return q->update(u, static_cast<Rank>(value));
    }
    std::get<RealSnapshot>(s_).update(u, value);
    return true;
}

bool Snapshot::initialized() const {
    return std::visit([](const auto& s) { return s.initialized(); }, s_);
}

std::size_t Snapshot::update_count() const {
    if (auto* q = qual()) return q->update_count();
    return real()->steps();
}

Pcr Snapshot::derived_pcr() const {
    if (auto* q = qual()) return q->derived_pcr();
    const auto& r = *real();
    if (r.is_trivial()) return Pcr(r.sigma());
    return r.derived_pcr();
}

LiteralSet Snapshot::minset() const {
    if (auto* q = qual()) return q->minset();
    return real()->minset();
}

}  // namespace uma
