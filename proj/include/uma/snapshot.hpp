#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "uma/qual_snapshot.hpp"
#include "uma/real_snapshot.hpp"

namespace uma {

enum class SnapshotKind { qualitative, empirical, discounted };

std::string_view to_string(SnapshotKind kind);
std::optional<SnapshotKind> parse_snapshot_kind(std::string_view text);

// Either snapshot flavour behind one update/derive interface.
class Snapshot {
public:
    explicit Snapshot(QualSnapshot s) : s_(std::move(s)) {}
    explicit Snapshot(RealSnapshot s) : s_(std::move(s)) {}

    // q is used by the discounted kind only, delta by the qualitative kind only.
    static Snapshot make(const Sigma& sigma, SnapshotKind kind, double q, double tau, Rank delta);

    SnapshotKind kind() const;
    bool is_qualitative() const { return std::holds_alternative<QualSnapshot>(s_); }
    const QualSnapshot* qual() const { return std::get_if<QualSnapshot>(&s_); }
    const RealSnapshot* real() const { return std::get_if<RealSnapshot>(&s_); }
    const Sigma& sigma() const;

    // Qualitative values must be nonnegative integers; real values must be >= 1.
    // Returns whether the weights changed.
    bool update(const LiteralSet& u, double value);

    bool initialized() const;
    std::size_t update_count() const;
    // the orthogonal PCR while no observation has arrived
    Pcr derived_pcr() const;
    LiteralSet minset() const;

private:
    std::variant<QualSnapshot, RealSnapshot> s_;
};

}  // namespace uma
