#pragma once

#include <cstddef>
#include <vector>

#include "uma/pcr.hpp"
#include "uma/rank.hpp"
#include "uma/ranking.hpp"
#include "uma/validation.hpp"

namespace uma {

// Symmetric |Sigma| x |Sigma| matrix of extended-natural weights (a 2-ranking)
// together with the min-update rule and the PCRs and minsets derived from it.
class QualSnapshot {
public:
    explicit QualSnapshot(Sigma sigma, Rank delta = 0);
    // Adopts a full row-major matrix; validity is not checked here. updates is
    // the number of observations the matrix stands for.
    static QualSnapshot from_matrix(Sigma sigma, std::vector<Rank> w, Rank delta = 0, std::size_t updates = 0);

    const Sigma& sigma() const { return sigma_; }
    std::size_t size() const { return sigma_.size(); }
    Rank delta() const { return delta_; }
    void set_delta(Rank delta) { delta_ = delta; }

    bool initialized() const { return initialized_; }
    std::size_t update_count() const { return updates_; }

    Rank weight(Literal a, Literal b) const { return w_[a.id() * size() + b.id()]; }
    Rank weight(Literal a) const { return weight(a, a); }
    // w of the empty set, i.e. w_11
    Rank empty_weight() const { return weight(kTrue); }
    const std::vector<Rank>& matrix() const { return w_; }

    // Entrywise min with the point-mass restriction of (u, value). The first
    // update installs that restriction. Returns whether any entry changed.
    bool update(const LiteralSet& u, Rank value);

    ValidationReport validate() const;
    bool is_valid() const { return validate().ok(); }

    Pcr residual_pcr(Rank delta) const;
    // uses delta(); the orthogonal PCR before the first update
    Pcr derived_pcr() const;
    LiteralSet minset(Rank epsilon = 0) const;

private:
    Sigma sigma_;
    Rank delta_;
    std::vector<Rank> w_;
    bool initialized_ = false;
    std::size_t updates_ = 0;
};

std::vector<Rank> point_mass_restriction(const Sigma& sigma, const LiteralSet& u, Rank r);
QualSnapshot two_restriction(const Ranking& k);
// max over pairs in u; throws std::invalid_argument for an invalid 2-ranking
Ranking completion(const QualSnapshot& s);

}  // namespace uma
