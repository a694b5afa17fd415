#pragma once

#include <cstddef>
#include <vector>

#include "uma/pcr.hpp"
#include "uma/validation.hpp"

namespace uma {

class DiscountSchedule {
public:
    // q(t) = (t+1)/(t+2): the running average of all observations
    static DiscountSchedule empirical() { return DiscountSchedule(true, 0.0); }
    // constant q in (0, 1]
    static DiscountSchedule fixed(double q);

    bool is_empirical() const { return empirical_; }
    double fixed_q() const { return q_; }
    double q(std::size_t t) const;

private:
    DiscountSchedule(bool empirical, double q) : empirical_(empirical), q_(q) {}
    bool empirical_;
    double q_;
};

// Symmetric nonnegative weight matrix (a real-valued 2-weight) with the
// discounted update, the thresholded derived PCR and the minset.
class RealSnapshot {
public:
    RealSnapshot(Sigma sigma, DiscountSchedule schedule, double tau);
    // Adopts a row-major matrix; steps is the number of observations it stands for.
    static RealSnapshot from_matrix(Sigma sigma, std::vector<double> w, DiscountSchedule schedule, double tau,
                                    std::size_t steps);

    const Sigma& sigma() const { return sigma_; }
    std::size_t size() const { return sigma_.size(); }
    const DiscountSchedule& schedule() const { return schedule_; }
    std::size_t steps() const { return steps_; }
    bool initialized() const { return steps_ > 0; }

    double weight(Literal a, Literal b) const { return w_[a.id() * size() + b.id()]; }
    double weight(Literal a) const { return weight(a, a); }
    double empty_weight() const { return weight(kTrue) + weight(kFalse); }
    const std::vector<double>& matrix() const { return w_; }

    double tau(Literal a, Literal b) const { return tau_[a.id() * size() + b.id()]; }
    const std::vector<double>& tau_table() const { return tau_; }
    // Sets tau for the whole symmetry class of (a, b): order and complements.
    void set_tau(Literal a, Literal b, double value);
    void set_tau_table(std::vector<double> table);

    // w <- q w + (1 - q) value delta_u; the first call installs value delta_u.
    // Throws for value < 1.
    void update(const LiteralSet& u, double value);

    bool is_trivial() const;
    ValidationReport validate(double tolerance) const;
    // 1e-9 * w_empty
    double default_tolerance() const { return 1e-9 * empty_weight(); }

    // Throws std::invalid_argument for a trivial snapshot.
    Pcr derived_pcr() const;
    LiteralSet minset() const;

private:
    Sigma sigma_;
    DiscountSchedule schedule_;
    std::vector<double> w_;
    std::vector<double> tau_;
    std::size_t steps_ = 0;
};

std::vector<double> point_mass_weight(const Sigma& sigma, const LiteralSet& u, double r);

}  // namespace uma
