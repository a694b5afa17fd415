#pragma once

#include <cstddef>

namespace uma {

// Bernoulli relative entropy q log(q/p) + (1-q) log((1-q)/(1-p)), with 0 log 0 = 0.
double kl_divergence(double q, double p);

// Upper bound on P(|Y(t) - E[X]| >= delta) for the running average Y(t) of
// t+1 i.i.d. copies of X with values in [0, cap] and E[X] = alpha * cap:
//   exp(-(t+1) KL(beta||alpha)) + exp(-(t+1) KL(1-gamma||1-alpha)),
//   beta = alpha + delta/cap, gamma = alpha - delta/cap, clamped to 1.
// Throws std::invalid_argument unless 0 < alpha < 1, beta < 1 and gamma > 0.
double chernoff_bound(std::size_t t, double delta, double alpha, double cap);

}  // namespace uma
