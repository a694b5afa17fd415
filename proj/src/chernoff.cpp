#include "uma/chernoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uma {

double kl_divergence(double q, double p) {
    if (!(p > 0.0 && p < 1.0) || !(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("kl_divergence: bad arguments");
    double out = 0.0;
    if (q > 0.0) out += q * std::log(q / p);
    if (q < 1.0) out += (1.0 - q) * std::log((1.0 - q) / (1.0 - p));
    return out;
}

double chernoff_bound(std::size_t t, double delta, double alpha, double cap) {
    if (!(cap > 0.0) || !(delta > 0.0)) throw std::invalid_argument("chernoff_bound: delta and cap must be positive");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("chernoff_bound: alpha must lie in (0, 1)");
    double beta = alpha + delta / cap;
    double gamma = alpha - delta / cap;
    if (!(beta < 1.0) || !(gamma > 0.0)) throw std::invalid_argument("chernoff_bound: delta too large for alpha");
    double n = static_cast<double>(t) + 1.0;
    double bound = std::exp(-n * kl_divergence(beta, alpha)) + std::exp(-n * kl_divergence(1.0 - gamma, 1.0 - alpha));
    return std::min(1.0, bound);
}

}  // namespace uma
