#pragma once

#include <cstddef>
#include <vector>

#include "uma/pcr.hpp"

namespace uma {

// (u n v) u (u n w) u (v n w)
LiteralSet median(const LiteralSet& u, const LiteralSet& v, const LiteralSet& w);

// |T \ S|; both arguments must be coherent and forward-closed in p.
std::size_t divergence(const Pcr& p, const LiteralSet& s, const LiteralSet& t);

// Nearest vertex of <T;p> to u: (u \ down(T*)) u up(T). T must be coherent.
LiteralSet project_point(const Pcr& p, const LiteralSet& u, const LiteralSet& t);

// Base of the projection of <S;p> onto <coh(T);p>: up(S u T) \ up(T)*.
LiteralSet project_convex(const Pcr& p, const LiteralSet& s, const LiteralSet& t);

// Shortest path from the vertex u into <T;p>, one class flip per step.
std::vector<LiteralSet> geodesic_to(const Pcr& p, const LiteralSet& u, const LiteralSet& t);

}  // namespace uma
