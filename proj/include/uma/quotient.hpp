#pragma once

#include <vector>

#include "uma/pcr.hpp"

namespace uma {

// The canonical poc quotient of a non-degenerate PCR. Negligibles collapse
// onto 0, their complements onto 1, and every other literal onto its
// equivalence class.
struct PocQuotient {
    Pcr quotient;
    std::vector<Literal> projection;   // indexed by source literal id
    std::vector<LiteralSet> classes;   // indexed by quotient literal id, members in the source

    Literal project(Literal a) const { return projection.at(a.id()); }
    LiteralSet project(const LiteralSet& s) const;
    // all source literals whose class lies in s
    LiteralSet pullback(const LiteralSet& s) const;
    std::size_t class_count() const { return classes.size(); }
};

// Throws std::invalid_argument on degenerate input.
PocQuotient canonical_quotient(const Pcr& p);

// Shared 0 and 1; queries of p first, then those of q.
Pcr direct_sum(const Pcr& p, const Pcr& q);

}  // namespace uma
