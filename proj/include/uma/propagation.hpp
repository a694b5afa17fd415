#pragma once

#include <cstddef>

#include "uma/pcr.hpp"

namespace uma {

struct PropagationStats {
    std::size_t edges_touched = 0;
    std::size_t literals_visited = 0;
};

// A PCR loaded with a coherent set S. Holds a reference to the PCR, which
// must outlive it.
class LoadedPcr {
public:
    // Throws std::invalid_argument if the load is incoherent.
    LoadedPcr(const Pcr& p, LiteralSet load);

    const Pcr& pcr() const { return *pcr_; }
    const LiteralSet& load() const { return load_; }

    // up(S u T) \ down(T*), by two depth-first sweeps sharing one visited set.
    LiteralSet propagate(const LiteralSet& t, PropagationStats* stats = nullptr) const;

private:
    const Pcr* pcr_;
    LiteralSet load_;
};

// coh(T) = up(T) \ down(T*)
LiteralSet coherent_projection(const Pcr& p, const LiteralSet& t);

LiteralSet propagate(const Pcr& p, const LiteralSet& s, const LiteralSet& t,
                     PropagationStats* stats = nullptr);

// belief state for a raw observation: coh(observation)
LiteralSet belief_update(const Pcr& p, const LiteralSet& observation);

}  // namespace uma
