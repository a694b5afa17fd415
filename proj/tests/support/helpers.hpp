#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

#include "uma/environment.hpp"
#include "uma/sigma.hpp"

namespace uma::test {

inline Rng rng(std::uint64_t seed) { return Rng(seed * 0x9e3779b97f4a7c15ULL + 17); }

inline Literal lit(const Sigma& s, std::string_view name) {
    auto x = s.find(name);
    if (!x) throw std::invalid_argument("no literal named " + std::string(name));
    return *x;
}

inline LiteralSet set(const Sigma& s, std::initializer_list<std::string_view> names) {
    LiteralSet out = s.empty_set();
    for (auto n : names) out.set(lit(s, n));
    return out;
}

}  // namespace uma::test
