#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace uma {

// Index into a Sigma. 0 is the constant-false query, 1 its complement;
// proper pair i occupies 2+2i (positive) and 3+2i (negative).
class Literal {
public:
    constexpr Literal() = default;
    constexpr explicit Literal(std::uint32_t id) : id_(id) {}

    constexpr std::uint32_t id() const { return id_; }
    constexpr bool is_constant() const { return id_ < 2; }
    constexpr bool is_positive() const { return (id_ & 1u) == 0; }

    friend constexpr auto operator<=>(Literal, Literal) = default;

private:
    std::uint32_t id_ = 0;
};

constexpr Literal complement(Literal x) { return Literal{x.id() ^ 1u}; }

inline constexpr Literal kFalse{0};
inline constexpr Literal kTrue{1};

constexpr std::size_t index_of(Literal x) { return x.id(); }
constexpr std::size_t index_of(std::size_t i) { return i; }

}  // namespace uma

template <>
struct std::hash<uma::Literal> {
    std::size_t operator()(uma::Literal x) const noexcept { return x.id(); }
};
