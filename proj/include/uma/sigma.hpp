#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uma/bitset.hpp"
#include "uma/literal.hpp"

namespace uma {

// A finite pointed complemented set: the reserved pair (0,1) plus named
// proper query pairs.
class Sigma {
public:
    Sigma() = default;
    // Queries named q0, q1, ...
    explicit Sigma(std::size_t n_pairs);
    explicit Sigma(std::vector<std::string> query_names);

    std::size_t n_pairs() const { return names_.size(); }
    // number of literals, 2*n_pairs + 2
    std::size_t size() const { return 2 * names_.size() + 2; }

    bool valid(Literal x) const { return x.id() < size(); }
    Literal complement(Literal x) const;

    Literal positive(std::size_t pair) const;
    Literal negative(std::size_t pair) const;
    // pair index of a proper literal
    std::size_t pair_of(Literal x) const;

    const std::string& query_name(std::size_t pair) const { return names_.at(pair); }
    const std::vector<std::string>& query_names() const { return names_; }
    std::string name(Literal x) const;
    std::optional<Literal> find(std::string_view literal_name) const;

    LiteralSet empty_set() const { return LiteralSet(size()); }
    LiteralSet all() const;
    LiteralSet set_of(std::initializer_list<Literal> lits) const;

    std::string format(const LiteralSet& s) const;

    friend bool operator==(const Sigma& a, const Sigma& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

}  // namespace uma
