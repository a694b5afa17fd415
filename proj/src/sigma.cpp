#include "uma/sigma.hpp"

#include <stdexcept>

namespace uma {

Sigma::Sigma(std::size_t n_pairs) {
    names_.reserve(n_pairs);
    for (std::size_t i = 0; i < n_pairs; ++i) names_.push_back("q" + std::to_string(i));
}

Sigma::Sigma(std::vector<std::string> query_names) : names_(std::move(query_names)) {
    for (const auto& n : names_) {
        if (n.empty() || n == "0" || n == "1" || n.back() == '*')
            throw std::invalid_argument("invalid query name '" + n + "'");
    }
}

Literal Sigma::complement(Literal x) const {
    if (!valid(x)) throw std::out_of_range("literal index " + std::to_string(x.id()) + " out of range");
    return uma::complement(x);
}

Literal Sigma::positive(std::size_t pair) const {
    if (pair >= n_pairs()) throw std::out_of_range("pair index out of range");
    return Literal{static_cast<std::uint32_t>(2 + 2 * pair)};
}

Literal Sigma::negative(std::size_t pair) const { return uma::complement(positive(pair)); }

std::size_t Sigma::pair_of(Literal x) const {
    if (!valid(x) || x.is_constant()) throw std::out_of_range("not a proper literal");
    return x.id() / 2 - 1;
}

std::string Sigma::name(Literal x) const {
    if (x == kFalse) return "0";
    if (x == kTrue) return "1";
    const auto& base = names_.at(pair_of(x));
    return x.is_positive() ? base : base + "*";
}

std::optional<Literal> Sigma::find(std::string_view literal_name) const {
    if (literal_name == "0") return kFalse;
    if (literal_name == "1") return kTrue;
    bool negated = !literal_name.empty() && literal_name.back() == '*';
    if (negated) literal_name.remove_suffix(1);
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == literal_name) return negated ? negative(i) : positive(i);
    return std::nullopt;
}

LiteralSet Sigma::all() const {
    LiteralSet s(size());
    s.fill();
    return s;
}

LiteralSet Sigma::set_of(std::initializer_list<Literal> lits) const {
    LiteralSet s(size());
    for (auto x : lits) {
        if (!valid(x)) throw std::out_of_range("literal index out of range");
        s.set(x);
    }
    return s;
}

std::string Sigma::format(const LiteralSet& s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Literal x) {
        if (!first) out += ',';
        out += name(x);
        first = false;
    });
    return out + "}";
}

}  // namespace uma
