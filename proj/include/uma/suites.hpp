#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uma/oracle.hpp"

// The invariant suites behind `uma verify` and the acceptance binary: each
// compares closed-form results with the brute-force oracle on seeded random
// instances.
namespace uma::suites {

// Deliberate corruption of the closed-form side, for negative controls.
enum class Fault { none, propagation, median, projection, quotient, minset, weights };
std::string_view to_string(Fault f);
std::optional<Fault> parse_fault(std::string_view text);

struct Options {
    std::uint64_t seed = 20240607;
    bool quick = false;  // reduced counts, a few seconds in total
    Fault fault = Fault::none;
};

struct Result {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double seconds = 0.0;
    double worst = 0.0;  // suite-specific magnitude, e.g. the worst weight residual ratio
    std::vector<oracle::OracleReport> counterexamples;  // first few failures

    bool passed() const { return failures == 0 && cases > 0; }
};

// >= 500 PCRs with n <= 10: <propagate(S,T)> equals the set of BFS projections
// of <S> onto <T>.
Result propagation(const Options& o);
// exhaustive median triples on duals with n <= 8, and Helly checks on halfspace triples
Result median_helly(const Options& o);
// idempotence, closure and fixed points of coh, and nearest-vertex containment
Result coherent_projection(const Options& o);
// the quotient map is a bijection between duals
Result quotient_duality(const Options& o);
// global minima of the completion form <minset; derived PCR> = hull of the minima
Result minset_plateau(const Options& o);
// 2-weight conditions after long runs of discounted updates
Result weight_validity(const Options& o);

std::vector<Result> run_all(const Options& o);

// one line per suite: name, cases, failures, seconds, PASS/FAIL
std::string format_table(const std::vector<Result>& rs);
// every stored counterexample with its case name, formula and oracle sides
std::string format_counterexamples(const std::vector<Result>& rs);

}  // namespace uma::suites
