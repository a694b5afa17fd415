#pragma once

#include <string>
#include <vector>

namespace uma {

struct ValidationIssue {
    int condition = 0;        // 0 = symmetry, otherwise the numbered weight condition
    double residual = 0.0;    // worst violation magnitude seen for this condition
    std::string witness;      // literal names of the worst instance
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    bool violates(int condition) const;
    double worst_residual() const;
    std::string describe() const;

    // keeps only the worst instance per condition
    void record(int condition, double residual, std::string witness);
};

}  // namespace uma
