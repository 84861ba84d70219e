#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyres/rewriting.hpp"

namespace polyres {

struct LocalBranching {
    Path source;
    std::vector<RewriteStep> steps;  // sorted ascending for the position order
};

enum class BranchingClass { aspherical, peiffer, overlapping };

// Trichotomy for order-2 local branchings.
BranchingClass classify(const Polygraph& p, const LocalBranching& b);

struct CriticalBranching;
using CriticalBranchingPtr = std::shared_ptr<const CriticalBranching>;

struct BranchingExtension {
    std::string rule;
    size_t overlap = 0;  // length of the parent-source suffix consumed by the rule's lhs
};

struct CriticalBranching {
    int order = 2;
    Path source;
    std::vector<RewriteStep> steps;        // sorted; the last is the rightmost step
    CriticalBranchingPtr parent;           // present for order >= 3
    std::optional<BranchingExtension> extension;

    size_t rightmost_redex_end(const Polygraph& p) const {
        return step_redex_end(p, steps.back());
    }
    std::string key() const;
};

// Order-2 critical branchings; on non-reduced input this includes inclusion
// overlaps.
std::vector<CriticalBranchingPtr> critical_branchings(const Polygraph& p);

// Critical n-fold branchings of a reduced convergent presentation, obtained by
// suffix extension of the order n-1 family.
std::vector<CriticalBranchingPtr> critical_nfold(const Polygraph& p, int order,
                                                 size_t budget = kDefaultStepBudget);

// Single extension step shared by the enumerator and the strategy engine.
CriticalBranchingPtr extend_branching(const Polygraph& p, const CriticalBranchingPtr& parent,
                                      const std::string& rule, size_t overlap);
CriticalBranchingPtr make_order2(const Polygraph& p, const std::string& rule_left,
                                 const std::string& rule_right, size_t overlap);

}  // namespace polyres
