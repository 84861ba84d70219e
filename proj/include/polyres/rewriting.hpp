#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "polyres/basics.hpp"

namespace polyres {

// One application of a rule inside a word.
struct RewriteStep {
    Path left;
    std::string rule;
    Path right;

    friend bool operator==(const RewriteStep& a, const RewriteStep& b) {
        return a.left == b.left && a.rule == b.rule && a.right == b.right;
    }
    friend bool operator<(const RewriteStep& a, const RewriteStep& b) {
        if (a.left.size() != b.left.size())
            return a.left.size() < b.left.size();
        if (a.rule != b.rule)
            return a.rule < b.rule;
        return a.left < b.left;
    }
};

Path step_source(const Polygraph& p, const RewriteStep& s);
Path step_target(const Polygraph& p, const RewriteStep& s);
size_t step_pos(const RewriteStep& s);
size_t step_redex_end(const Polygraph& p, const RewriteStep& s);

struct RewriteTrace {
    Path source;
    std::vector<RewriteStep> steps;

    Path target(const Polygraph& p) const {
        return steps.empty() ? source : step_target(p, steps.back());
    }
};

enum class Side { leftmost, rightmost };

// All steps with the given source, sorted by (position, rule name).
std::vector<RewriteStep> rewrite_steps(const Polygraph& p, const Path& w);

// Least/greatest element of rewrite_steps, if any.
std::optional<RewriteStep> pick_step(const Polygraph& p, const Path& w, Side side);

struct TerminationCertificate {
    std::string method;   // length | weights | inversion | assume | none
    std::string verdict;  // proved | assumed | refuted | unknown
    std::string detail;
    std::optional<RewriteTrace> loop;  // witness for refuted

    bool usable() const { return verdict == "proved" || verdict == "assumed"; }
};

TerminationCertificate check_termination(const Polygraph& p, size_t loop_search_len = 6);

constexpr size_t kDefaultStepBudget = 1000000;

// Normal form plus the full strategy trace for one handedness.
std::pair<Path, RewriteTrace> normal_form(const Polygraph& p, const Path& w, Side side,
                                          size_t budget = kDefaultStepBudget);

struct BranchingJoin {
    RewriteStep left_leg;
    RewriteStep right_leg;
    Path left_nf;
    Path right_nf;
    RewriteTrace left_trace;
    RewriteTrace right_trace;
    bool joinable = false;
};

struct ConfluenceReport {
    bool confluent = false;
    TerminationCertificate termination;
    std::vector<BranchingJoin> branchings;
};

ConfluenceReport check_confluence(const Polygraph& p, size_t budget = kDefaultStepBudget);

bool word_problem(const Polygraph& p, const Path& u, const Path& v,
                  size_t budget = kDefaultStepBudget);

bool is_reduced(const Polygraph& p);
Polygraph reduce(const Polygraph& p, size_t budget = kDefaultStepBudget);

void require_convergent(const Polygraph& p, size_t budget = kDefaultStepBudget);

// Normal-form engine with a transparent memo; safe under concurrent calls.
class Rewriter {
public:
    explicit Rewriter(const Polygraph& p, size_t budget = kDefaultStepBudget)
        : p_(&p), budget_(budget) {}

    const Polygraph& polygraph() const { return *p_; }
    size_t budget() const { return budget_; }

    Path nf(const Path& w) const;
    bool is_normal(const Path& w) const { return !pick_step(*p_, w, Side::rightmost).has_value(); }
    std::vector<RewriteStep> rightmost_trace(const Path& w) const;

private:
    const Polygraph* p_;
    size_t budget_;
    mutable std::mutex mu_;
    mutable std::map<Path, Path> memo_;
};

}  // namespace polyres
