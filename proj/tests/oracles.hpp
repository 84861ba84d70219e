// Brute-force oracles, independent of the engine's strategy code paths.
#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "polyres/branchings.hpp"
#include "polyres/rewriting.hpp"

namespace oracles {

using namespace polyres;

// every typed word of length <= max_len
inline std::vector<Path> words_upto(const Polygraph& p, size_t max_len) {
    std::vector<Path> out, frontier;
    for (const auto& o : p.objects) {
        out.push_back(p.empty_path(o));
        frontier.push_back(p.empty_path(o));
    }
    for (size_t len = 1; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const auto& w : frontier)
            for (const auto& g : p.gens)
                if (g.src == p.path_end(w)) {
                    Path e = w;
                    e.letters.push_back(g.name);
                    next.push_back(e);
                }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

// endpoints of every maximal rewriting sequence out of w, by exhaustive search
inline std::set<Path> all_normal_forms(const Polygraph& p, const Path& w, size_t fuel = 100000) {
    std::set<Path> result;
    std::vector<Path> stack{w};
    std::set<Path> seen{w};
    while (!stack.empty()) {
        if (fuel-- == 0)
            throw Error(Errc::step_budget_exceeded, "oracle fuel exhausted");
        Path cur = stack.back();
        stack.pop_back();
        auto steps = rewrite_steps(p, cur);
        if (steps.empty()) {
            result.insert(cur);
            continue;
        }
        for (const auto& s : steps) {
            Path t = step_target(p, s);
            if (seen.insert(t).second)
                stack.push_back(t);
            else if (rewrite_steps(p, t).empty())
                result.insert(t);
        }
    }
    return result;
}

// number of factorisations w = u . lhs . v over all rules
inline size_t count_factorizations(const Polygraph& p, const Path& w) {
    size_t n = 0;
    for (const auto& r : p.rules) {
        if (r.lhs.empty() || r.lhs.size() > w.size())
            continue;
        for (size_t pos = 0; pos + r.lhs.size() <= w.size(); ++pos) {
            bool match = true;
            for (size_t i = 0; i < r.lhs.size() && match; ++i)
                match = w.letters[pos + i] == r.lhs.letters[i];
            if (match)
                ++n;
        }
    }
    return n;
}

// whisker-stripped key of an n-tuple of steps on a common word: the overlap
// window plus rule names and relative positions
inline std::string stripped_key(const Polygraph& p, const std::vector<RewriteStep>& steps) {
    size_t lo = steps.front().left.size();
    size_t hi = 0;
    for (const auto& s : steps) {
        lo = std::min(lo, s.left.size());
        hi = std::max(hi, step_redex_end(p, s));
    }
    Path w = step_source(p, steps.front());
    std::string key = format_word(p.sub_path(w, lo, hi - lo));
    for (const auto& s : steps)
        key += "|" + std::to_string(s.left.size() - lo) + ":" + s.rule;
    return key;
}

// all overlapping local n-fold branchings on w (consecutive redexes intersect,
// positions strictly increasing), reported whisker-stripped
inline std::set<std::string> overlapping_nfold_on(const Polygraph& p, const Path& w, int order) {
    auto steps = rewrite_steps(p, w);
    std::set<std::string> out;
    std::vector<RewriteStep> tuple;
    auto overlap_ok = [&](const RewriteStep& a, const RewriteStep& b) {
        return b.left.size() < step_redex_end(p, a) && a.left.size() < b.left.size();
    };
    std::function<void(size_t)> rec = [&](size_t from) {
        if (static_cast<int>(tuple.size()) == order) {
            out.insert(stripped_key(p, tuple));
            return;
        }
        for (size_t i = from; i < steps.size(); ++i) {
            if (!tuple.empty() && !overlap_ok(tuple.back(), steps[i]))
                continue;
            tuple.push_back(steps[i]);
            rec(i + 1);
            tuple.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace oracles
