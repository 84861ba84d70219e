#include "polyres/branchings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polyres {

BranchingClass classify(const Polygraph& p, const LocalBranching& b) {
    if (b.steps.size() != 2)
        throw Error(Errc::internal, "classify expects an order-2 branching");
    const RewriteStep& f = b.steps[0];
    const RewriteStep& g = b.steps[1];
    if (!(step_source(p, f) == b.source) || !(step_source(p, g) == b.source))
        throw Error(Errc::typing_error, "branching legs do not share the source");
    if (f == g)
        return BranchingClass::aspherical;
    size_t f0 = step_pos(f), f1 = step_redex_end(p, f);
    size_t g0 = step_pos(g), g1 = step_redex_end(p, g);
    if (f1 <= g0 || g1 <= f0)
        return BranchingClass::peiffer;
    return BranchingClass::overlapping;
}

std::string CriticalBranching::key() const {
    std::ostringstream os;
    os << order << '|' << format_word(source);
    for (const auto& s : steps)
        os << '|' << step_pos(s) << ':' << s.rule;
    return os.str();
}

CriticalBranchingPtr make_order2(const Polygraph& p, const std::string& rule_left,
                                 const std::string& rule_right, size_t overlap) {
    const Rule* phi = p.find_rule(rule_left);
    const Rule* psi = p.find_rule(rule_right);
    if (!phi || !psi)
        throw Error(Errc::typing_error, "unknown rule in branching");
    const Path& u = phi->lhs;
    const Path& v = psi->lhs;
    if (overlap == 0 || overlap >= u.size() || overlap >= v.size())
        throw Error(Errc::internal, "invalid overlap length");
    for (size_t i = 0; i < overlap; ++i)
        if (u.letters[u.size() - overlap + i] != v.letters[i])
            throw Error(Errc::internal, "overlap letters do not match");

    auto b = std::make_shared<CriticalBranching>();
    b->order = 2;
    Path tail = p.suffix(v, overlap);
    b->source = p.concat(u, tail);
    b->steps.push_back({p.prefix(b->source, 0), rule_left, tail});
    b->steps.push_back(
        {p.prefix(b->source, u.size() - overlap), rule_right, p.empty_path(p.path_end(b->source))});
    b->extension = BranchingExtension{rule_right, overlap};
    return b;
}

CriticalBranchingPtr extend_branching(const Polygraph& p, const CriticalBranchingPtr& parent,
                                      const std::string& rule, size_t overlap) {
    const Rule* chi = p.find_rule(rule);
    if (!chi)
        throw Error(Errc::typing_error, "unknown rule '" + rule + "'");
    const Path& u = parent->source;
    const Path& l = chi->lhs;
    if (overlap == 0 || overlap >= u.size() || overlap >= l.size())
        throw Error(Errc::internal, "invalid extension overlap");
    for (size_t i = 0; i < overlap; ++i)
        if (u.letters[u.size() - overlap + i] != l.letters[i])
            throw Error(Errc::internal, "extension overlap letters do not match");

    auto b = std::make_shared<CriticalBranching>();
    b->order = parent->order + 1;
    Path tail = p.suffix(l, overlap);
    b->source = p.concat(u, tail);
    for (const auto& s : parent->steps)
        b->steps.push_back({s.left, s.rule, p.concat(s.right, tail)});
    b->steps.push_back(
        {p.prefix(b->source, u.size() - overlap), rule, p.empty_path(p.path_end(b->source))});
    b->parent = parent;
    b->extension = BranchingExtension{rule, overlap};
    return b;
}

std::vector<CriticalBranchingPtr> critical_branchings(const Polygraph& p) {
    std::vector<CriticalBranchingPtr> out;
    std::map<std::string, bool> seen;
    auto push = [&](CriticalBranchingPtr b) {
        if (!seen.emplace(b->key(), true).second)
            return;
        out.push_back(std::move(b));
    };

    for (const auto& phi : p.rules)
        for (const auto& psi : p.rules) {
            const Path& u = phi.lhs;
            const Path& v = psi.lhs;
            for (size_t len = 1; len < u.size() && len < v.size(); ++len) {
                bool match = true;
                for (size_t i = 0; i < len && match; ++i)
                    match = u.letters[u.size() - len + i] == v.letters[i];
                if (match)
                    push(make_order2(p, phi.name, psi.name, len));
            }
            // inclusion overlaps (occur only in non-reduced presentations)
            if (phi.name != psi.name && v.size() <= u.size()) {
                for (size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
                    bool match = true;
                    for (size_t i = 0; i < v.size() && match; ++i)
                        match = u.letters[pos + i] == v.letters[i];
                    if (!match)
                        continue;
                    auto b = std::make_shared<CriticalBranching>();
                    b->order = 2;
                    b->source = u;
                    RewriteStep f{p.prefix(u, 0), phi.name, p.empty_path(p.path_end(u))};
                    RewriteStep g{p.prefix(u, pos), psi.name, p.suffix(u, pos + v.size())};
                    b->steps = {std::min(f, g), std::max(f, g)};
                    push(std::move(b));
                }
            }
        }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (!(a->source == b->source))
            return a->source < b->source;
        return a->key() < b->key();
    });
    return out;
}

std::vector<CriticalBranchingPtr> critical_nfold(const Polygraph& p, int order, size_t budget) {
    if (order < 2)
        throw Error(Errc::degree_out_of_range, "branching order must be >= 2");
    if (order == 2)
        return critical_branchings(p);
    if (!is_reduced(p))
        throw Error(Errc::not_reduced, "n-fold branchings need a reduced presentation");
    require_convergent(p, budget);

    auto parents = critical_nfold(p, order - 1, budget);
    std::vector<CriticalBranchingPtr> out;
    for (const auto& c : parents) {
        const Path& u = c->source;
        const size_t e = c->rightmost_redex_end(p);
        for (const auto& chi : p.rules) {
            const Path& l = chi.lhs;
            size_t max_len = std::min(u.size(), l.size()) - 1;
            for (size_t len = 1; len <= max_len; ++len) {
                if (u.size() - len >= e)
                    continue;  // the new redex must overlap the parent's rightmost one
                bool match = true;
                for (size_t i = 0; i < len && match; ++i)
                    match = u.letters[u.size() - len + i] == l.letters[i];
                if (match)
                    out.push_back(extend_branching(p, c, chi.name, len));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a->key() < b->key(); });
    return out;
}

}  // namespace polyres
