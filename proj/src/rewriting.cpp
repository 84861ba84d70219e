#include "polyres/rewriting.hpp"

#include <algorithm>
#include <set>

namespace polyres {

Path step_source(const Polygraph& p, const RewriteStep& s) {
    const Rule* r = p.find_rule(s.rule);
    if (!r)
        throw Error(Errc::typing_error, "unknown rule '" + s.rule + "'");
    return p.concat(p.concat(s.left, r->lhs), s.right);
}

Path step_target(const Polygraph& p, const RewriteStep& s) {
    const Rule* r = p.find_rule(s.rule);
    if (!r)
        throw Error(Errc::typing_error, "unknown rule '" + s.rule + "'");
    return p.concat(p.concat(s.left, r->rhs), s.right);
}

size_t step_pos(const RewriteStep& s) { return s.left.size(); }

size_t step_redex_end(const Polygraph& p, const RewriteStep& s) {
    return s.left.size() + p.find_rule(s.rule)->lhs.size();
}

std::vector<RewriteStep> rewrite_steps(const Polygraph& p, const Path& w) {
    p.check_path(w, "rewrite_steps");
    std::vector<RewriteStep> out;
    for (const auto& r : p.rules) {
        const size_t n = r.lhs.size();
        if (n == 0 || n > w.size())
            continue;
        for (size_t pos = 0; pos + n <= w.size(); ++pos) {
            bool match = true;
            for (size_t i = 0; i < n; ++i)
                if (w.letters[pos + i] != r.lhs.letters[i]) {
                    match = false;
                    break;
                }
            if (match)
                out.push_back({p.prefix(w, pos), r.name, p.suffix(w, pos + n)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<RewriteStep> pick_step(const Polygraph& p, const Path& w, Side side) {
    auto steps = rewrite_steps(p, w);
    if (steps.empty())
        return std::nullopt;
    return side == Side::leftmost ? steps.front() : steps.back();
}

std::pair<Path, RewriteTrace> normal_form(const Polygraph& p, const Path& w, Side side,
                                          size_t budget) {
    RewriteTrace trace;
    trace.source = w;
    Path cur = w;
    while (auto s = pick_step(p, cur, side)) {
        if (trace.steps.size() >= budget)
            throw Error(Errc::step_budget_exceeded,
                        "step budget exhausted while reducing '" + format_word(w) + "'");
        trace.steps.push_back(*s);
        cur = step_target(p, *s);
    }
    return {cur, trace};
}

namespace {

bool lhs_longer_than_rhs(const Polygraph& p) {
    for (const auto& r : p.rules)
        if (r.lhs.size() <= r.rhs.size())
            return false;
    return true;
}

std::optional<std::string> check_weights(const Polygraph& p,
                                         const std::map<std::string, long long>& weights) {
    auto weigh = [&](const Path& w) -> std::optional<long long> {
        long long sum = 0;
        for (const auto& l : w.letters) {
            auto it = weights.find(l);
            if (it == weights.end() || it->second <= 0)
                return std::nullopt;
            sum += it->second;
        }
        return sum;
    };
    for (const auto& g : p.gens) {
        auto it = weights.find(g.name);
        if (it == weights.end() || it->second <= 0)
            return "missing or non-positive weight for '" + g.name + "'";
    }
    for (const auto& r : p.rules) {
        auto wl = weigh(r.lhs), wr = weigh(r.rhs);
        if (!wl || !wr || *wl <= *wr)
            return "no strict weight decrease for rule '" + r.name + "'";
    }
    return std::nullopt;
}

// Exchange shape x_i x_j => x_{j+1} x_i with i <= j; proves termination (the
// index sum grows by one per step and is bounded on fixed-length words), and
// each rule strictly drops the pair count nu.
std::optional<std::string> check_inversion(const Polygraph& p,
                                           const std::map<std::string, long long>& index) {
    for (const auto& g : p.gens)
        if (!index.count(g.name))
            return "missing index for '" + g.name + "'";
    for (const auto& r : p.rules) {
        if (r.lhs.size() != 2 || r.rhs.size() != 2)
            return "rule '" + r.name + "' is not a length-2 exchange rule";
        long long i = index.at(r.lhs.letters[0]);
        long long j = index.at(r.lhs.letters[1]);
        long long a = index.at(r.rhs.letters[0]);
        long long b = index.at(r.rhs.letters[1]);
        if (!(i <= j && a == j + 1 && b == i))
            return "rule '" + r.name + "' is not of shape x_i x_j => x_{j+1} x_i";
    }
    return std::nullopt;
}

// Bounded cycle search; returns a trace from w back to w if one is found.
std::optional<RewriteTrace> find_loop(const Polygraph& p, size_t max_len) {
    std::vector<Path> seeds;
    for (const auto& o : p.objects)
        seeds.push_back(Path{o, {}});
    for (size_t len = 0; len < max_len; ++len) {
        std::vector<Path> next;
        for (const auto& w : seeds)
            for (const auto& g : p.gens)
                if (g.src == p.path_end(w)) {
                    Path e = w;
                    e.letters.push_back(g.name);
                    next.push_back(e);
                }
        for (const auto& w : next) {
            // depth-first over reducts, bounded by a visited set
            std::vector<std::pair<Path, RewriteTrace>> stack;
            std::set<Path> seen;
            stack.push_back({w, RewriteTrace{w, {}}});
            size_t expansions = 0;
            while (!stack.empty() && expansions < 4096) {
                auto [cur, tr] = stack.back();
                stack.pop_back();
                ++expansions;
                for (const auto& s : rewrite_steps(p, cur)) {
                    Path t = step_target(p, s);
                    RewriteTrace tr2 = tr;
                    tr2.steps.push_back(s);
                    if (t == w && !tr2.steps.empty())
                        return tr2;
                    if (t.size() <= max_len && seen.insert(t).second)
                        stack.push_back({t, tr2});
                }
            }
        }
        seeds = std::move(next);
        if (seeds.empty())
            break;
    }
    return std::nullopt;
}

}  // namespace

TerminationCertificate check_termination(const Polygraph& p, size_t loop_search_len) {
    TerminationCertificate cert;
    const std::string method = p.termination ? p.termination->method : "length";
    cert.method = method;

    if (method == "assume") {
        cert.verdict = "assumed";
        cert.detail = "termination assumed by hint";
        return cert;
    }
    if (method == "length") {
        if (lhs_longer_than_rhs(p)) {
            cert.verdict = "proved";
            cert.detail = "every rule strictly shortens";
            return cert;
        }
        cert.detail = "some rule does not shorten";
    } else if (method == "weights") {
        auto fail = check_weights(p, p.termination ? p.termination->weights : std::map<std::string, long long>{});
        if (!fail) {
            cert.verdict = "proved";
            cert.detail = "strict weight decrease on every rule";
            return cert;
        }
        cert.detail = *fail;
    } else if (method == "inversion") {
        auto fail = check_inversion(p, p.termination ? p.termination->index : std::map<std::string, long long>{});
        if (!fail) {
            cert.verdict = "proved";
            cert.detail = "exchange rules; nu(lhs)=1 > 0=nu(rhs) and bounded index sum";
            return cert;
        }
        cert.detail = *fail;
    }

    if (auto loop = find_loop(p, loop_search_len)) {
        cert.verdict = "refuted";
        cert.detail = "rewriting cycle on '" + format_word(loop->source) + "'";
        cert.loop = std::move(loop);
        return cert;
    }
    cert.verdict = "unknown";
    return cert;
}

ConfluenceReport check_confluence(const Polygraph& p, size_t budget) {
    ConfluenceReport rep;
    rep.termination = check_termination(p);
    if (!rep.termination.usable())
        throw Error(Errc::not_terminating,
                    "termination " + rep.termination.verdict + ": " + rep.termination.detail);

    // declared below (branchings module provides the enumeration; to keep the
    // dependency one-way we re-enumerate order-2 overlaps here).
    std::vector<std::pair<RewriteStep, RewriteStep>> pairs;
    for (const auto& phi : p.rules) {
        for (const auto& psi : p.rules) {
            const Path& u = phi.lhs;
            const Path& v = psi.lhs;
            // suffix of lhs(phi) = proper prefix of lhs(psi)
            for (size_t len = 1; len < u.size() && len < v.size(); ++len) {
                bool match = true;
                for (size_t i = 0; i < len && match; ++i)
                    match = u.letters[u.size() - len + i] == v.letters[i];
                if (!match)
                    continue;
                Path tail = p.suffix(v, len);
                Path source = p.concat(u, tail);
                RewriteStep f{p.prefix(source, 0), phi.name, tail};
                RewriteStep g{p.prefix(source, u.size() - len), psi.name, p.empty_path(p.path_end(source))};
                if (!(f == g))
                    pairs.push_back({f, g});
            }
            // inclusion overlap (non-reduced presentations)
            if (&phi != &psi && v.size() <= u.size()) {
                for (size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
                    bool match = true;
                    for (size_t i = 0; i < v.size() && match; ++i)
                        match = u.letters[pos + i] == v.letters[i];
                    if (!match)
                        continue;
                    RewriteStep f{p.prefix(u, 0), phi.name, p.empty_path(p.path_end(u))};
                    RewriteStep g{p.prefix(u, pos), psi.name, p.suffix(u, pos + v.size())};
                    if (!(f == g))
                        pairs.push_back({std::min(f, g), std::max(f, g)});
                }
            }
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    });
    pairs.erase(std::unique(pairs.begin(), pairs.end(),
                            [](const auto& a, const auto& b) {
                                return a.first == b.first && a.second == b.second;
                            }),
                pairs.end());

    rep.confluent = true;
    for (const auto& [f, g] : pairs) {
        BranchingJoin bj;
        bj.left_leg = f;
        bj.right_leg = g;
        auto [nf1, tr1] = normal_form(p, step_target(p, f), Side::rightmost, budget);
        auto [nf2, tr2] = normal_form(p, step_target(p, g), Side::rightmost, budget);
        bj.left_nf = nf1;
        bj.right_nf = nf2;
        bj.left_trace = tr1;
        bj.right_trace = tr2;
        bj.joinable = (nf1 == nf2);
        if (!bj.joinable)
            rep.confluent = false;
        rep.branchings.push_back(std::move(bj));
    }
    return rep;
}

void require_convergent(const Polygraph& p, size_t budget) {
    auto rep = check_confluence(p, budget);
    if (!rep.confluent)
        throw Error(Errc::not_convergent, "presentation is not confluent");
}

bool word_problem(const Polygraph& p, const Path& u, const Path& v, size_t budget) {
    if (u.start != v.start || p.path_end(u) != p.path_end(v))
        throw Error(Errc::mismatched_endpoints, "words '" + format_word(u) + "' and '" +
                                                    format_word(v) + "' are not parallel");
    require_convergent(p, budget);
    return normal_form(p, u, Side::rightmost, budget).first ==
           normal_form(p, v, Side::rightmost, budget).first;
}

bool is_reduced(const Polygraph& p) {
    for (const auto& r : p.rules) {
        // rhs must be a normal form for all rules
        if (!rewrite_steps(p, r.rhs).empty())
            return false;
        // lhs must be a normal form for the other rules
        for (const auto& s : rewrite_steps(p, r.lhs))
            if (s.rule != r.name || !s.left.empty())
                return false;
    }
    return true;
}

Polygraph reduce(const Polygraph& p, size_t budget) {
    require_convergent(p, budget);

    // phase 1: retarget every rule at the normal form of its source
    Polygraph q = p;
    for (auto& r : q.rules)
        r.rhs = normal_form(p, r.lhs, Side::rightmost, budget).first;

    // phase 2: one rule per source word; keep the lexicographically first name
    std::sort(q.rules.begin(), q.rules.end(), [](const Rule& a, const Rule& b) {
        if (a.lhs.size() != b.lhs.size())
            return a.lhs.size() < b.lhs.size();
        if (!(a.lhs == b.lhs))
            return a.lhs < b.lhs;
        return a.name < b.name;
    });
    std::vector<Rule> dedup;
    for (const auto& r : q.rules)
        if (dedup.empty() || !(dedup.back().lhs == r.lhs))
            dedup.push_back(r);

    // phase 3: drop rules whose source is reducible by a kept smaller rule
    Polygraph out = p;
    out.rules.clear();
    for (const auto& r : dedup) {
        bool reducible = false;
        for (const auto& s : rewrite_steps(out, r.lhs))
            if (s.rule != r.name) {
                reducible = true;
                break;
            }
        if (!reducible)
            out.rules.push_back(r);
    }

    // restore the original rule order for the kept names
    std::vector<Rule> ordered;
    for (const auto& r : p.rules)
        for (const auto& k : out.rules)
            if (k.name == r.name)
                ordered.push_back(k);
    out.rules = std::move(ordered);
    return out;
}

Path Rewriter::nf(const Path& w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(w);
        if (it != memo_.end())
            return it->second;
    }
    Path r = normal_form(*p_, w, Side::rightmost, budget_).first;
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(w, r);
    return r;
}

std::vector<RewriteStep> Rewriter::rightmost_trace(const Path& w) const {
    return normal_form(*p_, w, Side::rightmost, budget_).second.steps;
}

}  // namespace polyres
