#include "polyres/basics.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polyres {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::syntax_error: return "SyntaxError";
        case Errc::typing_error: return "TypingError";
        case Errc::non_associative_table: return "NonAssociativeTable";
        case Errc::invalid_truncation: return "InvalidTruncation";
        case Errc::not_convergent: return "NotConvergent";
        case Errc::not_terminating: return "NotTerminating";
        case Errc::not_reduced: return "NotReduced";
        case Errc::step_budget_exceeded: return "StepBudgetExceeded";
        case Errc::mismatched_endpoints: return "MismatchedEndpoints";
        case Errc::dim_mismatch: return "DimMismatch";
        case Errc::boundary_mismatch: return "BoundaryMismatch";
        case Errc::inv_below_dim2: return "InvBelowDim2";
        case Errc::degree_out_of_range: return "DegreeOutOfRange";
        case Errc::missing_cells: return "MissingCells";
        case Errc::dim_budget_exceeded: return "DimBudgetExceeded";
        case Errc::io_error: return "IoError";
        case Errc::usage_error: return "UsageError";
        case Errc::internal: return "InternalError";
    }
    return "Error";
}

const Gen1* Polygraph::find_gen(const std::string& name) const {
    for (const auto& g : gens)
        if (g.name == name)
            return &g;
    return nullptr;
}

const Rule* Polygraph::find_rule(const std::string& name) const {
    for (const auto& r : rules)
        if (r.name == name)
            return &r;
    return nullptr;
}

bool Polygraph::has_object(const std::string& name) const {
    return std::find(objects.begin(), objects.end(), name) != objects.end();
}

std::string Polygraph::path_end(const Path& w) const {
    std::string at = w.start;
    for (const auto& l : w.letters) {
        const Gen1* g = find_gen(l);
        if (!g || g->src != at)
            throw Error(Errc::typing_error, "ill-typed path '" + format_word(w) + "'");
        at = g->tgt;
    }
    return at;
}

bool Polygraph::path_ok(const Path& w) const {
    if (!has_object(w.start))
        return false;
    std::string at = w.start;
    for (const auto& l : w.letters) {
        const Gen1* g = find_gen(l);
        if (!g || g->src != at)
            return false;
        at = g->tgt;
    }
    return true;
}

void Polygraph::check_path(const Path& w, const std::string& where) const {
    if (!path_ok(w))
        throw Error(Errc::typing_error, where + ": ill-typed path '" + format_word(w) + "'");
}

Path Polygraph::concat(const Path& a, const Path& b) const {
    if (path_end(a) != b.start)
        throw Error(Errc::typing_error, "non-composable paths '" + format_word(a) + "' and '" +
                                            format_word(b) + "'");
    Path r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

Path Polygraph::sub_path(const Path& w, size_t pos, size_t len) const {
    if (pos + len > w.size())
        throw Error(Errc::internal, "sub_path out of range");
    Path r;
    r.start = w.start;
    for (size_t i = 0; i < pos; ++i) {
        const Gen1* g = find_gen(w.letters[i]);
        r.start = g->tgt;
    }
    r.letters.assign(w.letters.begin() + pos, w.letters.begin() + pos + len);
    return r;
}

Path Polygraph::letter_path(const std::string& gen) const {
    const Gen1* g = find_gen(gen);
    if (!g)
        throw Error(Errc::typing_error, "unknown generator '" + gen + "'");
    return Path{g->src, {gen}};
}

bool operator==(const Polygraph& a, const Polygraph& b) {
    auto rule_eq = [](const Rule& x, const Rule& y) {
        return x.name == y.name && x.lhs == y.lhs && x.rhs == y.rhs;
    };
    if (a.objects != b.objects || a.gens.size() != b.gens.size() || a.rules.size() != b.rules.size())
        return false;
    for (size_t i = 0; i < a.gens.size(); ++i)
        if (a.gens[i].name != b.gens[i].name || a.gens[i].src != b.gens[i].src ||
            a.gens[i].tgt != b.gens[i].tgt)
            return false;
    for (size_t i = 0; i < a.rules.size(); ++i)
        if (!rule_eq(a.rules[i], b.rules[i]))
            return false;
    if (a.termination.has_value() != b.termination.has_value())
        return false;
    if (a.termination &&
        (a.termination->method != b.termination->method ||
         a.termination->weights != b.termination->weights ||
         a.termination->index != b.termination->index))
        return false;
    return true;
}

std::vector<Diagnostic> validate(const Polygraph& p) {
    std::vector<Diagnostic> out;
    std::set<std::string> seen_obj;
    for (const auto& o : p.objects)
        if (!seen_obj.insert(o).second)
            out.push_back({"objects/" + o, "name collision"});

    std::set<std::string> seen_gen;
    for (const auto& g : p.gens) {
        if (!seen_gen.insert(g.name).second)
            out.push_back({"generators/" + g.name, "name collision"});
        if (!p.has_object(g.src))
            out.push_back({"generators/" + g.name, "unknown source object '" + g.src + "'"});
        if (!p.has_object(g.tgt))
            out.push_back({"generators/" + g.name, "unknown target object '" + g.tgt + "'"});
    }

    std::set<std::string> seen_rule;
    for (const auto& r : p.rules) {
        const std::string loc = "rules/" + r.name;
        if (!seen_rule.insert(r.name).second)
            out.push_back({loc, "name collision"});
        if (!p.path_ok(r.lhs)) {
            out.push_back({loc, "lhs is not a composable path"});
            continue;
        }
        if (!p.path_ok(r.rhs)) {
            out.push_back({loc, "rhs is not a composable path"});
            continue;
        }
        if (r.lhs.empty())
            out.push_back({loc, "identity lhs"});
        if (r.lhs.start != r.rhs.start || p.path_end(r.lhs) != p.path_end(r.rhs))
            out.push_back({loc, "parallel-endpoint violation"});
    }
    return out;
}

void require_valid(const Polygraph& p) {
    auto diags = validate(p);
    if (!diags.empty())
        throw Error(Errc::typing_error, diags.front().location + ": " + diags.front().message);
}

std::string format_word(const Path& w) {
    if (w.empty())
        return "1@" + w.start;
    std::ostringstream os;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            os << '.';
        os << w.letters[i];
    }
    return os.str();
}

Path parse_word(const Polygraph& p, const std::string& text) {
    if (text.empty())
        throw Error(Errc::syntax_error, "empty word");
    Path w;
    if (text.rfind("1@", 0) == 0) {
        w.start = text.substr(2);
        if (!p.has_object(w.start))
            throw Error(Errc::typing_error, "unknown object '" + w.start + "'");
        return w;
    }
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == '.') {
            if (cur.empty())
                throw Error(Errc::syntax_error, "empty letter in word '" + text + "'");
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (cur.empty())
        throw Error(Errc::syntax_error, "trailing '.' in word '" + text + "'");
    parts.push_back(cur);

    const Gen1* first = p.find_gen(parts.front());
    if (!first)
        throw Error(Errc::typing_error, "unknown generator '" + parts.front() + "'");
    w.start = first->src;
    w.letters = parts;
    p.check_path(w, "word");
    return w;
}

}  // namespace polyres
