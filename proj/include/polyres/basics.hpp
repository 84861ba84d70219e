#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyres {

enum class Errc {
    syntax_error,
    typing_error,
    non_associative_table,
    invalid_truncation,
    not_convergent,
    not_terminating,
    not_reduced,
    step_budget_exceeded,
    mismatched_endpoints,
    dim_mismatch,
    boundary_mismatch,
    inv_below_dim2,
    degree_out_of_range,
    missing_cells,
    dim_budget_exceeded,
    io_error,
    usage_error,
    internal,
};

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

const char* errc_name(Errc c);

// A 1-cell of the free category: start object plus a composable letter
// sequence. The start object makes identity paths typed.
struct Path {
    std::string start;
    std::vector<std::string> letters;

    bool empty() const { return letters.empty(); }
    size_t size() const { return letters.size(); }

    friend bool operator==(const Path& a, const Path& b) {
        return a.start == b.start && a.letters == b.letters;
    }
    friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.start != b.start)
            return a.start < b.start;
        return a.letters < b.letters;
    }
};

struct Gen1 {
    std::string name;
    std::string src;
    std::string tgt;
};

struct Rule {
    std::string name;
    Path lhs;
    Path rhs;
};

struct TerminationHint {
    std::string method;                          // length | weights | inversion | assume
    std::map<std::string, long long> weights;    // for "weights"
    std::map<std::string, long long> index;      // for "inversion"
};

struct Diagnostic {
    std::string location;
    std::string message;
};

struct Polygraph {
    std::vector<std::string> objects;
    std::vector<Gen1> gens;
    std::vector<Rule> rules;
    std::optional<TerminationHint> termination;

    const Gen1* find_gen(const std::string& name) const;
    const Rule* find_rule(const std::string& name) const;
    bool has_object(const std::string& name) const;

    // Typed path helpers; throw typing_error on ill-typed input.
    std::string path_end(const Path& w) const;
    bool path_ok(const Path& w) const;
    void check_path(const Path& w, const std::string& where) const;
    Path concat(const Path& a, const Path& b) const;
    Path sub_path(const Path& w, size_t pos, size_t len) const;
    Path prefix(const Path& w, size_t len) const { return sub_path(w, 0, len); }
    Path suffix(const Path& w, size_t pos) const { return sub_path(w, pos, w.size() - pos); }
    Path empty_path(const std::string& object) const { return Path{object, {}}; }
    Path letter_path(const std::string& gen) const;

    friend bool operator==(const Polygraph& a, const Polygraph& b);
};

// Structural validation; empty report iff all invariants hold.
std::vector<Diagnostic> validate(const Polygraph& p);
void require_valid(const Polygraph& p);

// Word syntax used by the CLI and reports: letters joined by '.', identity
// paths as "1@object".
std::string format_word(const Path& w);
Path parse_word(const Polygraph& p, const std::string& text);

}  // namespace polyres
