// polyres: batch interface to the rewriting, resolution and homology engines.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polyres/homology.hpp"
#include "polyres/io.hpp"

using namespace polyres;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::io_error, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::io_error, "cannot write '" + path + "'");
    out << content;
}

size_t step_budget() {
    if (const char* env = std::getenv("POLYRES_STEP_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0)
            return static_cast<size_t>(v);
    }
    return kDefaultStepBudget;
}

ordered_json step_json(const Polygraph& p, const RewriteStep& s) {
    ordered_json j;
    j["position"] = s.left.size();
    j["rule"] = s.rule;
    j["source"] = format_word(step_source(p, s));
    j["target"] = format_word(step_target(p, s));
    return j;
}

ordered_json trace_json(const Polygraph& p, const RewriteTrace& t) {
    ordered_json j = ordered_json::array();
    for (const auto& s : t.steps)
        j.push_back(step_json(p, s));
    return j;
}

ordered_json nat_json(const NatElem& e) {
    ordered_json j;
    j["degree"] = e.degree;
    j["component"] = format_word(e.component);
    j["terms"] = ordered_json::array();
    for (const auto& [t, c] : e.terms) {
        ordered_json jt;
        if (!c.fits_i64())
            throw Error(Errc::internal, "coefficient exceeds the JSON integer range");
        jt["coeff"] = c.to_i64();
        jt["left"] = t.left.letters;
        jt["gen"] = t.gen;
        jt["right"] = t.right.letters;
        j["terms"].push_back(std::move(jt));
    }
    return j;
}

ordered_json branching_json(const Polygraph&, const CriticalBranching& b) {
    ordered_json j;
    j["order"] = b.order;
    j["source"] = format_word(b.source);
    ordered_json rules = ordered_json::array();
    ordered_json positions = ordered_json::array();
    for (const auto& s : b.steps) {
        rules.push_back(s.rule);
        positions.push_back(s.left.size());
    }
    j["rules"] = std::move(rules);
    j["positions"] = std::move(positions);
    return j;
}

ordered_json termination_json(const TerminationCertificate& cert, const Polygraph& p) {
    ordered_json j;
    j["method"] = cert.method;
    j["verdict"] = cert.verdict;
    j["detail"] = cert.detail;
    if (cert.loop) {
        j["loop_source"] = format_word(cert.loop->source);
        j["loop"] = trace_json(p, *cert.loop);
    }
    return j;
}

struct Output {
    bool json = false;
    ordered_json doc;
    std::ostringstream text;

    int finish(int code) {
        if (json)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text.str();
        return code;
    }
};

Polygraph load(const std::string& file) { return parse_polygraph(read_file(file)); }

int cmd_validate(const std::string& file, Output& out) {
    Polygraph p;
    try {
        p = load(file);
    } catch (const Error& e) {
        if (e.code != Errc::typing_error)
            throw;
        // structured report for typing violations
        out.doc["valid"] = false;
        out.doc["diagnostics"] = ordered_json::array();
        out.doc["diagnostics"].push_back({{"location", "file"}, {"message", e.what()}});
        out.text << "invalid: " << e.what() << "\n";
        return out.finish(1);
    }
    auto diags = validate(p);
    out.doc["valid"] = diags.empty();
    out.doc["diagnostics"] = ordered_json::array();
    for (const auto& d : diags) {
        out.doc["diagnostics"].push_back({{"location", d.location}, {"message", d.message}});
        out.text << d.location << ": " << d.message << "\n";
    }
    if (diags.empty())
        out.text << "ok\n";
    return out.finish(diags.empty() ? 0 : 1);
}

int cmd_nf(const std::string& file, const std::string& word, const std::string& side,
           bool with_trace, Output& out) {
    Polygraph p = load(file);
    Path w = parse_word(p, word);
    auto cert = check_termination(p);
    if (!cert.usable())
        throw Error(Errc::not_terminating, "termination " + cert.verdict + ": " + cert.detail);
    Side s = side == "left" ? Side::leftmost : Side::rightmost;
    auto [nf, trace] = normal_form(p, w, s, step_budget());
    out.doc["word"] = format_word(w);
    out.doc["normal_form"] = format_word(nf);
    out.doc["steps"] = trace.steps.size();
    if (with_trace)
        out.doc["trace"] = trace_json(p, trace);
    out.text << format_word(nf) << "\n";
    if (with_trace)
        for (const auto& st : trace.steps)
            out.text << "  " << format_word(step_source(p, st)) << " => "
                     << format_word(step_target(p, st)) << "  (" << st.rule << " at "
                     << st.left.size() << ")\n";
    return out.finish(0);
}

int cmd_eq(const std::string& file, const std::string& w1, const std::string& w2, Output& out) {
    Polygraph p = load(file);
    bool eq = word_problem(p, parse_word(p, w1), parse_word(p, w2), step_budget());
    out.doc["equal"] = eq;
    out.text << (eq ? "true" : "false") << "\n";
    return out.finish(eq ? 0 : 1);
}

int cmd_check(const std::string& file, Output& out) {
    Polygraph p = load(file);
    auto cert = check_termination(p);
    out.doc["termination"] = termination_json(cert, p);
    if (!cert.usable()) {
        out.doc["convergent"] = false;
        out.text << "termination: " << cert.verdict << " (" << cert.detail << ")\n";
        return out.finish(1);
    }
    auto rep = check_confluence(p, step_budget());
    out.doc["confluent"] = rep.confluent;
    out.doc["convergent"] = rep.confluent;
    out.doc["critical_branchings"] = ordered_json::array();
    for (const auto& b : rep.branchings) {
        ordered_json j;
        j["source"] = format_word(step_source(p, b.left_leg));
        j["left_rule"] = b.left_leg.rule;
        j["right_rule"] = b.right_leg.rule;
        j["left_nf"] = format_word(b.left_nf);
        j["right_nf"] = format_word(b.right_nf);
        j["joinable"] = b.joinable;
        out.doc["critical_branchings"].push_back(std::move(j));
    }
    out.text << "termination: " << cert.verdict << " (" << cert.method << ")\n";
    out.text << "confluence: " << (rep.confluent ? "confluent" : "not confluent") << ", "
             << rep.branchings.size() << " critical branching(s)\n";
    for (const auto& b : rep.branchings)
        if (!b.joinable)
            out.text << "  non-joinable: " << format_word(step_source(p, b.left_leg)) << " -> "
                     << format_word(b.left_nf) << " vs " << format_word(b.right_nf) << "\n";
    return out.finish(rep.confluent ? 0 : 1);
}

int cmd_reduce(const std::string& file, const std::string& output, Output& out) {
    Polygraph p = load(file);
    Polygraph q = reduce(p, step_budget());
    std::string text = serialize_polygraph(q);
    if (!output.empty())
        write_file(output, text);
    out.doc["rules_before"] = p.rules.size();
    out.doc["rules_after"] = q.rules.size();
    out.doc["reduced"] = is_reduced(q);
    out.text << "kept " << q.rules.size() << " of " << p.rules.size() << " rule(s)\n";
    if (output.empty() && !out.json)
        out.text << text;
    return out.finish(0);
}

int cmd_branchings(const std::string& file, int order, Output& out) {
    Polygraph p = load(file);
    auto bs = critical_nfold(p, order, step_budget());
    out.doc["order"] = order;
    out.doc["count"] = bs.size();
    out.doc["branchings"] = ordered_json::array();
    for (const auto& b : bs) {
        out.doc["branchings"].push_back(branching_json(p, *b));
        out.text << format_word(b->source) << ":";
        for (const auto& s : b->steps)
            out.text << " " << s.rule << "@" << s.left.size();
        out.text << "\n";
    }
    out.text << bs.size() << " critical " << order << "-fold branching(s)\n";
    return out.finish(0);
}

int cmd_resolve(const std::string& file, int dim, Output& out) {
    Polygraph p = load(file);
    Resolution R = build_resolution(p, dim, step_budget());
    out.doc["max_dim"] = dim;
    out.doc["cells"] = ordered_json::array();
    ordered_json counts = ordered_json::object();
    for (int d = 3; d <= dim; ++d) {
        counts[std::to_string(d)] = R.cells(d).size();
        for (const auto& c : R.cells(d)) {
            ordered_json j;
            j["name"] = c.name;
            j["dim"] = c.dim;
            j["branching"] = branching_json(p, *c.branching);
            j["source"] = R.sig().render(c.source);
            j["target"] = R.sig().render(c.target);
            out.doc["cells"].push_back(std::move(j));
        }
    }
    out.doc["counts"] = std::move(counts);
    for (int d = 3; d <= dim; ++d)
        out.text << "dim " << d << ": " << R.cells(d).size() << " cell(s)\n";
    return out.finish(0);
}

int cmd_syzygies(const std::string& file, int dim, Output& out) {
    Polygraph p = load(file);
    Resolution R = build_resolution(p, dim + 1, step_budget());
    auto syz = syzygy_generators(R, dim);
    out.doc["degree"] = dim;
    out.doc["generators"] = ordered_json::array();
    for (const auto& e : syz) {
        out.doc["generators"].push_back(nat_json(e));
        out.text << e.pretty() << "\n";
    }
    out.text << syz.size() << " syzygy generator(s) in degree " << dim << "\n";
    return out.finish(0);
}

int cmd_verify(const std::string& file, int dim, int context_len, int jobs, Output& out) {
    Polygraph p = load(file);
    Resolution R = build_resolution(p, dim, step_budget());
    auto rep = verify_complex(R, dim, context_len, jobs);
    out.doc["max_degree"] = dim;
    out.doc["context_len"] = context_len;
    out.doc["all_pass"] = rep.all_pass;
    out.doc["checks"] = ordered_json::array();
    for (const auto& e : rep.entries) {
        ordered_json j;
        j["check"] = e.check;
        j["pass"] = e.pass;
        if (!e.detail.empty())
            j["detail"] = e.detail;
        out.doc["checks"].push_back(std::move(j));
        out.text << (e.pass ? "pass" : "FAIL") << "  " << e.check;
        if (!e.detail.empty())
            out.text << "  [" << e.detail << "]";
        out.text << "\n";
    }
    return out.finish(rep.all_pass ? 0 : 1);
}

int cmd_builtin(const std::string& kind, const std::string& output, Output& out) {
    Polygraph p;
    if (kind == "as") {
        p = builtin_as();
    } else if (kind.rfind("epi:", 0) == 0) {
        p = builtin_epi(std::atoi(kind.c_str() + 4));
    } else if (kind.rfind("monoid:", 0) == 0) {
        p = builtin_reduced_standard(parse_monoid_table(read_file(kind.substr(7))));
    } else {
        throw Error(Errc::usage_error, "unknown builtin '" + kind + "'");
    }
    std::string text = serialize_polygraph(p);
    if (!output.empty()) {
        write_file(output, text);
        out.doc["written"] = output;
        out.text << "wrote " << output << "\n";
    } else {
        out.doc = ordered_json::parse(text);
        out.text << text;
    }
    return out.finish(0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rewriting, polygraphic resolutions and Reidemeister-Fox-Squier homology"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string file, word, w1, w2, side = "right", output, kind;
    bool with_trace = false;
    int order = 2, dim = 3, context_len = 2, jobs = 1;

    auto* validate_cmd = app.add_subcommand("validate", "check a presentation file");
    validate_cmd->add_option("file", file)->required();

    auto* nf_cmd = app.add_subcommand("nf", "normal form of a word");
    nf_cmd->add_option("file", file)->required();
    nf_cmd->add_option("word", word)->required();
    nf_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
    nf_cmd->add_flag("--trace", with_trace);

    auto* eq_cmd = app.add_subcommand("eq", "decide the word problem");
    eq_cmd->add_option("file", file)->required();
    eq_cmd->add_option("w1", w1)->required();
    eq_cmd->add_option("w2", w2)->required();

    auto* check_cmd = app.add_subcommand("check", "termination and confluence report");
    check_cmd->add_option("file", file)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a convergent presentation");
    reduce_cmd->add_option("file", file)->required();
    reduce_cmd->add_option("-o,--output", output);

    auto* branchings_cmd = app.add_subcommand("branchings", "critical n-fold branchings");
    branchings_cmd->add_option("file", file)->required();
    branchings_cmd->add_option("--order", order)->check(CLI::PositiveNumber);

    auto* resolve_cmd = app.add_subcommand("resolve", "build the resolution up to a dimension");
    resolve_cmd->add_option("file", file)->required();
    resolve_cmd->add_option("--dim", dim)->check(CLI::PositiveNumber);

    auto* syzygies_cmd = app.add_subcommand("syzygies", "homological syzygy generators");
    syzygies_cmd->add_option("file", file)->required();
    syzygies_cmd->add_option("--dim", dim)->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "verify the RFS complex executably");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--dim", dim)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--context-len", context_len)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* builtin_cmd = app.add_subcommand("builtin", "emit a built-in presentation");
    builtin_cmd->add_option("kind", kind)->required();
    builtin_cmd->add_option("-o,--output", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    Output out;
    out.json = json;
    try {
        if (validate_cmd->parsed())
            return cmd_validate(file, out);
        if (nf_cmd->parsed())
            return cmd_nf(file, word, side, with_trace, out);
        if (eq_cmd->parsed())
            return cmd_eq(file, w1, w2, out);
        if (check_cmd->parsed())
            return cmd_check(file, out);
        if (reduce_cmd->parsed())
            return cmd_reduce(file, output, out);
        if (branchings_cmd->parsed())
            return cmd_branchings(file, order, out);
        if (resolve_cmd->parsed())
            return cmd_resolve(file, dim, out);
        if (syzygies_cmd->parsed())
            return cmd_syzygies(file, dim, out);
        if (verify_cmd->parsed())
            return cmd_verify(file, dim, context_len, jobs, out);
        if (builtin_cmd->parsed())
            return cmd_builtin(kind, output, out);
    } catch (const Error& e) {
        std::cerr << errc_name(e.code) << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand\n";
    return 2;
}
