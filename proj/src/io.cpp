#include "polyres/io.hpp"

#include <json.hpp>

namespace polyres {

using ordered_json = nlohmann::ordered_json;

namespace {

Path path_from_json(const ordered_json& letters, const ordered_json& start,
                    const std::string& where) {
    if (!letters.is_array() || !start.is_string())
        throw Error(Errc::syntax_error, where + ": expected letter array and start object");
    Path w;
    w.start = start.get<std::string>();
    for (const auto& l : letters) {
        if (!l.is_string())
            throw Error(Errc::syntax_error, where + ": letters must be strings");
        w.letters.push_back(l.get<std::string>());
    }
    return w;
}

}  // namespace

Polygraph parse_polygraph(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Errc::syntax_error, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw Error(Errc::syntax_error, "top-level value must be an object");

    Polygraph p;
    if (!doc.contains("objects") || !doc["objects"].is_array())
        throw Error(Errc::syntax_error, "missing 'objects' array");
    for (const auto& o : doc["objects"]) {
        if (!o.is_string())
            throw Error(Errc::syntax_error, "object names must be strings");
        p.objects.push_back(o.get<std::string>());
    }

    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw Error(Errc::syntax_error, "missing 'generators' array");
    for (const auto& g : doc["generators"]) {
        if (!g.is_object() || !g.contains("name") || !g.contains("src") || !g.contains("tgt"))
            throw Error(Errc::syntax_error, "generator entries need name/src/tgt");
        p.gens.push_back({g["name"].get<std::string>(), g["src"].get<std::string>(),
                          g["tgt"].get<std::string>()});
    }

    if (!doc.contains("rules") || !doc["rules"].is_array())
        throw Error(Errc::syntax_error, "missing 'rules' array");
    for (const auto& r : doc["rules"]) {
        if (!r.is_object() || !r.contains("name") || !r.contains("lhs") ||
            !r.contains("lhs_start") || !r.contains("rhs") || !r.contains("rhs_start"))
            throw Error(Errc::syntax_error, "rule entries need name/lhs/lhs_start/rhs/rhs_start");
        Rule rule;
        rule.name = r["name"].get<std::string>();
        rule.lhs = path_from_json(r["lhs"], r["lhs_start"], "rules/" + rule.name);
        rule.rhs = path_from_json(r["rhs"], r["rhs_start"], "rules/" + rule.name);
        p.rules.push_back(std::move(rule));
    }

    if (doc.contains("termination")) {
        const auto& t = doc["termination"];
        if (!t.is_object() || !t.contains("method"))
            throw Error(Errc::syntax_error, "'termination' needs a method");
        TerminationHint hint;
        hint.method = t["method"].get<std::string>();
        if (hint.method != "length" && hint.method != "weights" && hint.method != "inversion" &&
            hint.method != "assume")
            throw Error(Errc::syntax_error, "unknown termination method '" + hint.method + "'");
        if (t.contains("weights"))
            for (auto it = t["weights"].begin(); it != t["weights"].end(); ++it)
                hint.weights[it.key()] = it.value().get<long long>();
        if (t.contains("index"))
            for (auto it = t["index"].begin(); it != t["index"].end(); ++it)
                hint.index[it.key()] = it.value().get<long long>();
        p.termination = std::move(hint);
    }

    auto diags = validate(p);
    if (!diags.empty())
        throw Error(Errc::typing_error, diags.front().location + ": " + diags.front().message);
    return p;
}

std::string serialize_polygraph(const Polygraph& p) {
    ordered_json doc;
    doc["objects"] = ordered_json::array();
    for (const auto& o : p.objects)
        doc["objects"].push_back(o);
    doc["generators"] = ordered_json::array();
    for (const auto& g : p.gens)
        doc["generators"].push_back({{"name", g.name}, {"src", g.src}, {"tgt", g.tgt}});
    doc["rules"] = ordered_json::array();
    for (const auto& r : p.rules) {
        ordered_json jr;
        jr["name"] = r.name;
        jr["lhs"] = r.lhs.letters;
        jr["lhs_start"] = r.lhs.start;
        jr["rhs"] = r.rhs.letters;
        jr["rhs_start"] = r.rhs.start;
        doc["rules"].push_back(std::move(jr));
    }
    if (p.termination) {
        ordered_json jt;
        jt["method"] = p.termination->method;
        if (!p.termination->weights.empty()) {
            ordered_json w;
            for (const auto& [k, v] : p.termination->weights)
                w[k] = v;
            jt["weights"] = std::move(w);
        }
        if (!p.termination->index.empty()) {
            ordered_json ix;
            for (const auto& [k, v] : p.termination->index)
                ix[k] = v;
            jt["index"] = std::move(ix);
        }
        doc["termination"] = std::move(jt);
    }
    return doc.dump(2) + "\n";
}

std::string MonoidTable::mul(const std::string& a, const std::string& b) const {
    if (a == identity)
        return b;
    if (b == identity)
        return a;
    auto it = product.find({a, b});
    if (it == product.end())
        throw Error(Errc::non_associative_table, "missing product " + a + "*" + b);
    return it->second;
}

MonoidTable parse_monoid_table(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Errc::syntax_error, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("identity") ||
        !doc.contains("table"))
        throw Error(Errc::syntax_error, "monoid table needs elements/identity/table");
    MonoidTable t;
    for (const auto& e : doc["elements"])
        t.elements.push_back(e.get<std::string>());
    t.identity = doc["identity"].get<std::string>();
    for (auto a = doc["table"].begin(); a != doc["table"].end(); ++a)
        for (auto b = a.value().begin(); b != a.value().end(); ++b)
            t.product[{a.key(), b.key()}] = b.value().get<std::string>();
    // the identity row/column may be omitted in files
    for (const auto& x : t.elements) {
        t.product[{t.identity, x}] = x;
        t.product[{x, t.identity}] = x;
    }
    return t;
}

Polygraph builtin_as() {
    Polygraph p;
    p.objects = {"x"};
    p.gens = {{"a", "x", "x"}};
    Rule mu;
    mu.name = "mu";
    mu.lhs = {"x", {"a", "a"}};
    mu.rhs = {"x", {"a"}};
    p.rules = {mu};
    p.termination = TerminationHint{"length", {}, {}};
    return p;
}

Polygraph builtin_epi(int m) {
    // Truncation of the monotone-surjection category: objects 0..m, generators
    // s_i^(n): n+1 -> n named "s{i}_{n}", and exchange rules
    // s_i s_j => s_{j+1} s_i named "t{i}_{j}_{n}" with n the level of the
    // second letter.
    if (m < 1)
        throw Error(Errc::invalid_truncation, "epi truncation needs m >= 1");
    Polygraph p;
    for (int k = 0; k <= m; ++k)
        p.objects.push_back(std::to_string(k));
    auto gen_name = [](int i, int n) { return "s" + std::to_string(i) + "_" + std::to_string(n); };
    TerminationHint hint;
    hint.method = "inversion";
    for (int n = 0; n <= m - 1; ++n)
        for (int i = 0; i <= n; ++i) {
            p.gens.push_back({gen_name(i, n), std::to_string(n + 1), std::to_string(n)});
            hint.index[gen_name(i, n)] = i;
        }
    for (int n = 0; n + 2 <= m; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i) {
                Rule r;
                r.name = "t" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                         std::to_string(n);
                r.lhs = {std::to_string(n + 2), {gen_name(i, n + 1), gen_name(j, n)}};
                r.rhs = {std::to_string(n + 2), {gen_name(j + 1, n + 1), gen_name(i, n)}};
                p.rules.push_back(std::move(r));
            }
    if (p.rules.empty())
        throw Error(Errc::invalid_truncation, "epi(" + std::to_string(m) + ") holds no rule");
    p.termination = std::move(hint);
    return p;
}

Polygraph builtin_reduced_standard(const MonoidTable& t) {
    // one generator per non-identity element, one rule u.v => (uv) per pair of
    // non-identity elements; target is the identity path when uv = 1.
    for (const auto& x : t.elements) {
        if (x.empty() || x.find('.') != std::string::npos || x.rfind("1@", 0) == 0)
            throw Error(Errc::syntax_error, "element name '" + x + "' not usable as a generator");
        if (t.mul(t.identity, x) != x || t.mul(x, t.identity) != x)
            throw Error(Errc::non_associative_table, "identity law fails at '" + x + "'");
        for (const auto& y : t.elements)
            for (const auto& z : t.elements)
                if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z)))
                    throw Error(Errc::non_associative_table,
                                "associativity fails at (" + x + "," + y + "," + z + ")");
    }
    Polygraph p;
    p.objects = {"x"};
    for (const auto& u : t.elements)
        if (u != t.identity)
            p.gens.push_back({u, "x", "x"});
    for (const auto& u : t.elements) {
        if (u == t.identity)
            continue;
        for (const auto& v : t.elements) {
            if (v == t.identity)
                continue;
            Rule r;
            r.name = "m_" + u + "_" + v;
            r.lhs = {"x", {u, v}};
            const std::string uv = t.mul(u, v);
            r.rhs = (uv == t.identity) ? Path{"x", {}} : Path{"x", {uv}};
            p.rules.push_back(std::move(r));
        }
    }
    p.termination = TerminationHint{"length", {}, {}};
    return p;
}

}  // namespace polyres
