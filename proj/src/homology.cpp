#include "polyres/homology.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace polyres {

NatElem bracket(Resolution& R, Cell e) { return R.sig().bracket(e); }

NatElem bracket_word(Resolution& R, const Path& w) { return R.sig().derivation(w); }

std::vector<DegreeGen> degree_generators(Resolution& R, int degree) {
    const Polygraph& p = R.polygraph();
    std::vector<DegreeGen> out;
    if (degree == 0) {
        for (const auto& o : p.objects)
            out.push_back({o, p.empty_path(o)});
    } else if (degree == 1) {
        for (const auto& g : p.gens)
            out.push_back({g.name, p.letter_path(g.name)});
    } else if (degree == 2) {
        for (const auto& r : p.rules)
            out.push_back({r.name, r.lhs});
    } else {
        for (const auto& c : R.cells(degree))
            out.push_back({c.name, R.sig().word_boundary(c.source, BSide::source)});
    }
    return out;
}

namespace {

// boundary of a single degree-k generator with trivial contexts
NatElem gen_boundary(Resolution& R, int degree, const std::string& gen) {
    const Polygraph& p = R.polygraph();
    const Rewriter& rw = R.rewriter();
    if (degree == 1) {
        const Gen1* g = p.find_gen(gen);
        Path letter = p.letter_path(gen);
        NatElem e = nat_zero(0, rw.nf(letter));
        e.add_term({rw.nf(letter), g->tgt, p.empty_path(g->tgt)}, BigInt(1));
        e.add_term({p.empty_path(g->src), g->src, rw.nf(letter)}, BigInt(-1));
        return e;
    }
    if (degree == 2) {
        const Rule* r = p.find_rule(gen);
        if (!r)
            throw Error(Errc::missing_cells, "unknown rule '" + gen + "'");
        return R.sig().derivation(r->lhs) - R.sig().derivation(r->rhs);
    }
    const ResolutionCell* c = R.find_cell(gen);
    if (!c || c->dim != degree)
        throw Error(Errc::missing_cells,
                    "no generator '" + gen + "' in degree " + std::to_string(degree));
    return R.sig().bracket(c->source) - R.sig().bracket(c->target);
}

}  // namespace

NatElem delta(Resolution& R, const NatElem& x) {
    if (x.degree < 1)
        throw Error(Errc::degree_out_of_range, "delta needs degree >= 1");
    const Rewriter& rw = R.rewriter();
    NatElem out = nat_zero(x.degree - 1, x.component);
    for (const auto& [t, c] : x.terms) {
        NatElem b = gen_boundary(R, x.degree, t.gen).acted(rw, t.left, t.right);
        for (const auto& [bt, bc] : b.terms)
            out.add_term(bt, c * bc);
    }
    return out;
}

BigInt epsilon(const NatElem& x) {
    if (x.degree != 0)
        throw Error(Errc::degree_out_of_range, "epsilon needs degree 0");
    BigInt s;
    for (const auto& [t, c] : x.terms)
        s += c;
    return s;
}

NatElem homotopy_neg1(Resolution& R, const BigInt& c, const Path& component) {
    const Polygraph& p = R.polygraph();
    const Rewriter& rw = R.rewriter();
    Path w = rw.nf(component);
    NatElem e = nat_zero(0, w);
    e.add_term({w, p.path_end(w), p.empty_path(p.path_end(w))}, c);
    return e;
}

NatElem homotopy(Resolution& R, const NatElem& x) {
    if (x.degree < 0)
        throw Error(Errc::degree_out_of_range, "homotopy needs degree >= 0");
    const Polygraph& p = R.polygraph();
    const Rewriter& rw = R.rewriter();
    NatElem out = nat_zero(x.degree + 1, x.component);
    for (const auto& [t, c] : x.terms) {
        NatElem piece;
        if (x.degree == 0) {
            // sigma_0(u, v) = -u.[v]
            piece = -(R.sig().derivation(t.right).acted(rw, t.left, p.empty_path(p.path_end(t.right))));
        } else if (x.degree == 1) {
            Path word = p.concat(p.letter_path(t.gen), t.right);
            piece = R.sig().bracket(R.trace_cell(word)).acted(
                rw, t.left, p.empty_path(p.path_end(word)));
        } else {
            Cell val = R.sigma_star_gen(t.gen, t.right);
            piece = R.sig().bracket(val).acted(
                rw, t.left, p.empty_path(p.path_end(R.sig().word_boundary(val, BSide::source))));
        }
        for (const auto& [pt, pc] : piece.terms)
            out.add_term(pt, c * pc);
    }
    return out;
}

std::vector<NatElem> syzygy_generators(Resolution& R, int n) {
    if (n < 2)
        throw Error(Errc::degree_out_of_range, "syzygies start at degree 2");
    if (n + 1 > R.max_dim())
        throw Error(Errc::missing_cells, "resolution not built to dimension " + std::to_string(n + 1));
    const Polygraph& p = R.polygraph();
    const Rewriter& rw = R.rewriter();
    std::vector<NatElem> out;
    for (const auto& c : R.cells(n + 1)) {
        Path word = R.sig().word_boundary(c.source, BSide::source);
        NatElem unit = nat_unit(rw, n + 1, p.empty_path(word.start), c.name,
                                p.empty_path(p.path_end(word)), word);
        NatElem d = delta(R, unit);
        NatElem dd = delta(R, d);
        if (!dd.is_zero())
            throw Error(Errc::internal, "syzygy of '" + c.name + "' is not a cycle");
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Path> normal_words_upto(const Polygraph& p, size_t max_len) {
    std::vector<Path> out;
    std::vector<Path> frontier;
    for (const auto& o : p.objects) {
        out.push_back(p.empty_path(o));
        frontier.push_back(p.empty_path(o));
    }
    for (size_t len = 1; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const auto& w : frontier)
            for (const auto& g : p.gens) {
                if (g.src != p.path_end(w))
                    continue;
                Path e = w;
                e.letters.push_back(g.name);
                next.push_back(e);
            }
        for (const auto& w : next)
            if (!pick_step(p, w, Side::rightmost))
                out.push_back(w);
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// delta.delta = 0 on every generator of one degree
std::pair<bool, std::string> check_dd_degree(Resolution& R, int d) {
    const Polygraph& p = R.polygraph();
    const Rewriter& rw = R.rewriter();
    for (const auto& g : degree_generators(R, d)) {
        NatElem unit = nat_unit(rw, d, p.empty_path(g.word.start), g.name,
                                p.empty_path(p.path_end(g.word)), g.word);
        NatElem d1 = delta(R, unit);
        if (d - 1 >= 1) {
            NatElem d2 = delta(R, d1);
            if (!d2.is_zero())
                return {false, "delta.delta[" + g.name + "] = " + d2.pretty()};
        }
    }
    return {true, ""};
}

}  // namespace

VerifyReport verify_complex(Resolution& R, int max_degree, int context_len, int jobs) {
    VerifyReport rep;
    const Polygraph& p = R.polygraph();
    const Rewriter& rw = R.rewriter();
    auto add = [&rep](const std::string& check, bool pass, const std::string& detail) {
        rep.entries.push_back({check, pass, detail});
        if (!pass)
            rep.all_pass = false;
    };

    // (a) delta.delta = 0 per degree; with jobs > 1 each degree runs on its
    // own thread over a private resolution (the engines share nothing)
    std::vector<std::pair<bool, std::string>> dd(static_cast<size_t>(std::max(0, max_degree - 1)));
    if (jobs > 1 && max_degree > 2) {
        std::vector<std::thread> workers;
        std::atomic<int> next(2);
        int nthreads = std::min(jobs, max_degree - 1);
        for (int t = 0; t < nthreads; ++t)
            workers.emplace_back([&]() {
                Resolution local(R.polygraph(), R.max_dim(), R.rewriter().budget());
                for (int d = next.fetch_add(1); d <= max_degree; d = next.fetch_add(1))
                    dd[d - 2] = check_dd_degree(local, d);
            });
        for (auto& w : workers)
            w.join();
    } else {
        for (int d = 2; d <= max_degree; ++d)
            dd[d - 2] = check_dd_degree(R, d);
    }
    for (int d = 2; d <= max_degree; ++d)
        add("delta_" + std::to_string(d - 1) + ".delta_" + std::to_string(d) + " = 0",
            dd[d - 2].first, dd[d - 2].second);

    // (b) eps.delta_1 = 0 on every generating 1-cell
    {
        bool pass = true;
        std::string detail;
        for (const auto& g : degree_generators(R, 1)) {
            NatElem unit = nat_unit(rw, 1, p.empty_path(g.word.start), g.name,
                                    p.empty_path(p.path_end(g.word)), g.word);
            if (!(epsilon(delta(R, unit)) == BigInt(0))) {
                pass = false;
                detail = "eps.delta_1[" + g.name + "] != 0";
                break;
            }
        }
        add("eps.delta_1 = 0", pass, detail);
    }

    // (c) homotopy identity on basis triples with short normal contexts
    auto contexts = normal_words_upto(p, static_cast<size_t>(context_len));
    for (int k = 0; k <= max_degree - 1; ++k) {
        bool pass = true;
        std::string detail;
        for (const auto& g : degree_generators(R, k)) {
            for (const auto& u : contexts) {
                if (p.path_end(u) != g.word.start)
                    continue;
                for (const auto& v : contexts) {
                    if (v.start != p.path_end(g.word))
                        continue;
                    NatElem x = nat_unit(rw, k, u, g.name, v, p.concat(p.concat(u, g.word), v));
                    NatElem lhs = delta(R, homotopy(R, x));
                    if (k == 0) {
                        lhs += homotopy_neg1(R, epsilon(x), x.component);
                    } else {
                        lhs += homotopy(R, delta(R, x));
                    }
                    if (!(lhs == x)) {
                        pass = false;
                        detail = "id fails at " + x.pretty() + ": got " + lhs.pretty();
                        break;
                    }
                }
                if (!pass)
                    break;
            }
            if (!pass)
                break;
        }
        std::string tail = k == 0 ? "sigma_-1.eps" : "sigma_" + std::to_string(k - 1) +
                                                        ".delta_" + std::to_string(k);
        add("delta_" + std::to_string(k + 1) + ".sigma_" + std::to_string(k) + " + " + tail +
                " = id",
            pass, detail);
    }
    return rep;
}

}  // namespace polyres
