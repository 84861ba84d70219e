#include "polyres/resolution.hpp"

#include <algorithm>

namespace polyres {

Resolution::Resolution(const Polygraph& p, int max_dim, size_t budget)
    : p_(p), rw_(p_, budget), sig_(rw_), max_dim_(max_dim) {
    if (max_dim_ < 2)
        throw Error(Errc::degree_out_of_range, "resolution dimension must be >= 2");
    if (!is_reduced(p_))
        throw Error(Errc::not_reduced, "resolution needs a reduced presentation");
    require_convergent(p_, budget);

    cells_.resize(static_cast<size_t>(max_dim_) + 1);
    for (int dim = 3; dim <= max_dim_; ++dim) {
        const auto& bs = branchings(dim - 1);
        for (size_t i = 0; i < bs.size(); ++i) {
            std::string name = "w" + std::to_string(dim) + "_" + std::to_string(i);
            ResolutionCell cell = build_cell(bs[i], name);
            sig_.add_higher(name, cell.source, cell.target);
            cells_[dim].push_back(cell);
            by_branching_[bs[i]->key()] = {dim, i};
        }
    }
}

const std::vector<ResolutionCell>& Resolution::cells(int dim) const {
    static const std::vector<ResolutionCell> none;
    if (dim < 0 || dim >= static_cast<int>(cells_.size()))
        return none;
    return cells_[dim];
}

const ResolutionCell* Resolution::find_cell(const std::string& name) const {
    for (const auto& per_dim : cells_)
        for (const auto& c : per_dim)
            if (c.name == name)
                return &c;
    return nullptr;
}

const ResolutionCell* Resolution::cell_for(const CriticalBranching& b) const {
    auto it = by_branching_.find(b.key());
    if (it == by_branching_.end())
        return nullptr;
    return &cells_[it->second.first][it->second.second];
}

const std::vector<CriticalBranchingPtr>& Resolution::branchings(int order) const {
    auto& self = const_cast<Resolution&>(*this);
    auto it = self.branchings_.find(order);
    if (it == self.branchings_.end())
        it = self.branchings_.emplace(order, critical_nfold(p_, order, rw_.budget())).first;
    return it->second;
}

Cell Resolution::trace_cell(const Path& w) {
    auto it = trace_memo_.find(w);
    if (it != trace_memo_.end())
        return it->second;
    auto steps = rw_.rightmost_trace(w);
    Cell r;
    if (steps.empty()) {
        r = sig_.id1(w);
    } else {
        r = step_cell(steps[0]);
        for (size_t i = 1; i < steps.size(); ++i)
            r = sig_.comp(1, r, step_cell(steps[i]));
    }
    trace_memo_.emplace(w, r);
    return r;
}

Cell Resolution::step_cell(const RewriteStep& s) {
    return sig_.whisk(s.left, sig_.gen(s.rule), s.right);
}

Cell Resolution::star(Cell e) {
    const int k = e->dim;
    Cell r = sig_.comp(1, e, trace_cell(sig_.word_boundary(e, BSide::target)));
    for (int i = 2; i <= k - 1; ++i)
        r = sig_.comp(i, r, sigma_star(sig_.boundary(e, i, BSide::target)));
    return r;
}

Cell Resolution::star_prefix(Cell e) {
    const int k = e->dim;
    if (k == 2)
        return e;
    Cell r = sig_.comp(1, e, trace_cell(sig_.word_boundary(e, BSide::target)));
    for (int i = 2; i <= k - 2; ++i)
        r = sig_.comp(i, r, sigma_star(sig_.boundary(e, i, BSide::target)));
    return r;
}

Cell Resolution::sigma_star_gen(const std::string& gen, const Path& right_nf) {
    return core(gen, right_nf);
}

Cell Resolution::sigma_star(Cell e) {
    if (e->dim < 2)
        throw Error(Errc::internal, "sigma_star expects dimension >= 2");
    auto it = sigma_memo_.find(e);
    if (it != sigma_memo_.end())
        return it->second;

    Cell r = nullptr;
    const int k = e->dim;
    switch (e->tag) {
        case CellTag::id_word:
            // sigma*_{1_w} = 1_{sigma_w}
            r = sig_.id(trace_cell(e->word));
            break;
        case CellTag::id_cell:
            r = sig_.id(sigma_star(e->a));
            break;
        case CellTag::gen:
            r = core(e->name, p_.empty_path(p_.path_end(sig_.word_boundary(e, BSide::source))));
            break;
        case CellTag::whisk: {
            // the right decomposition of a right normalisation strategy
            const Path& l = e->left;
            const Path& rr = e->right;
            Cell g = e->a;  // a generator after canonicalization
            Path u = sig_.word_boundary(g, BSide::source);
            if (l.empty() && rw_.is_normal(rr)) {
                r = core(g->name, rr);
                break;
            }
            Path rhat = rw_.nf(rr);
            Cell t1 = sig_.whisk(p_.concat(l, u), trace_cell(rr), p_.empty_path(p_.path_end(rr)));
            Cell mid = sig_.whisk(l, sigma_star(sig_.whisk(p_.empty_path(u.start), g, rhat)),
                                  p_.empty_path(p_.path_end(rhat)));
            Cell t3 = trace_cell(p_.concat(l, rw_.nf(p_.concat(u, rr))));
            r = sig_.comp(1, sig_.comp(1, t1, mid), t3);
            break;
        }
        case CellTag::inv: {
            if (k == 2) {
                r = sig_.comp(1, e, sig_.inv(sigma_star(e->a)));
            } else {
                Cell x = sig_.comp(1, e, trace_cell(sig_.word_boundary(e->a, BSide::target)));
                r = sig_.comp(k - 1, x, sig_.inv(sigma_star(e->a)));
            }
            break;
        }
        case CellTag::comp: {
            if (e->level == 0) {
                r = sigma_star(sig_.sequentialize0(e));
                break;
            }
            if (e->level == k - 1) {
                Cell sp = star_prefix(e->a);
                r = sig_.comp(k, sig_.comp(k - 1, sp, sigma_star(e->b)), sigma_star(e->a));
                break;
            }
            if (e->level == 1) {
                Cell x = e->a->dim >= 3 ? sig_.boundary(e->a, 2, BSide::source) : e->a;
                r = sig_.comp(2, sig_.comp(1, x, sigma_star(e->b)), sigma_star(e->a));
                break;
            }
            // composites at levels 2..k-2 first appear inside resolutions of
            // dimension > 5; the strategy does not cover them
            throw Error(Errc::dim_budget_exceeded,
                        "strategy value for a level-" + std::to_string(e->level) +
                            " composite at dimension " + std::to_string(k) +
                            " (resolutions are supported through dimension 5)");
        }
    }
    sigma_memo_.emplace(e, r);
    return r;
}

// sigma*_{g.w} for a generator g with 1-source x and a normal right whisker w,
// by case analysis on the branching (g's first leg extended over w).
Cell Resolution::core(const std::string& gen, const Path& w) {
    Cell g = sig_.gen(gen);
    const int n = g->dim;
    Cell gw = sig_.whisk(p_.empty_path(sig_.word_boundary(g, BSide::source).start), g, w);
    Path x = sig_.word_boundary(g, BSide::source);
    Path z = p_.concat(x, w);

    auto rho = pick_step(p_, z, Side::rightmost);
    if (!rho || step_redex_end(p_, *rho) <= x.size()) {
        // aspherical: the rightmost step of x.w does not reach into w
        return sig_.id(star(gw));
    }
    const size_t pos = step_pos(*rho);
    if (pos >= x.size())
        throw Error(Errc::internal, "core: rightmost redex inside a normal whisker");
    const size_t eaten = step_redex_end(p_, *rho) - x.size();
    const size_t overlap = x.size() - pos;
    Path w1 = p_.prefix(w, eaten);
    Path w2 = p_.suffix(w, eaten);

    // the critical extension b1 and its resolution cell
    CriticalBranchingPtr b1;
    if (n == 2) {
        b1 = make_order2(p_, gen, rho->rule, overlap);
    } else {
        const ResolutionCell* self = find_cell(gen);
        if (!self)
            throw Error(Errc::missing_cells, "no branching recorded for cell '" + gen + "'");
        b1 = extend_branching(p_, self->branching, rho->rule, overlap);
    }
    const ResolutionCell* W = cell_for(*b1);
    if (!W)
        throw Error(Errc::dim_budget_exceeded,
                    "strategy needs a cell of dimension " + std::to_string(n + 1) +
                        " beyond the built resolution");

    Path xhat = rw_.nf(x);
    Path m1 = rw_.nf(p_.concat(x, w1));

    // conjugator rewriting sigma_{xhat.w} into the route through m1.w2
    Cell y1 = sig_.whisk(p_.empty_path(xhat.start), trace_cell(p_.concat(xhat, w1)), w2);
    Cell y1inv = sig_.inv(sigma_star(y1));

    // the new cell, whiskered and re-aimed at the global normal form
    Cell a2 = sig_.comp(1, sig_.whisk(p_.empty_path(x.start), sig_.gen(W->name), w2),
                        trace_cell(p_.concat(m1, w2)));

    if (n == 2 || w2.empty()) {
        Cell lead =
            n == 2 ? gw
                   : sig_.whisk(p_.empty_path(x.start), sig_.boundary(g, 2, BSide::source), w);
        Cell f1 = sig_.comp(1, lead, y1inv);

        // conjugator absorbing the trace of the step target
        RewriteStep rho_w1{rho->left, rho->rule,
                           p_.empty_path(w1.empty() ? p_.path_end(x) : p_.path_end(w1))};
        Path wprime = step_target(p_, rho_w1);
        Cell y3 = sig_.whisk(p_.empty_path(wprime.start), trace_cell(wprime), w2);
        Cell r3 = sig_.comp(1, step_cell(*rho), sigma_star(y3));

        return sig_.comp(2, sig_.comp(2, f1, a2), r3);
    }

    // n >= 3 with a nonempty trailing whisker: conjugate with strategy values
    // of the whiskered boundary strategies, so that the sigma*-endpoints agree
    // with (g.w)* and sigma*(s(g).w) at the abelianised level.
    Path empty_x = p_.empty_path(x.start);
    Cell xt = sig_.whisk(
        p_.empty_path(x.start),
        sigma_star(sig_.whisk(empty_x, sig_.boundary(g, n - 1, BSide::target), w1)), w2);
    Cell xs = sig_.whisk(
        p_.empty_path(x.start),
        sigma_star(sig_.whisk(empty_x, sig_.boundary(g, n - 1, BSide::source), w1)), w2);
    Cell lam = sig_.comp(1, gw, y1inv);
    Cell lead2 = sig_.whisk(empty_x, sig_.boundary(g, 2, BSide::source), w);
    Cell lam2 = sig_.comp(1, lead2, y1inv);
    Cell rho2 = sigma_star(
        sig_.whisk(p_.empty_path(x.start), trace_cell(p_.concat(x, w1)), w2));

    Cell f1 = sig_.comp(n - 1, lam, sig_.inv(sigma_star(xt)));
    Cell f2 = sig_.comp(n - 1, sig_.comp(n - 1, lam2, a2), rho2);
    Cell f3 = sig_.comp(n - 1, lam2, sigma_star(xs));
    return sig_.comp(n, sig_.comp(n, f1, f2), f3);
}

ResolutionCell Resolution::build_cell(const CriticalBranchingPtr& b, const std::string& name) {
    ResolutionCell cell;
    cell.name = name;
    cell.dim = b->order + 1;
    cell.branching = b;

    // parent cell (the rule of the leftmost leg for order 2) and the whisker
    Path parent_source = b->order == 2 ? p_.find_rule(b->steps[0].rule)->lhs : b->parent->source;
    Path tail = p_.suffix(b->source, parent_source.size());

    if (b->order == 2) {
        Cell phi = sig_.gen(b->steps[0].rule);
        Cell whisked = sig_.whisk(p_.empty_path(b->source.start), phi, tail);
        cell.source = star(whisked);
        cell.target = trace_cell(b->source);
    } else {
        const ResolutionCell* parent = cell_for(*b->parent);
        if (!parent)
            throw Error(Errc::missing_cells, "parent cell missing for '" + name + "'");
        Cell pg = sig_.gen(parent->name);
        Cell whisked = sig_.whisk(p_.empty_path(b->source.start), pg, tail);
        cell.source = star(whisked);
        cell.target = sigma_star(
            sig_.whisk(p_.empty_path(b->source.start),
                       sig_.boundary(pg, parent->dim - 1, BSide::source), tail));
    }

    // every resolution cell is a sphere
    if (!sig_.equiv(cell.source, cell.target) &&
        (!(sig_.word_boundary(cell.source, BSide::source) ==
           sig_.word_boundary(cell.target, BSide::source)) ||
         !(sig_.word_boundary(cell.source, BSide::target) ==
           sig_.word_boundary(cell.target, BSide::target))))
        throw Error(Errc::boundary_mismatch, "cell '" + name + "' is not parallel at level 1");
    if (cell.dim >= 4) {
        if (!sig_.equiv(sig_.boundary(cell.source, cell.dim - 2, BSide::source),
                        sig_.boundary(cell.target, cell.dim - 2, BSide::source)) ||
            !sig_.equiv(sig_.boundary(cell.source, cell.dim - 2, BSide::target),
                        sig_.boundary(cell.target, cell.dim - 2, BSide::target)))
            throw Error(Errc::boundary_mismatch, "cell '" + name + "' source/target not parallel");
    }
    return cell;
}

}  // namespace polyres
