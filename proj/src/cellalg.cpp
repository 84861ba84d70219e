#include "polyres/cellalg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace polyres {

namespace {

std::string path_key(const Path& w) {
    std::string k = w.start + "~";
    for (const auto& l : w.letters)
        k += l + ".";
    return k;
}

std::string ptr_key(Cell c) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%p", static_cast<const void*>(c));
    return buf;
}

}  // namespace

void Sig::add_higher(const std::string& name, Cell src, Cell tgt) {
    if (polygraph().find_rule(name) || higher_.count(name))
        throw Error(Errc::typing_error, "cell name collision '" + name + "'");
    if (src->dim != tgt->dim)
        throw Error(Errc::dim_mismatch, "cell '" + name + "': source/target dimension mismatch");
    HigherGen g;
    g.name = name;
    g.dim = src->dim + 1;
    g.src = src;
    g.tgt = tgt;
    higher_.emplace(name, std::move(g));
}

const HigherGen* Sig::find_higher(const std::string& name) const {
    auto it = higher_.find(name);
    return it == higher_.end() ? nullptr : &it->second;
}

Cell Sig::put(CellExpr&& node) {
    std::string key;
    key += static_cast<char>('0' + static_cast<int>(node.tag));
    key += '|';
    key += std::to_string(node.dim) + "|" + node.name + "|" + path_key(node.word) + "|" +
           path_key(node.left) + "|" + path_key(node.right) + "|" + ptr_key(node.a) + "|" +
           ptr_key(node.b) + "|" + std::to_string(node.level);
    auto it = intern_.find(key);
    if (it != intern_.end())
        return it->second;
    arena_.push_back(std::move(node));
    Cell c = &arena_.back();
    intern_.emplace(std::move(key), c);
    return c;
}

Cell Sig::gen(const std::string& name) {
    if (const Rule* r = polygraph().find_rule(name)) {
        (void)r;
        CellExpr n;
        n.tag = CellTag::gen;
        n.dim = 2;
        n.name = name;
        return put(std::move(n));
    }
    if (const HigherGen* g = find_higher(name)) {
        CellExpr n;
        n.tag = CellTag::gen;
        n.dim = g->dim;
        n.name = name;
        return put(std::move(n));
    }
    throw Error(Errc::typing_error, "unknown cell generator '" + name + "'");
}

Cell Sig::id1(const Path& w) {
    polygraph().check_path(w, "id1");
    CellExpr n;
    n.tag = CellTag::id_word;
    n.dim = 2;
    n.word = w;
    return put(std::move(n));
}

Cell Sig::id(Cell x) {
    CellExpr n;
    n.tag = CellTag::id_cell;
    n.dim = x->dim + 1;
    n.a = x;
    return put(std::move(n));
}

int Sig::content_dim(Cell x) const {
    switch (x->tag) {
        case CellTag::gen: return x->dim;
        case CellTag::id_word: return 1;
        case CellTag::id_cell: return content_dim(x->a);
        case CellTag::inv: return content_dim(x->a);
        case CellTag::whisk: return content_dim(x->a);
        case CellTag::comp: return std::max(content_dim(x->a), content_dim(x->b));
    }
    return x->dim;
}

Cell Sig::inv(Cell x) {
    if (x->dim < 2)
        throw Error(Errc::inv_below_dim2, "inverse below dimension 2");
    switch (x->tag) {
        case CellTag::id_word:
        case CellTag::id_cell:
            return x;
        case CellTag::inv:
            return x->a;
        case CellTag::whisk: {
            // canonical leaf shape is Inv(Whisk(Gen)); keep the whisker inside
            CellExpr n;
            n.tag = CellTag::inv;
            n.dim = x->dim;
            n.a = x;
            return put(std::move(n));
        }
        case CellTag::comp: {
            const int T = x->dim;
            Cell ia = x->a->dim == T ? inv(x->a) : x->a;
            Cell ib = x->b->dim == T ? inv(x->b) : x->b;
            if (x->level == T - 1)
                return comp(x->level, ib, ia);
            return comp(x->level, ia, ib);
        }
        case CellTag::gen: {
            CellExpr n;
            n.tag = CellTag::inv;
            n.dim = x->dim;
            n.a = x;
            return put(std::move(n));
        }
    }
    throw Error(Errc::internal, "inv: unreachable");
}

Cell Sig::whisk(const Path& l, Cell x, const Path& r) {
    const Polygraph& p = polygraph();
    if (l.empty() && r.empty()) {
        // still validate endpoints against the given identities
        if (l.start != word_boundary(x, BSide::source).start)
            throw Error(Errc::boundary_mismatch, "whisker left endpoint mismatch");
        return x;
    }
    Path ws = word_boundary(x, BSide::source);
    if (p.path_end(l) != ws.start || p.path_end(ws) != r.start)
        throw Error(Errc::boundary_mismatch, "whisker contexts do not compose");
    switch (x->tag) {
        case CellTag::id_word:
            return id1(p.concat(p.concat(l, x->word), r));
        case CellTag::id_cell:
            return id(whisk(l, x->a, r));
        case CellTag::whisk:
            return whisk(p.concat(l, x->left), x->a, p.concat(x->right, r));
        case CellTag::inv:
            return inv(whisk(l, x->a, r));
        case CellTag::comp: {
            if (x->level == 0)
                return comp(0, whisk(l, x->a, p.empty_path(r.start)),
                            whisk(p.empty_path(l.start), x->b, r));
            return comp(x->level, whisk(l, x->a, r), whisk(l, x->b, r));
        }
        case CellTag::gen: {
            CellExpr n;
            n.tag = CellTag::whisk;
            n.dim = x->dim;
            n.left = l;
            n.right = r;
            n.a = x;
            return put(std::move(n));
        }
    }
    throw Error(Errc::internal, "whisk: unreachable");
}

void Sig::check_words_composable(int level, Cell x, Cell y) {
    const Polygraph& p = polygraph();
    if (level == 0) {
        if (p.path_end(word_boundary(x, BSide::source)) != word_boundary(y, BSide::source).start)
            throw Error(Errc::boundary_mismatch, "0-composition endpoint mismatch");
        return;
    }
    if (level == 1) {
        Path tx = word_boundary(x, BSide::target);
        Path sy = word_boundary(y, BSide::source);
        if (!(tx == sy))
            throw Error(Errc::boundary_mismatch, "1-boundary mismatch: '" + format_word(tx) +
                                                     "' vs '" + format_word(sy) + "'");
        return;
    }
    // level >= 2: operands are parallel at level 1
    if (!(word_boundary(x, BSide::source) == word_boundary(y, BSide::source)) ||
        !(word_boundary(x, BSide::target) == word_boundary(y, BSide::target)))
        throw Error(Errc::boundary_mismatch, "operands are not parallel at level 1");
}

Cell Sig::comp(int level, Cell x, Cell y) {
    const int T = std::max(x->dim, y->dim);
    if (level < 0 || level >= T)
        throw Error(Errc::dim_mismatch, "composition level " + std::to_string(level) +
                                            " out of range for dimension " + std::to_string(T));
    check_words_composable(level, x, y);
    if (level >= 2) {
        Cell tx = boundary(x, level, BSide::target);
        Cell sy = boundary(y, level, BSide::source);
        if (!equiv(tx, sy))
            throw Error(Errc::boundary_mismatch,
                        "boundary mismatch at level " + std::to_string(level));
    }
    // identities at or below the composition level vanish
    if (content_dim(x) <= level)
        return y;
    if (content_dim(y) <= level)
        return x;
    if (level == 0) {
        // whiskering disguised as a 0-composition
        if (content_dim(x) == 1)
            return whisk(word_boundary(x, BSide::source), y,
                         polygraph().empty_path(
                             polygraph().path_end(word_boundary(y, BSide::source))));
        if (content_dim(y) == 1)
            return whisk(polygraph().empty_path(word_boundary(x, BSide::source).start), x,
                         word_boundary(y, BSide::source));
    }
    if (y->tag == CellTag::comp && y->level == level)
        return comp(level, comp(level, x, y->a), y->b);
    CellExpr n;
    n.tag = CellTag::comp;
    n.dim = T;
    n.level = level;
    n.a = x;
    n.b = y;
    return put(std::move(n));
}

Path Sig::word_boundary(Cell x, BSide side) const {
    auto it = word_memo_.find(x);
    if (it != word_memo_.end())
        return side == BSide::source ? it->second.first : it->second.second;
    const Polygraph& p = polygraph();
    Path s, t;
    switch (x->tag) {
        case CellTag::gen:
            if (const Rule* r = p.find_rule(x->name)) {
                s = r->lhs;
                t = r->rhs;
            } else {
                const HigherGen* g = find_higher(x->name);
                s = word_boundary(g->src, BSide::source);
                t = word_boundary(g->src, BSide::target);
            }
            break;
        case CellTag::id_word:
            s = t = x->word;
            break;
        case CellTag::id_cell:
            s = word_boundary(x->a, BSide::source);
            t = word_boundary(x->a, BSide::target);
            break;
        case CellTag::inv:
            if (x->dim == 2) {
                s = word_boundary(x->a, BSide::target);
                t = word_boundary(x->a, BSide::source);
            } else {
                s = word_boundary(x->a, BSide::source);
                t = word_boundary(x->a, BSide::target);
            }
            break;
        case CellTag::whisk:
            s = p.concat(p.concat(x->left, word_boundary(x->a, BSide::source)), x->right);
            t = p.concat(p.concat(x->left, word_boundary(x->a, BSide::target)), x->right);
            break;
        case CellTag::comp:
            if (x->level == 0) {
                s = p.concat(word_boundary(x->a, BSide::source),
                             word_boundary(x->b, BSide::source));
                t = p.concat(word_boundary(x->a, BSide::target),
                             word_boundary(x->b, BSide::target));
            } else if (x->level == 1) {
                s = word_boundary(x->a, BSide::source);
                t = word_boundary(x->b, BSide::target);
            } else {
                s = word_boundary(x->a, BSide::source);
                t = word_boundary(x->a, BSide::target);
            }
            break;
    }
    word_memo_.emplace(x, std::make_pair(s, t));
    return side == BSide::source ? s : t;
}

Cell Sig::boundary(Cell x, int k, BSide side) {
    if (k < 2)
        throw Error(Errc::internal, "boundary: use word_boundary below level 2");
    if (k >= x->dim)
        return x;  // promotion
    std::string key = ptr_key(x) + "/" + std::to_string(k) + (side == BSide::source ? "s" : "t");
    auto it = boundary_memo_.find(key);
    if (it != boundary_memo_.end())
        return it->second;

    Cell r = nullptr;
    switch (x->tag) {
        case CellTag::gen: {
            const HigherGen* g = find_higher(x->name);
            if (!g)
                throw Error(Errc::internal, "rule has no cell boundary at level >= 2");
            Cell base = side == BSide::source ? g->src : g->tgt;
            r = k == x->dim - 1 ? base : boundary(base, k, side);
            break;
        }
        case CellTag::id_word:
            throw Error(Errc::internal, "id_word has no boundary at level >= 2");
        case CellTag::id_cell:
            r = k == x->dim - 1 ? x->a : boundary(x->a, k, side);
            break;
        case CellTag::inv:
            r = k == x->dim - 1
                    ? boundary(x->a, k, side == BSide::source ? BSide::target : BSide::source)
                    : boundary(x->a, k, side);
            break;
        case CellTag::whisk:
            r = whisk(x->left, boundary(x->a, k, side), x->right);
            break;
        case CellTag::comp:
            if (k > x->level)
                r = comp(x->level, boundary(x->a, k, side), boundary(x->b, k, side));
            else if (k == x->level)
                r = side == BSide::source ? boundary(x->a, k, side) : boundary(x->b, k, side);
            else
                r = boundary(x->a, k, side);
            break;
    }
    boundary_memo_.emplace(std::move(key), r);
    return r;
}

bool Sig::equiv(Cell x, Cell y) {
    if (x == y)
        return true;
    if (x->dim != y->dim)
        return false;
    std::string key = ptr_key(x) + "=" + ptr_key(y);
    auto it = equiv_memo_.find(key);
    if (it != equiv_memo_.end())
        return it->second;
    equiv_memo_.emplace(key, true);  // cut cycles optimistically; overwritten below
    bool ok = word_boundary(x, BSide::source) == word_boundary(y, BSide::source) &&
              word_boundary(x, BSide::target) == word_boundary(y, BSide::target) &&
              bracket(x) == bracket(y);
    if (ok && x->dim > 2)
        ok = equiv(boundary(x, x->dim - 1, BSide::source), boundary(y, y->dim - 1, BSide::source)) &&
             equiv(boundary(x, x->dim - 1, BSide::target), boundary(y, y->dim - 1, BSide::target));
    equiv_memo_[key] = ok;
    return ok;
}

NatElem Sig::derivation(const Path& w) const {
    const Polygraph& p = polygraph();
    const Rewriter& rw = *rw_;
    NatElem e;
    e.degree = 1;
    e.component = rw.nf(w);
    for (size_t i = 0; i < w.size(); ++i) {
        NatTerm t;
        t.left = rw.nf(p.prefix(w, i));
        t.gen = w.letters[i];
        t.right = rw.nf(p.suffix(w, i + 1));
        e.add_term(t, BigInt(1));
    }
    return e;
}

const NatElem& Sig::bracket(Cell x) {
    auto it = bracket_memo_.find(x);
    if (it != bracket_memo_.end())
        return it->second;
    const Polygraph& p = polygraph();
    const Rewriter& rw = *rw_;
    const int k = x->dim;
    NatElem e;
    e.degree = k;
    e.component = rw.nf(word_boundary(x, BSide::source));
    switch (x->tag) {
        case CellTag::gen: {
            Path ws = word_boundary(x, BSide::source);
            NatTerm t;
            t.left = p.empty_path(ws.start);
            t.gen = x->name;
            t.right = p.empty_path(p.path_end(ws));
            e.add_term(t, BigInt(1));
            break;
        }
        case CellTag::id_word:
        case CellTag::id_cell:
            break;
        case CellTag::inv:
            e = -bracket(x->a);
            break;
        case CellTag::whisk:
            e = bracket(x->a).acted(rw, x->left, x->right);
            break;
        case CellTag::comp: {
            if (x->level == 0) {
                if (x->a->dim == k)
                    e += bracket(x->a).acted(rw, p.empty_path(e.component.start),
                                             word_boundary(x->b, BSide::source));
                if (x->b->dim == k)
                    e += bracket(x->b).acted(rw, word_boundary(x->a, BSide::source),
                                             p.empty_path(p.path_end(
                                                 word_boundary(x->b, BSide::source))));
            } else {
                if (x->a->dim == k)
                    e += bracket(x->a);
                if (x->b->dim == k)
                    e += bracket(x->b);
            }
            break;
        }
    }
    e.component = rw.nf(word_boundary(x, BSide::source));
    return bracket_memo_.emplace(x, std::move(e)).first->second;
}

Cell Sig::sequentialize0(Cell x) {
    switch (x->tag) {
        case CellTag::gen:
        case CellTag::id_word:
            return x;
        case CellTag::id_cell: {
            Cell a = sequentialize0(x->a);
            return a == x->a ? x : id(a);
        }
        case CellTag::inv: {
            Cell a = sequentialize0(x->a);
            return a == x->a ? x : inv(a);
        }
        case CellTag::whisk: {
            Cell a = sequentialize0(x->a);
            return a == x->a ? x : whisk(x->left, a, x->right);
        }
        case CellTag::comp: {
            Cell a = sequentialize0(x->a);
            Cell b = sequentialize0(x->b);
            if (x->level == 0) {
                // left-first: (a *0 b) = (a . s1(b)) *1 (t1(a) . b)
                const Polygraph& p = polygraph();
                Path sb = word_boundary(b, BSide::source);
                Path ta = word_boundary(a, BSide::target);
                Cell l = whisk(p.empty_path(word_boundary(a, BSide::source).start), a, sb);
                Cell r = whisk(ta, b, p.empty_path(p.path_end(sb)));
                return comp(1, l, r);
            }
            if (a == x->a && b == x->b)
                return x;
            return comp(x->level, a, b);
        }
    }
    throw Error(Errc::internal, "sequentialize0: unreachable");
}

std::string Sig::render(Cell x) const {
    auto atomic = [](Cell c) {
        return c->tag == CellTag::gen || c->tag == CellTag::id_word ||
               c->tag == CellTag::id_cell;
    };
    std::ostringstream os;
    switch (x->tag) {
        case CellTag::gen:
            os << x->name;
            break;
        case CellTag::id_word:
            os << "id(" << format_word(x->word) << ")";
            break;
        case CellTag::id_cell:
            os << "id(" << render(x->a) << ")";
            break;
        case CellTag::inv:
            if (atomic(x->a))
                os << render(x->a) << "^-";
            else
                os << "(" << render(x->a) << ")^-";
            break;
        case CellTag::whisk: {
            if (!x->left.empty())
                os << format_word(x->left) << "·";
            if (atomic(x->a) || x->a->tag == CellTag::inv)
                os << render(x->a);
            else
                os << "(" << render(x->a) << ")";
            if (!x->right.empty())
                os << "·" << format_word(x->right);
            break;
        }
        case CellTag::comp:
            os << "(" << render(x->a) << " ⋆" << x->level << " " << render(x->b) << ")";
            break;
    }
    return os.str();
}

}  // namespace polyres
