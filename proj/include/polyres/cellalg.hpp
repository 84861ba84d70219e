#pragma once

#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyres/natsys.hpp"
#include "polyres/rewriting.hpp"

namespace polyres {

enum class CellTag { gen, id_word, id_cell, comp, inv, whisk };

struct CellExpr;
using Cell = const CellExpr*;

// Immutable node of the expression algebra for cells of the free
// (n,1)-category over the base presentation plus resolution generators.
// Nodes are interned, so pointer equality is canonical-form equality.
struct CellExpr {
    CellTag tag;
    int dim = 2;
    std::string name;  // gen
    Path word;         // id_word
    Path left, right;  // whisk contexts
    Cell a = nullptr;
    Cell b = nullptr;
    int level = 0;  // comp
};

enum class BSide { source, target };

struct HigherGen {
    std::string name;
    int dim = 3;
    Cell src = nullptr;
    Cell tgt = nullptr;
};

// Signature of generators plus the canonicalizing node factory. Construction
// enforces typing: levels <= 1 by word equality, levels >= 2 by canonical
// equality with a cell-equivalence fallback (equal 1-boundaries and equal
// abelianisation at every level), which is what every downstream consumer of
// a boundary depends on.
class Sig {
public:
    explicit Sig(const Rewriter& rw) : rw_(&rw) {}
    Sig(const Sig&) = delete;

    const Polygraph& polygraph() const { return rw_->polygraph(); }
    const Rewriter& rewriter() const { return *rw_; }

    void add_higher(const std::string& name, Cell src, Cell tgt);
    const HigherGen* find_higher(const std::string& name) const;

    // factories
    Cell gen(const std::string& name);
    Cell id1(const Path& w);
    Cell id(Cell x);
    Cell inv(Cell x);
    Cell comp(int level, Cell x, Cell y);
    Cell whisk(const Path& l, Cell x, const Path& r);

    // boundaries; k >= 2 returns cells, k = 1 words
    Path word_boundary(Cell x, BSide side) const;
    Cell boundary(Cell x, int k, BSide side);
    // content dimension: the highest level at which x is not an identity
    int content_dim(Cell x) const;

    bool equiv(Cell x, Cell y);

    // abelianisation of a cell (at its top dimension) and of a word
    const NatElem& bracket(Cell x);
    NatElem derivation(const Path& w) const;

    Cell sequentialize0(Cell x);

    std::string render(Cell x) const;

private:
    const Rewriter* rw_;
    std::deque<CellExpr> arena_;
    std::unordered_map<std::string, Cell> intern_;
    std::unordered_map<std::string, HigherGen> higher_;
    std::unordered_map<Cell, NatElem> bracket_memo_;
    mutable std::unordered_map<Cell, std::pair<Path, Path>> word_memo_;
    std::unordered_map<std::string, Cell> boundary_memo_;
    std::unordered_map<std::string, bool> equiv_memo_;

    Cell put(CellExpr&& node);
    void check_words_composable(int level, Cell x, Cell y);
};

}  // namespace polyres
