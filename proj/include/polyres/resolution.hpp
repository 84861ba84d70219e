#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polyres/branchings.hpp"
#include "polyres/cellalg.hpp"

namespace polyres {

// Generating (n+1)-cell of the resolution, filling the confluence diagram of
// a critical n-fold branching.
struct ResolutionCell {
    std::string name;
    int dim = 3;
    CriticalBranchingPtr branching;
    Cell source = nullptr;
    Cell target = nullptr;
};

// The polygraphic resolution crit(P) truncated at max_dim, together with the
// rightmost normalisation strategy engine (sigma in star form) over it.
class Resolution {
public:
    Resolution(const Polygraph& p, int max_dim, size_t budget = kDefaultStepBudget);

    const Polygraph& polygraph() const { return p_; }
    const Rewriter& rewriter() const { return rw_; }
    Sig& sig() { return sig_; }
    int max_dim() const { return max_dim_; }

    const std::vector<ResolutionCell>& cells(int dim) const;
    const ResolutionCell* find_cell(const std::string& name) const;
    const ResolutionCell* cell_for(const CriticalBranching& b) const;
    const std::vector<CriticalBranchingPtr>& branchings(int order) const;

    // sigma_w as a 2-cell expression (the rightmost trace; identity when w is
    // a normal form)
    Cell trace_cell(const Path& w);
    Cell step_cell(const RewriteStep& s);

    // the star transform e* and the strategy value sigma*_e : e* -> hat(e)*
    Cell star(Cell e);
    Cell sigma_star(Cell e);

    // strategy value for a generator whiskered by a normal form on the right
    Cell sigma_star_gen(const std::string& gen, const Path& right_nf);

private:
    Polygraph p_;
    Rewriter rw_;
    Sig sig_;
    int max_dim_;
    std::vector<std::vector<ResolutionCell>> cells_;          // index: dim
    std::map<std::string, size_t> cell_index_;                // name -> (dim, idx) packed
    std::map<std::string, std::pair<int, size_t>> by_branching_;
    std::map<int, std::vector<CriticalBranchingPtr>> branchings_;
    std::map<Path, Cell> trace_memo_;
    std::map<Cell, Cell> sigma_memo_;

    Cell star_prefix(Cell e);
    Cell core(const std::string& gen, const Path& w);
    ResolutionCell build_cell(const CriticalBranchingPtr& b, const std::string& name);
};

// build_resolution: dims 3..N populated, one cell per critical (dim-1)-fold
// branching; requires a reduced convergent presentation.
inline Resolution build_resolution(const Polygraph& p, int max_dim,
                                   size_t budget = kDefaultStepBudget) {
    return Resolution(p, max_dim, budget);
}

}  // namespace polyres
