#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polyres/resolution.hpp"

namespace polyres {

// Abelianisation: the derivation of a word (degree 1) or the signed sum of
// generating cells in context (degree >= 2).
NatElem bracket(Resolution& R, Cell e);
NatElem bracket_word(Resolution& R, const Path& w);

// Generators of each degree of the Reidemeister-Fox-Squier complex.
struct DegreeGen {
    std::string name;
    Path word;  // 1-source of the generator; identity path for degree 0
};
std::vector<DegreeGen> degree_generators(Resolution& R, int degree);

// k-th boundary map, extended linearly with the context action (degree >= 1).
NatElem delta(Resolution& R, const NatElem& x);
// augmentation (degree 0)
BigInt epsilon(const NatElem& x);

// Right-handed contracting homotopy, degree k -> k+1 (k >= 0); degree -1 takes
// an integer to c.(w,1).
NatElem homotopy(Resolution& R, const NatElem& x);
NatElem homotopy_neg1(Resolution& R, const BigInt& c, const Path& component);

// delta of the unit element of each resolution cell of dimension n+1; each
// output is checked to lie in ker(delta_n).
std::vector<NatElem> syzygy_generators(Resolution& R, int n);

struct VerifyEntry {
    std::string check;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    bool all_pass = true;
    std::vector<VerifyEntry> entries;
};

// Executable exactness: delta.delta = 0 and eps.delta_1 = 0 on generators, and
// the homotopy identity on basis triples with contexts of length <= L.
VerifyReport verify_complex(Resolution& R, int max_degree, int context_len, int jobs = 1);

// Normal-form words of length <= max_len, sorted; used for context
// enumeration and test oracles.
std::vector<Path> normal_words_upto(const Polygraph& p, size_t max_len);

}  // namespace polyres
