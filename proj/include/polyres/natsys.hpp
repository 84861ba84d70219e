#pragma once

#include <map>
#include <string>

#include "polyres/basics.hpp"
#include "polyres/bigint.hpp"
#include "polyres/rewriting.hpp"

namespace polyres {

struct NatTerm {
    Path left;
    std::string gen;
    Path right;

    friend bool operator<(const NatTerm& a, const NatTerm& b) {
        if (!(a.left == b.left))
            return a.left < b.left;
        if (a.gen != b.gen)
            return a.gen < b.gen;
        return a.right < b.right;
    }
    friend bool operator==(const NatTerm& a, const NatTerm& b) {
        return a.left == b.left && a.gen == b.gen && a.right == b.right;
    }
};

// Element of a free natural system: an integer combination of context triples
// u[g]v, all living over the same 1-cell of the presented category.
struct NatElem {
    int degree = 0;
    Path component;  // normal form
    std::map<NatTerm, BigInt> terms;

    bool is_zero() const { return terms.empty(); }

    void add_term(const NatTerm& t, const BigInt& c);

    NatElem& operator+=(const NatElem& o);
    NatElem& operator-=(const NatElem& o);
    friend NatElem operator+(NatElem a, const NatElem& b) { return a += b; }
    friend NatElem operator-(NatElem a, const NatElem& b) { return a -= b; }
    friend NatElem operator-(const NatElem& a);
    friend bool operator==(const NatElem& a, const NatElem& b) {
        return a.degree == b.degree && a.terms == b.terms;
    }

    // Context action (u', v'): contexts renormalize after concatenation.
    NatElem acted(const Rewriter& rw, const Path& l, const Path& r) const;

    std::string pretty() const;
};

NatElem nat_zero(int degree, const Path& component);
NatElem nat_unit(const Rewriter& rw, int degree, const Path& left, const std::string& gen,
                 const Path& right, const Path& component);

}  // namespace polyres
