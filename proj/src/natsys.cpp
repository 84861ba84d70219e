#include "polyres/natsys.hpp"

#include <sstream>

namespace polyres {

void NatElem::add_term(const NatTerm& t, const BigInt& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

NatElem& NatElem::operator+=(const NatElem& o) {
    if (degree != o.degree)
        throw Error(Errc::degree_out_of_range, "adding elements of different degrees");
    for (const auto& [t, c] : o.terms)
        add_term(t, c);
    return *this;
}

NatElem& NatElem::operator-=(const NatElem& o) {
    if (degree != o.degree)
        throw Error(Errc::degree_out_of_range, "subtracting elements of different degrees");
    for (const auto& [t, c] : o.terms)
        add_term(t, -c);
    return *this;
}

NatElem operator-(const NatElem& a) {
    NatElem r;
    r.degree = a.degree;
    r.component = a.component;
    for (const auto& [t, c] : a.terms)
        r.terms.emplace(t, -c);
    return r;
}

NatElem NatElem::acted(const Rewriter& rw, const Path& l, const Path& r) const {
    const Polygraph& p = rw.polygraph();
    NatElem out;
    out.degree = degree;
    out.component = rw.nf(p.concat(p.concat(l, component), r));
    for (const auto& [t, c] : terms) {
        NatTerm nt;
        nt.left = rw.nf(p.concat(l, t.left));
        nt.gen = t.gen;
        nt.right = rw.nf(p.concat(t.right, r));
        out.add_term(nt, c);
    }
    return out;
}

std::string NatElem::pretty() const {
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms) {
        BigInt a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0)
                a = -a;
        }
        if (!(a == BigInt(1)))
            os << a.to_string() << "*";
        if (!t.left.empty())
            os << format_word(t.left) << ".";
        os << "[" << t.gen << "]";
        if (!t.right.empty())
            os << "." << format_word(t.right);
    }
    return os.str();
}

NatElem nat_zero(int degree, const Path& component) {
    NatElem e;
    e.degree = degree;
    e.component = component;
    return e;
}

NatElem nat_unit(const Rewriter& rw, int degree, const Path& left, const std::string& gen,
                 const Path& right, const Path& component) {
    NatElem e;
    e.degree = degree;
    e.component = rw.nf(component);
    NatTerm t{rw.nf(left), gen, rw.nf(right)};
    e.add_term(t, BigInt(1));
    return e;
}

}  // namespace polyres
