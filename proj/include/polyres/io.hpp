#pragma once

#include <map>
#include <string>

#include "polyres/basics.hpp"

namespace polyres {

// Presentation file format (UTF-8 JSON, field order fixed, arrays ordered).
Polygraph parse_polygraph(const std::string& text);
std::string serialize_polygraph(const Polygraph& p);

// Finite monoid given by a multiplication table; element names must be
// non-empty and must not contain '.' so they can double as generator names.
struct MonoidTable {
    std::vector<std::string> elements;
    std::string identity;
    std::map<std::pair<std::string, std::string>, std::string> product;

    // identity products need not be tabulated
    std::string mul(const std::string& a, const std::string& b) const;
};

MonoidTable parse_monoid_table(const std::string& text);

// Built-in presentations.
Polygraph builtin_as();
Polygraph builtin_epi(int m);
Polygraph builtin_reduced_standard(const MonoidTable& table);

}  // namespace polyres
