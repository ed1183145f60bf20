#ifndef QNG_FAMILY_HPP
#define QNG_FAMILY_HPP

#include <stdexcept>
#include <string>

#include "qng/graph.hpp"

namespace qng {

class FamilySyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds a graph from a constructor expression.
///
///   expr  := [count] atom
///   atom  := K<n> | K<s>,<t> | P<n> | C<n> | star <n> | H <s0> <s1> <s2>
///          | petersen | (expr)
///          | join(expr, ...) | union(expr, ...) | cp(expr, ...) | comp(expr)
///
/// A leading count m means m disjoint copies, so 2K1 is two isolated
/// vertices. Throws FamilySyntaxError on malformed input and CapacityError
/// when the result exceeds 32 vertices.
Graph parse_family(const std::string& text);

}  // namespace qng

#endif  // QNG_FAMILY_HPP
