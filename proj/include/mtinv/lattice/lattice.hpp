#pragma once

#include "mtinv/lattice/fin_ab_group.hpp"
#include "mtinv/lattice/int_matrix.hpp"

// Sublattices of Z^k, each given by a matrix whose columns generate it.
namespace mtinv::lattice {

// A basis (linearly independent columns) of the column span of `gens`.
IntMatrix basis(const IntMatrix& gens);

// Basis of {x in Z^k : map x in span(target)} where map is l x k.
IntMatrix preimage(const IntMatrix& map, const IntMatrix& target);

IntMatrix intersect(const IntMatrix& a, const IntMatrix& b);
IntMatrix sum(const IntMatrix& a, const IntMatrix& b);

// span(a) contains span(b).
bool contains(const IntMatrix& a, const IntMatrix& b);
bool equal(const IntMatrix& a, const IntMatrix& b);

// The abelian group span(lattice) / span(relations). Requires the relation
// lattice to lie inside `lattice`; throws DimensionMismatch otherwise.
FinAbGroup subquotient(const IntMatrix& lattice, const IntMatrix& relations);

// Coordinates of the columns of `vs` in the independent columns of `basis`.
IntMatrix coordinates(const IntMatrix& basis, const IntMatrix& vs);

}  // namespace mtinv::lattice
