#include "mtinv/lattice/lattice.hpp"

#include "mtinv/errors.hpp"
#include "mtinv/lattice/smith.hpp"

namespace mtinv::lattice {

IntMatrix basis(const IntMatrix& gens) {
  // gens = U^-1 D V^-1, so span(gens) = span of d_i * (column i of U^-1).
  const auto s = snf(gens);
  IntMatrix out = s.U_inv.select_columns(0, s.rank);
  for (std::size_t j = 0; j < s.rank; ++j)
    for (std::size_t i = 0; i < out.rows(); ++i) out(i, j) *= s.D(j, j);
  return out;
}

IntMatrix preimage(const IntMatrix& map, const IntMatrix& target) {
  if (map.rows() != target.rows()) throw DimensionMismatch("preimage: target rank mismatch");
  const IntMatrix k = kernel_basis(hconcat(map, -target));
  return basis(k.select_rows(0, map.cols()));
}

IntMatrix intersect(const IntMatrix& a, const IntMatrix& b) {
  const IntMatrix ba = basis(a);
  return basis(ba * preimage(ba, b));
}

IntMatrix sum(const IntMatrix& a, const IntMatrix& b) { return basis(hconcat(a, b)); }

bool contains(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("contains: ambient rank mismatch");
  return LinearSolver(a).contains_columns(b);
}

bool equal(const IntMatrix& a, const IntMatrix& b) { return contains(a, b) && contains(b, a); }

IntMatrix coordinates(const IntMatrix& basis, const IntMatrix& vs) {
  auto y = LinearSolver(basis).solve_columns(vs);
  if (!y) throw DimensionMismatch("coordinates: vectors are not in the lattice");
  return *y;
}

FinAbGroup subquotient(const IntMatrix& lat, const IntMatrix& relations) {
  const IntMatrix b = basis(lat);
  return cokernel(coordinates(b, relations));
}

}  // namespace mtinv::lattice
