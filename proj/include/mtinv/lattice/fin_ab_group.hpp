#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mtinv/lattice/int_matrix.hpp"

namespace mtinv {

// A finitely generated abelian group Z^r + Z/d1 + ... + Z/dk in invariant-factor
// form: every d_i >= 2 and d1 | d2 | ... | dk. Equality is structural, which by
// uniqueness of invariant factors is isomorphism.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  // Throws DimensionMismatch unless `torsion` is already a divisibility chain of
  // integers >= 2.
  FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion);

  // Direct sum of cyclic groups of the given orders; order 0 means Z, order 1
  // is dropped. Orders need not form a chain.
  static FinAbGroup from_cyclic_orders(std::size_t free_rank, std::vector<Integer> orders);
  static FinAbGroup free(std::size_t rank) { return FinAbGroup(rank, {}); }
  static FinAbGroup cyclic(const Integer& n) { return from_cyclic_orders(0, {n}); }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  // Order of the torsion subgroup (the group order when finite).
  Integer torsion_order() const;
  // Throws DimensionMismatch on infinite groups.
  Integer order() const;
  // Exponent of the torsion subgroup; 1 when torsion-free.
  Integer exponent() const;

  bool operator==(const FinAbGroup&) const = default;

  // "Z^r + Z/d1 + ...", with "Z" for rank one and "0" for the trivial group.
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

// The subgroup of elements killed by n (n >= 1). Free summands contribute nothing.
FinAbGroup n_torsion(const FinAbGroup& g, const Integer& n);

FinAbGroup torsion_part(const FinAbGroup& g);

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g);

}  // namespace mtinv
