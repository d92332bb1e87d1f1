#include "mtinv/lattice/fin_ab_group.hpp"

#include <ostream>
#include <utility>

#include "mtinv/errors.hpp"

namespace mtinv {

FinAbGroup::FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw DimensionMismatch("FinAbGroup: invariant factors must be >= 2");
    if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw DimensionMismatch("FinAbGroup: invariant factors must form a divisibility chain");
  }
}

FinAbGroup FinAbGroup::from_cyclic_orders(std::size_t free_rank, std::vector<Integer> orders) {
  std::vector<Integer> finite;
  for (auto& d : orders) {
    Integer a = abs(d);
    if (a == 0)
      ++free_rank;
    else if (a != 1)
      finite.push_back(std::move(a));
  }
  // Z/a + Z/b = Z/gcd(a,b) + Z/lcm(a,b); after pass i, entry i divides all later ones.
  for (std::size_t i = 0; i < finite.size(); ++i)
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      Integer g = gcd(finite[i], finite[j]);
      Integer l = lcm(finite[i], finite[j]);
      finite[i] = std::move(g);
      finite[j] = std::move(l);
    }
  std::vector<Integer> chain;
  for (auto& d : finite)
    if (d != 1) chain.push_back(std::move(d));
  return FinAbGroup(free_rank, std::move(chain));
}

Integer FinAbGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

Integer FinAbGroup::order() const {
  if (!is_finite()) throw DimensionMismatch("FinAbGroup::order: group is infinite");
  return torsion_order();
}

Integer FinAbGroup::exponent() const { return torsion_.empty() ? Integer(1) : torsion_.back(); }

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank_ == 1)
    out = "Z";
  else if (free_rank_ > 1)
    out = "Z^" + std::to_string(free_rank_);
  for (const auto& d : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Integer> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FinAbGroup::from_cyclic_orders(a.free_rank() + b.free_rank(), std::move(orders));
}

FinAbGroup n_torsion(const FinAbGroup& g, const Integer& n) {
  if (n < 1) throw DimensionMismatch("n_torsion: n must be positive");
  std::vector<Integer> orders;
  orders.reserve(g.torsion().size());
  for (const auto& d : g.torsion()) orders.push_back(gcd(d, n));
  return FinAbGroup::from_cyclic_orders(0, std::move(orders));
}

FinAbGroup torsion_part(const FinAbGroup& g) { return FinAbGroup(0, g.torsion()); }

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) { return os << g.to_string(); }

}  // namespace mtinv
