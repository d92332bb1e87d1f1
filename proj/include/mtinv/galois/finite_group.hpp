#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mtinv {

using Element = std::size_t;
// Images of the points 0..n-1; composition (p * q)(i) = p(q(i)).
using Permutation = std::vector<std::size_t>;

// A finite group given by its multiplication table and a generating list.
//
// Every element also carries a normal word in the generators, read off a
// breadth-first spanning tree of the right Cayley graph (edges g -> g*s).
// The non-tree edges of that graph give a complete set of defining relators.
class FiniteGroup {
 public:
  // Validates associativity, identity, inverses and generation; throws InvalidGroup.
  static FiniteGroup from_table(std::vector<std::vector<Element>> mul, std::vector<Element> generators,
                                std::vector<std::string> names = {});
  // Closure of the generating permutations; elements are numbered in BFS order
  // from the identity, so generator i is not necessarily element i + 1.
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup klein_four();
  static FiniteGroup symmetric3();

  std::size_t order() const noexcept { return mul_.size(); }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const { return mul_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  const std::vector<std::vector<Element>>& table() const noexcept { return mul_; }
  const std::string& name(Element g) const { return names_[g]; }

  // Indices into generators(); the product of those generators, left to right, is g.
  const std::vector<std::size_t>& word(Element g) const { return words_[g]; }
  // For g != identity: (h, s) with g == h * generators()[s] on the spanning tree.
  std::pair<Element, std::size_t> tree_parent(Element g) const { return parent_[g]; }
  bool is_tree_edge(Element g, std::size_t s) const;

  bool is_subgroup(const std::vector<Element>& elements) const;
  // Left cosets gH; coset 0 contains the identity.
  std::vector<std::vector<Element>> left_cosets(const std::vector<Element>& subgroup) const;
  // For each generator, the permutation it induces on left cosets by left multiplication.
  std::vector<Permutation> coset_action(const std::vector<Element>& subgroup) const;
  // Left regular action of each generator; point g is element g.
  std::vector<Permutation> regular_action() const;

  bool operator==(const FiniteGroup& other) const {
    return mul_ == other.mul_ && generators_ == other.generators_;
  }

 private:
  FiniteGroup() = default;
  void build_words();

  std::vector<std::vector<Element>> mul_;
  std::vector<Element> generators_;
  std::vector<std::string> names_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<std::pair<Element, std::size_t>> parent_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

}  // namespace mtinv
