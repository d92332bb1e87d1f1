#pragma once

#include <cstddef>
#include <vector>

#include "mtinv/galois/finite_group.hpp"
#include "mtinv/lattice/fin_ab_group.hpp"
#include "mtinv/lattice/int_matrix.hpp"

namespace mtinv {

// A free Z-module of finite rank with a left action of a finite group:
// one unimodular matrix per group element, multiplicative in the group law.
class GammaLattice {
 public:
  // `action` is indexed by group element. Throws RelationViolation when the
  // matrices are not a homomorphism, DimensionMismatch on shape errors.
  GammaLattice(GroupPtr group, std::vector<IntMatrix> action);

  // Extends generator matrices along the normal words of the group, then
  // checks every product; a violation names the offending pair (g, h).
  static GammaLattice from_generator_action(GroupPtr group, const std::vector<IntMatrix>& generator_action);
  static GammaLattice trivial(GroupPtr group, std::size_t rank);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t rank() const noexcept { return rank_; }
  const IntMatrix& action(Element g) const { return action_[g]; }
  const std::vector<IntMatrix>& actions() const noexcept { return action_; }
  std::vector<IntMatrix> generator_action() const;

  bool is_permutation() const;

  bool operator==(const GammaLattice& other) const;

 private:
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> action_;
};

// Lattice with basis permuted by the group; `generator_perms[s]` is the
// permutation of basis vectors induced by generator s (e_i -> e_{p(i)}).
// Throws RelationViolation if the permutations do not define an action.
GammaLattice permutation_lattice(const GroupPtr& group, const std::vector<Permutation>& generator_perms);

// Direct sum of Z[G/H_i] for the given subgroups. Coset order follows
// FiniteGroup::left_cosets.
GammaLattice coset_lattice(const GroupPtr& group, const std::vector<std::vector<Element>>& subgroups);
// Z[G] with basis vector e_g for element g and h e_g = e_{hg}.
GammaLattice regular_lattice(const GroupPtr& group);

// A finitely generated module presented as ambient / span(relations), where the
// relation lattice is stable under the ambient action.
class GammaModule {
 public:
  GammaModule(GammaLattice ambient, IntMatrix relations);
  // The lattice itself, with no relations.
  explicit GammaModule(GammaLattice ambient);

  const GammaLattice& ambient() const noexcept { return ambient_; }
  const GroupPtr& group() const noexcept { return ambient_.group(); }
  std::size_t rank() const noexcept { return ambient_.rank(); }
  const IntMatrix& action(Element g) const { return ambient_.action(g); }
  const IntMatrix& relations() const noexcept { return relations_; }
  const FinAbGroup& underlying() const noexcept { return underlying_; }
  bool is_torsion_free() const noexcept { return underlying_.torsion().empty(); }

  bool operator==(const GammaModule& other) const {
    return ambient_ == other.ambient_ && relations_ == other.relations_;
  }

 private:
  GammaLattice ambient_;
  IntMatrix relations_;
  FinAbGroup underlying_;
};

// An equivariant homomorphism of presented modules, given by a matrix between
// the ambient lattices. Equivariance and well-definedness are checked modulo
// the target relations.
class GammaMap {
 public:
  GammaMap(GammaModule source, GammaModule target, IntMatrix matrix);

  const GammaModule& source() const noexcept { return source_; }
  const GammaModule& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

 private:
  GammaModule source_;
  GammaModule target_;
  IntMatrix matrix_;
};

GammaMap identity_map(const GammaModule& m);
// x -> n x on m.
GammaMap multiplication_map(const GammaModule& m, const Integer& n);

// m / n m with the inherited action.
GammaModule mod_n(const GammaModule& m, const Integer& n);
// Elements of m killed by n, as a module with the induced action.
GammaModule n_torsion_module(const GammaModule& m, const Integer& n);

// Inclusion of ker(f) into f.source(); the kernel is re-presented on a basis
// of its preimage lattice.
GammaMap kernel_map(const GammaMap& f);
// Projection of f.target() onto f.target() / image(f).
GammaMap cokernel_map(const GammaMap& f);
// second o first; throws CompositionMismatch unless first.target() == second.source().
GammaMap compose(const GammaMap& first, const GammaMap& second);

bool is_injective(const GammaMap& f);
bool is_surjective(const GammaMap& f);
// image(f) + target relations, as a lattice in the target ambient.
IntMatrix image_lattice(const GammaMap& f);

GammaModule direct_sum(const GammaModule& a, const GammaModule& b);

// For torsion-free modules: an isomorphic module with no relations, on the
// Smith basis of the presentation. Throws NotATorus if there is torsion.
GammaModule reduce_to_lattice(const GammaModule& m);

// The same module in the basis given by the columns of the unimodular matrix
// `basis`: actions become basis^-1 A basis, relations basis^-1 R.
GammaModule change_basis(const GammaModule& m, const IntMatrix& basis);

IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace mtinv
