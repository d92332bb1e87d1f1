#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtinv/galois/gamma_module.hpp"
#include "mtinv/lattice/fin_ab_group.hpp"

namespace mtinv {

// A group of multiplicative type, held entirely through its character module.
struct MultTypeGroup {
  GammaModule chars;
  std::string name;

  bool is_torus() const { return chars.is_torsion_free(); }
};

// 1 -> S -> W -> chars -> 0 with W a permutation lattice; dual to a
// resolution 1 -> G -> P -> T -> 1 by a quasisplit torus P and a torus T.
struct ToriResolution {
  MultTypeGroup g;
  GammaLattice W;
  GammaLattice S;
  GammaMap surj;  // W -> chars
  GammaMap incl;  // S -> W
};

// Generators of the underlying group of m read off the Smith form of the
// relations (the non-unit invariant factor directions), lifted to the ambient.
IntMatrix smith_generators(const GammaModule& m);

// One Z[G] block per Smith generator.
ToriResolution resolve_by_tori(const MultTypeGroup& g);
// One Z[G] block per column of `generators`, which must generate chars as a
// module. The basis vector e_h of block i maps to h * generators[:, i].
ToriResolution resolve_by_tori(const MultTypeGroup& g, const IntMatrix& generators);

// Throws ExactnessFailure if 0 -> S -> W -> chars -> 0 is not exact or W is
// not a permutation lattice.
void check_resolution(const ToriResolution& res);

struct ConstructionParams {
  std::optional<Integer> n;                // mu_n
  std::optional<std::size_t> rank;         // split_torus
  GroupPtr group;                          // defaults to the trivial group
  std::vector<Element> subgroup;           // weil_restriction_gm, norm_one_torus
  std::optional<GammaLattice> lattice;     // quotient_of_lattice
  std::optional<IntMatrix> relations;      // quotient_of_lattice
};

// kind is one of mu_n, split_torus, weil_restriction_gm, norm_one_torus,
// quotient_of_lattice. Throws UnknownConstruction or InvalidSubgroup.
MultTypeGroup named_construction(std::string_view kind, const ConstructionParams& params);

MultTypeGroup mu_n(const Integer& n, GroupPtr group = nullptr);
MultTypeGroup split_torus(std::size_t rank, GroupPtr group = nullptr);
MultTypeGroup weil_restriction_gm(GroupPtr group, std::vector<Element> subgroup);
MultTypeGroup norm_one_torus(GroupPtr group, std::vector<Element> subgroup);

// The snake-lemma piece 0 -> chars[n] -> S/n -> W/n of a resolution.
struct CharacterSequence {
  GammaMap s_to_w;         // S/n -> W/n induced by incl
  GammaMap kernel_incl;    // ker(S/n -> W/n) -> S/n
  GammaMap connecting;     // chars[n] -> S/n, the snake-lemma boundary map
  GammaModule torsion;     // chars[n]
  FinAbGroup h0_kernel;    // H^0 of ker(S/n -> W/n)
};

// Builds the sequence and verifies, as Gamma-modules, that the connecting map
// is an equivariant isomorphism of chars[n] onto ker(S/n -> W/n). Throws
// ExactnessFailure otherwise.
CharacterSequence character_sequence_mod_n(const ToriResolution& res, const Integer& n);

}  // namespace mtinv
