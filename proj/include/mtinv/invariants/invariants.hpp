#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtinv/lattice/fin_ab_group.hpp"
#include "mtinv/mult_type/mult_type.hpp"

namespace mtinv {

enum class TheoremTag { T1_mod_n, T1_QZ_finite_part, T0_torus_mod_n, T0_torus_QZ, Pic };

std::string_view to_string(TheoremTag tag);

struct Witness {
  std::string name;
  FinAbGroup group;
};

struct CrossCheck {
  std::string name;
  bool passed = false;
};

// An invariant group together with the intermediate groups it was derived
// from. For T0_torus_QZ the represented group is (Q/Z)^divisible_rank + group.
struct InvariantReport {
  FinAbGroup group;
  TheoremTag theorem = TheoremTag::T1_mod_n;
  std::optional<Integer> modulus;
  std::optional<std::size_t> divisible_rank;
  std::vector<Witness> witnesses;
  std::vector<CrossCheck> checks;

  // "(Q/Z)^r + finite" for T0_torus_QZ, else the group string.
  std::string value_string() const;
};

// How H^1 is computed by the torus operations.
enum class H1Method { GeneratorsAndRelations, FullTable };

// Degree-one invariants with values in K_1/n: G*[n], computed directly as
// H^0(chars)[n] and through the kernel of H^0(S/n) -> H^0(W/n) of a
// resolution by tori. Throws CrossCheckFailure if the two disagree.
InvariantReport inv1_mod_n(const MultTypeGroup& g, const Integer& n);
// Same, using the supplied resolution for the second route.
InvariantReport inv1_mod_n(const MultTypeGroup& g, const Integer& n, const ToriResolution& res);

// Invariants with values in K_1 (x) Q/Z: the torsion of G* = H^0(chars),
// checked against inv1_mod_n at the exponent of that torsion.
InvariantReport inv1_qz(const MultTypeGroup& g);

// Type-zero invariants of a torus with values in K_1/n: H^0(chars / n).
InvariantReport inv0_torus_mod_n(const MultTypeGroup& t, const Integer& n);

// Type-zero invariants of a torus with values in K_1 (x) Q/Z, as
// (Q/Z)^r + H^1(chars) with r the rank of H^0(chars). The closed form is
// checked against |H^0(chars/n)| = n^r |H^1(chars)[n]| along kQZLadder.
InvariantReport inv0_torus_qz(const MultTypeGroup& t, H1Method method = H1Method::GeneratorsAndRelations);

// Picard group of a torus, H^1(chars).
InvariantReport pic_torus(const MultTypeGroup& t, H1Method method = H1Method::GeneratorsAndRelations);

inline constexpr long kQZLadder[] = {1, 2, 6, 12, 60};

// H^0 of 0 -> chars[n] -> S/n -> W/n for a resolution by tori.
struct ExactnessRecord {
  Integer modulus;
  FinAbGroup torsion_fixed;  // H^0(chars[n])
  FinAbGroup s_fixed;        // H^0(S/n)
  FinAbGroup w_fixed;        // H^0(W/n)
  FinAbGroup kernel;         // ker(H^0(S/n) -> H^0(W/n))
  FinAbGroup image;          // image of H^0(chars[n])
  bool injective = false;
  bool exact = false;
};

// Throws ExactnessFailure unless the fixed-point sequence is injective on the
// left and exact in the middle.
ExactnessRecord verify_cor52(const MultTypeGroup& g, const Integer& n);
ExactnessRecord verify_cor52(const ToriResolution& res, const Integer& n);

}  // namespace mtinv
