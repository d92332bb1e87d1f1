#pragma once

#include <cstddef>

#include "mtinv/galois/gamma_module.hpp"
#include "mtinv/lattice/fin_ab_group.hpp"

namespace mtinv {

// Lattice of ambient vectors fixed modulo relations by every generator. It
// always contains the relation lattice.
IntMatrix h0_lattice(const GammaModule& m);

// Fixed points H^0(G, m).
FinAbGroup h0(const GammaModule& m);

// Inclusion of the fixed-point module (trivial action) into m.
GammaMap h0_sub(const GammaModule& m);

// H^1(G, m) from cocycle values on the generators only, constrained by the
// relators read off the Cayley graph of the group.
FinAbGroup h1(const GammaModule& m);

// Largest |G| * rank accepted by h1_oracle.
inline constexpr std::size_t kH1OracleLimit = 64;

// H^1(G, m) from the full cocycle table: one unknown per group element and
// every condition c(gh) = c(g) + g c(h). Throws SizeGuard past kH1OracleLimit.
FinAbGroup h1_oracle(const GammaModule& m);

// H^0 applied to A --f--> B --g--> C.
struct FixedPointSequence {
  FinAbGroup left;    // H^0(A)
  FinAbGroup middle;  // H^0(B)
  FinAbGroup right;   // H^0(C)
  FinAbGroup image;   // image of H^0(A) in H^0(B)
  FinAbGroup kernel;  // kernel of H^0(B) -> H^0(C)
  bool injective = false;  // H^0(A) -> H^0(B)
  bool exact = false;      // image == kernel, as subgroups
};

FixedPointSequence fixed_point_sequence(const GammaMap& f, const GammaMap& g);

// Kernel of H^0(f) : H^0(A) -> H^0(B) as a subgroup of H^0(A).
FinAbGroup h0_kernel(const GammaMap& f);

}  // namespace mtinv
