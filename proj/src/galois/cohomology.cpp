#include "mtinv/galois/cohomology.hpp"

#include <algorithm>
#include <string>

#include "mtinv/errors.hpp"
#include "mtinv/lattice/lattice.hpp"

namespace mtinv {
namespace {

// Rows (A_s - 1) for each generator s, stacked.
IntMatrix generator_differences(const GammaModule& m) {
  const auto& gens = m.group()->generators();
  IntMatrix out(0, m.rank());
  const IntMatrix id = IntMatrix::identity(m.rank());
  for (Element s : gens) out = vconcat(out, m.action(s) - id);
  return out;
}

// The k x (k * blocks) matrix placing `a` in column block `b`.
IntMatrix in_block(const IntMatrix& a, std::size_t b, std::size_t blocks) {
  IntMatrix out(a.rows(), a.cols() * blocks);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, b * a.cols() + j) = a(i, j);
  return out;
}

}  // namespace

IntMatrix h0_lattice(const GammaModule& m) {
  const std::size_t gens = m.group()->generators().size();
  return lattice::preimage(generator_differences(m), repeat_diagonal(m.relations(), gens));
}

FinAbGroup h0(const GammaModule& m) { return lattice::subquotient(h0_lattice(m), m.relations()); }

GammaMap h0_sub(const GammaModule& m) {
  const IntMatrix b = lattice::basis(h0_lattice(m));
  GammaModule fixed(GammaLattice::trivial(m.group(), b.cols()), lattice::coordinates(b, m.relations()));
  return GammaMap(std::move(fixed), m, b);
}

FinAbGroup h1(const GammaModule& m) {
  const FiniteGroup& group = *m.group();
  const std::size_t k = m.rank();
  const std::size_t ngens = group.generators().size();
  const IntMatrix id = IntMatrix::identity(k);

  // word_value[g] expresses c(g) linearly in the generator values, via the
  // spanning tree: c(h s) = c(h) + h c(s).
  std::vector<IntMatrix> word_value(group.order());
  word_value[group.identity()] = IntMatrix(k, k * ngens);
  std::vector<Element> order_by_length(group.order());
  for (Element g = 0; g < group.order(); ++g) order_by_length[g] = g;
  std::stable_sort(order_by_length.begin(), order_by_length.end(),
                   [&](Element a, Element b) { return group.word(a).size() < group.word(b).size(); });
  for (Element g : order_by_length) {
    if (g == group.identity()) continue;
    const auto [h, s] = group.tree_parent(g);
    word_value[g] = word_value[h] + in_block(m.action(h), s, ngens);
  }

  // Every non-tree edge g -> g s closes a relator; its cocycle value must vanish.
  IntMatrix conditions(0, k * ngens);
  std::size_t relators = 0;
  for (Element g = 0; g < group.order(); ++g)
    for (std::size_t s = 0; s < ngens; ++s) {
      if (group.is_tree_edge(g, s)) continue;
      const Element gs = group.mul(g, group.generators()[s]);
      conditions = vconcat(conditions, word_value[g] + in_block(m.action(g), s, ngens) - word_value[gs]);
      ++relators;
    }
  const IntMatrix cocycles = lattice::preimage(conditions, repeat_diagonal(m.relations(), relators));
  const IntMatrix coboundaries = generator_differences(m);
  return lattice::subquotient(cocycles, hconcat(repeat_diagonal(m.relations(), ngens), coboundaries));
}

FinAbGroup h1_oracle(const GammaModule& m) {
  const FiniteGroup& group = *m.group();
  const std::size_t n = group.order();
  const std::size_t k = m.rank();
  if (n * k > kH1OracleLimit)
    throw SizeGuard("h1_oracle: |G| * rank = " + std::to_string(n * k) + " exceeds " +
                    std::to_string(kH1OracleLimit));
  const IntMatrix id = IntMatrix::identity(k);
  // Unknown block g holds c(g).
  IntMatrix conditions(0, k * n);
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) {
      IntMatrix row = in_block(id, group.mul(g, h), n) - in_block(id, g, n) - in_block(m.action(g), h, n);
      conditions = vconcat(conditions, row);
    }
  const IntMatrix cocycles = lattice::preimage(conditions, repeat_diagonal(m.relations(), n * n));
  IntMatrix coboundaries(0, k);
  for (Element g = 0; g < n; ++g) coboundaries = vconcat(coboundaries, m.action(g) - id);
  return lattice::subquotient(cocycles, hconcat(repeat_diagonal(m.relations(), n), coboundaries));
}

FixedPointSequence fixed_point_sequence(const GammaMap& f, const GammaMap& g) {
  if (!(f.target() == g.source())) throw CompositionMismatch("fixed_point_sequence: maps do not compose");
  const auto& a = f.source();
  const auto& b = f.target();
  const auto& c = g.target();
  const IntMatrix fixed_a = h0_lattice(a);
  const IntMatrix fixed_b = h0_lattice(b);

  FixedPointSequence out;
  out.left = lattice::subquotient(fixed_a, a.relations());
  out.middle = lattice::subquotient(fixed_b, b.relations());
  out.right = h0(c);

  const IntMatrix image = lattice::sum(f.matrix() * fixed_a, b.relations());
  const IntMatrix kernel = lattice::intersect(fixed_b, lattice::preimage(g.matrix(), c.relations()));
  out.image = lattice::subquotient(image, b.relations());
  out.kernel = lattice::subquotient(kernel, b.relations());
  const IntMatrix lost = lattice::intersect(fixed_a, lattice::preimage(f.matrix(), b.relations()));
  out.injective = lattice::contains(a.relations(), lost);
  out.exact = lattice::equal(image, kernel);
  return out;
}

FinAbGroup h0_kernel(const GammaMap& f) {
  const auto& a = f.source();
  const IntMatrix kernel = lattice::intersect(h0_lattice(a), lattice::preimage(f.matrix(), f.target().relations()));
  return lattice::subquotient(kernel, a.relations());
}

}  // namespace mtinv
