#include "mtinv/mult_type/mult_type.hpp"

#include <utility>

#include "mtinv/errors.hpp"
#include "mtinv/galois/cohomology.hpp"
#include "mtinv/lattice/lattice.hpp"
#include "mtinv/lattice/smith.hpp"

namespace mtinv {
namespace {

GroupPtr or_trivial(GroupPtr group) { return group ? std::move(group) : share(FiniteGroup::trivial()); }

// t copies of Z[G], block i spanned by e_{i,h}.
GammaLattice regular_blocks(const GroupPtr& group, std::size_t t) {
  const GammaLattice regular = regular_lattice(group);
  std::vector<IntMatrix> action;
  for (Element h = 0; h < group->order(); ++h) action.push_back(repeat_diagonal(regular.action(h), t));
  return GammaLattice(group, std::move(action));
}

}  // namespace

IntMatrix smith_generators(const GammaModule& m) {
  const auto s = snf(m.relations());
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < m.rank(); ++i)
    if (i >= s.rank || s.D(i, i) != 1) cols.push_back(s.U_inv.column(i));
  return IntMatrix::from_columns(m.rank(), cols);
}

ToriResolution resolve_by_tori(const MultTypeGroup& g) { return resolve_by_tori(g, smith_generators(g.chars)); }

ToriResolution resolve_by_tori(const MultTypeGroup& g, const IntMatrix& generators) {
  const auto& chars = g.chars;
  const auto& group = chars.group();
  if (generators.rows() != chars.rank()) throw DimensionMismatch("resolve_by_tori: generator length");
  const std::size_t order = group->order();
  const std::size_t t = generators.cols();

  GammaLattice w = regular_blocks(group, t);
  IntMatrix surj_matrix(chars.rank(), t * order);
  for (std::size_t i = 0; i < t; ++i) {
    const IntVector gen = generators.column(i);
    for (Element h = 0; h < order; ++h) {
      const IntVector image = chars.action(h) * std::span<const Integer>(gen);
      for (std::size_t r = 0; r < chars.rank(); ++r) surj_matrix(r, i * order + h) = image[r];
    }
  }
  GammaMap surj(GammaModule(w), chars, std::move(surj_matrix));
  if (!is_surjective(surj)) throw ExactnessFailure("resolve_by_tori: generators do not generate the module");
  GammaMap kernel = kernel_map(surj);
  GammaLattice s = kernel.source().ambient();
  GammaMap incl(GammaModule(s), GammaModule(w), kernel.matrix());
  ToriResolution res{g, std::move(w), std::move(s), std::move(surj), std::move(incl)};
  check_resolution(res);
  return res;
}

void check_resolution(const ToriResolution& res) {
  if (!res.W.is_permutation()) throw ExactnessFailure("resolution: W is not a permutation lattice");
  if (!is_surjective(res.surj)) throw ExactnessFailure("resolution: W -> chars is not surjective");
  if (!is_injective(res.incl)) throw ExactnessFailure("resolution: S -> W is not injective");
  const IntMatrix ker = lattice::preimage(res.surj.matrix(), res.g.chars.relations());
  if (!lattice::equal(res.incl.matrix(), ker)) throw ExactnessFailure("resolution: image(S) != ker(W -> chars)");
}

MultTypeGroup mu_n(const Integer& n, GroupPtr group) {
  if (n < 1) throw DimensionMismatch("mu_n: n must be positive");
  group = or_trivial(std::move(group));
  return {GammaModule(GammaLattice::trivial(group, 1), IntMatrix::scalar(1, n)), "mu_" + n.get_str()};
}

MultTypeGroup split_torus(std::size_t rank, GroupPtr group) {
  group = or_trivial(std::move(group));
  return {GammaModule(GammaLattice::trivial(group, rank)), rank == 1 ? "G_m" : "G_m^" + std::to_string(rank)};
}

MultTypeGroup weil_restriction_gm(GroupPtr group, std::vector<Element> subgroup) {
  group = or_trivial(std::move(group));
  return {GammaModule(coset_lattice(group, {subgroup})), "R(G_m)"};
}

MultTypeGroup norm_one_torus(GroupPtr group, std::vector<Element> subgroup) {
  group = or_trivial(std::move(group));
  const GammaLattice perm = coset_lattice(group, {subgroup});
  // chars fits 0 -> Z -> Z[G/H] -> chars -> 0 with 1 -> sum of the basis.
  IntMatrix diagonal(perm.rank(), 1);
  for (std::size_t i = 0; i < perm.rank(); ++i) diagonal(i, 0) = 1;
  return {reduce_to_lattice(GammaModule(perm, diagonal)), "R1(G_m)"};
}

MultTypeGroup named_construction(std::string_view kind, const ConstructionParams& p) {
  if (kind == "mu_n") {
    if (!p.n) throw DimensionMismatch("mu_n requires n");
    return mu_n(*p.n, p.group);
  }
  if (kind == "split_torus") {
    if (!p.rank) throw DimensionMismatch("split_torus requires rank");
    return split_torus(*p.rank, p.group);
  }
  if (kind == "weil_restriction_gm") return weil_restriction_gm(p.group, p.subgroup);
  if (kind == "norm_one_torus") return norm_one_torus(p.group, p.subgroup);
  if (kind == "quotient_of_lattice") {
    if (!p.lattice) throw DimensionMismatch("quotient_of_lattice requires a lattice");
    IntMatrix rel = p.relations.value_or(IntMatrix(p.lattice->rank(), 0));
    return {GammaModule(*p.lattice, std::move(rel)), "quotient"};
  }
  throw UnknownConstruction("unknown construction '" + std::string(kind) + "'");
}

CharacterSequence character_sequence_mod_n(const ToriResolution& res, const Integer& n) {
  if (n < 1) throw DimensionMismatch("character_sequence_mod_n: n must be positive");
  const GammaModule& chars = res.g.chars;
  const GammaModule s_mod = mod_n(GammaModule(res.S), n);
  const GammaModule w_mod = mod_n(GammaModule(res.W), n);
  GammaMap s_to_w(s_mod, w_mod, res.incl.matrix());
  GammaMap kernel_incl = kernel_map(s_to_w);

  const GammaMap torsion_incl = kernel_map(multiplication_map(chars, n));
  const IntMatrix& tors_basis = torsion_incl.matrix();

  // Boundary map: lift x to y in W, then n y = incl(z) and x -> z mod n.
  const LinearSolver lift(hconcat(res.surj.matrix(), chars.relations()));
  const LinearSolver pull(res.incl.matrix());
  const std::size_t w_rank = res.W.rank();
  std::vector<IntVector> images;
  for (std::size_t j = 0; j < tors_basis.cols(); ++j) {
    auto sol = lift.solve(tors_basis.column(j));
    if (!sol) throw ExactnessFailure("character sequence: W -> chars is not surjective");
    IntVector ny(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(w_rank));
    for (auto& v : ny) v *= n;
    auto z = pull.solve(ny);
    if (!z) throw ExactnessFailure("character sequence: n * lift is not in S");
    images.push_back(std::move(*z));
  }
  GammaMap connecting(torsion_incl.source(), s_mod, IntMatrix::from_columns(res.S.rank(), images));

  if (!is_injective(connecting))
    throw ExactnessFailure("character sequence: chars[n] -> S/n is not injective");
  if (!lattice::equal(image_lattice(connecting), image_lattice(kernel_incl)))
    throw ExactnessFailure("character sequence: image of chars[n] != ker(S/n -> W/n)");

  FinAbGroup h0k = h0(kernel_incl.source());
  GammaModule torsion = torsion_incl.source();
  return {std::move(s_to_w), std::move(kernel_incl), std::move(connecting), std::move(torsion), std::move(h0k)};
}

}  // namespace mtinv
