#include "mtinv/cli/corpus.hpp"

#include <algorithm>

#include "mtinv/errors.hpp"

namespace mtinv::cli {
namespace {

GammaModule sign_module(const GroupPtr& group, const std::vector<Element>& index_two, const Integer& modulus) {
  GammaModule sign = norm_one_torus(group, index_two).chars;
  if (modulus == 0) return sign;
  return mod_n(sign, modulus);
}

std::vector<Element> find_subgroup(const FiniteGroup& g, std::size_t size) {
  for (auto& h : all_subgroups(g))
    if (h.size() == size) return h;
  throw InvalidSubgroup("no subgroup of size " + std::to_string(size));
}

}  // namespace

std::vector<CorpusGroup> corpus_groups() {
  return {{"C1", share(FiniteGroup::trivial())},     {"C2", share(FiniteGroup::cyclic(2))},
          {"C3", share(FiniteGroup::cyclic(3))},     {"C4", share(FiniteGroup::cyclic(4))},
          {"C6", share(FiniteGroup::cyclic(6))},     {"C8", share(FiniteGroup::cyclic(8))},
          {"V4", share(FiniteGroup::klein_four())},  {"S3", share(FiniteGroup::symmetric3())}};
}

std::vector<std::vector<Element>> all_subgroups(const FiniteGroup& g) {
  if (g.order() > 16) throw SizeGuard("all_subgroups: group order above 16");
  std::vector<std::vector<Element>> out;
  for (unsigned long mask = 1; mask < (1UL << g.order()); ++mask) {
    std::vector<Element> elems;
    for (Element x = 0; x < g.order(); ++x)
      if (mask & (1UL << x)) elems.push_back(x);
    if (g.is_subgroup(elems)) out.push_back(std::move(elems));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<CorpusLattice> corpus_lattices(const CorpusGroup& cg, std::size_t max_rank) {
  const auto& group = cg.group;
  std::vector<CorpusLattice> out;
  auto add = [&](std::string name, GammaModule m, bool regular = false) {
    if (regular || m.rank() <= max_rank) out.push_back({std::move(name), std::move(m), regular});
  };
  add("Z", GammaModule(GammaLattice::trivial(group, 1)));
  add("Z[G]", GammaModule(regular_lattice(group)), true);
  const auto subgroups = all_subgroups(*group);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const auto& h = subgroups[i];
    const std::size_t index = group->order() / h.size();
    if (index == 1) continue;
    const std::string tag = "H" + std::to_string(i) + "(order " + std::to_string(h.size()) + ")";
    const GammaLattice perm = coset_lattice(group, {h});
    if (h.size() > 1) add("Z[G/" + tag + "]", GammaModule(perm));
    add("J[G/" + tag + "]", norm_one_torus(group, h).chars);
    IntMatrix augmentation(1, perm.rank());
    for (std::size_t j = 0; j < perm.rank(); ++j) augmentation(0, j) = 1;
    const GammaMap aug(GammaModule(perm), GammaModule(GammaLattice::trivial(group, 1)), augmentation);
    add("I[G/" + tag + "]", GammaModule(kernel_map(aug).source().ambient()));
    if (index == 2) add("sign(" + tag + ") + Z", direct_sum(norm_one_torus(group, h).chars,
                                                               GammaModule(GammaLattice::trivial(group, 1))));
  }
  return out;
}

std::vector<CorpusEntry> multiplicative_corpus() {
  const GroupPtr c1 = share(FiniteGroup::trivial());
  const GroupPtr c2 = share(FiniteGroup::cyclic(2));
  const GroupPtr c3 = share(FiniteGroup::cyclic(3));
  const GroupPtr c4 = share(FiniteGroup::cyclic(4));
  const GroupPtr v4 = share(FiniteGroup::klein_four());
  const GroupPtr s3 = share(FiniteGroup::symmetric3());
  const std::vector<Element> e1{0};
  const auto s3_order2 = find_subgroup(*s3, 2);
  const auto c4_order2 = find_subgroup(*c4, 2);

  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, std::string group_name, GammaModule chars) {
    out.push_back({name, std::move(group_name), MultTypeGroup{std::move(chars), name}});
  };
  for (long n : {2, 3, 6, 12}) add("mu_" + std::to_string(n), "C1", mu_n(n, c1).chars);
  add("G_m", "C1", split_torus(1, c1).chars);
  add("G_m^3", "C1", split_torus(3, c1).chars);
  add("norm_one_quadratic", "C2", norm_one_torus(c2, e1).chars);
  add("norm_one_cubic", "C3", norm_one_torus(c3, e1).chars);
  add("weil_quadratic", "C2", weil_restriction_gm(c2, e1).chars);
  add("weil_S3_cubic", "S3", weil_restriction_gm(s3, s3_order2).chars);
  add("mu_3_inversion", "C2", sign_module(c2, e1, 3));
  add("mu_2_over_C2", "C2", mu_n(2, c2).chars);
  add("mu_4_inversion", "C2", sign_module(c2, e1, 4));
  add("norm_one_biquadratic", "V4", norm_one_torus(v4, {0}).chars);
  add("norm_one_S3_cubic", "S3", norm_one_torus(s3, s3_order2).chars);
  add("norm_one_quadratic_x_mu_2", "C2",
      direct_sum(norm_one_torus(c2, e1).chars, mu_n(2, c2).chars));
  add("weil_C4_quadratic_x_mu_4_inversion", "C4",
      direct_sum(weil_restriction_gm(c4, c4_order2).chars, sign_module(c4, c4_order2, 4)));
  return out;
}

ProblemFile to_problem(const CorpusEntry& e) {
  ProblemFile p;
  p.group_name = e.group_name;
  p.group = e.group.chars.group();
  p.from_table = true;
  p.modules.push_back({e.name, e.group.chars});
  return p;
}

}  // namespace mtinv::cli
