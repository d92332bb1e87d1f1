#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "mtinv/cli/corpus.hpp"
#include "mtinv/errors.hpp"
#include "mtinv/galois/cohomology.hpp"
#include "mtinv/galois/finite_group.hpp"
#include "mtinv/galois/gamma_module.hpp"
#include "mtinv/lattice/lattice.hpp"

using namespace mtinv;

namespace {

const GroupPtr C2 = share(FiniteGroup::cyclic(2));
const GroupPtr C3 = share(FiniteGroup::cyclic(3));
const GroupPtr C4 = share(FiniteGroup::cyclic(4));
const GroupPtr S3 = share(FiniteGroup::symmetric3());
const GroupPtr V4 = share(FiniteGroup::klein_four());
const GroupPtr C1 = share(FiniteGroup::trivial());

GammaModule lat(const GroupPtr& g, std::vector<IntMatrix> gens) {
  return GammaModule(GammaLattice::from_generator_action(g, gens));
}

GammaModule sign() { return lat(C2, {IntMatrix{{-1}}}); }
GammaModule swap2() { return lat(C2, {IntMatrix{{0, 1}, {1, 0}}}); }
GammaModule trivial_c2(std::size_t r = 1) { return GammaModule(GammaLattice::trivial(C2, r)); }

}  // namespace

TEST_CASE("finite groups validate their tables") {
  CHECK(FiniteGroup::cyclic(6).order() == 6);
  CHECK(FiniteGroup::symmetric3().order() == 6);
  CHECK(FiniteGroup::klein_four().order() == 4);
  CHECK(FiniteGroup::trivial().order() == 1);
  // not associative: a "group" table on 3 elements that is a Latin square but no group
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}, {1}), InvalidGroup);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}, {1}), InvalidGroup);
  // generators that do not generate
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 0}}, {}), InvalidGroup);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 0}}, {5}), InvalidGroup);
  const auto g = FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}});
  CHECK(g.order() == 6);
  for (Element a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inverse(a)) == g.identity());
    for (Element b = 0; b < g.order(); ++b)
      for (Element c = 0; c < g.order(); ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

TEST_CASE("words evaluate to their elements") {
  for (const auto& cg : cli::corpus_groups()) {
    const auto& g = *cg.group;
    for (Element x = 0; x < g.order(); ++x) {
      Element v = g.identity();
      for (auto s : g.word(x)) v = g.mul(v, g.generators()[s]);
      CHECK(v == x);
    }
  }
}

TEST_CASE("cosets and subgroups") {
  CHECK(S3->is_subgroup({0, 1}) == (S3->mul(1, 1) == 0));
  CHECK_THROWS_AS(C4->left_cosets({0, 1}), InvalidSubgroup);
  const auto cosets = C4->left_cosets({0, 2});
  CHECK(cosets.size() == 2);
  CHECK(cosets[0][0] == C4->identity());
}

TEST_CASE("permutation_lattice examples") {
  const auto reg = permutation_lattice(C2, C2->regular_action());
  CHECK(reg.rank() == 2);
  CHECK(reg.action(1) == (IntMatrix{{0, 1}, {1, 0}}));
  const auto point = permutation_lattice(C2, {{0}});
  CHECK(point.rank() == 1);
  CHECK(point.action(1) == IntMatrix::identity(1));
  // Z/4 acting on two points through Z/2
  const auto quo = permutation_lattice(C4, {{1, 0}});
  CHECK(quo.rank() == 2);
  CHECK(quo.action(1) == (IntMatrix{{0, 1}, {1, 0}}));
  CHECK(quo.action(2) == IntMatrix::identity(2));
  CHECK(quo.is_permutation());
  // a 3-cycle is not an action of Z/2
  CHECK_THROWS_AS(permutation_lattice(C2, {{1, 2, 0}}), RelationViolation);
}

TEST_CASE("lattice actions are homomorphisms") {
  for (const auto& cg : cli::corpus_groups())
    for (const auto& cl : cli::corpus_lattices(cg)) {
      const auto& g = *cg.group;
      const auto& l = cl.module.ambient();
      CHECK(l.action(g.identity()).is_identity());
      for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b) CHECK(l.action(a) * l.action(b) == l.action(g.mul(a, b)));
    }
}

TEST_CASE("invalid actions are rejected") {
  CHECK_THROWS_AS(lat(C2, {IntMatrix{{2}}}), RelationViolation);
  CHECK_THROWS_AS(lat(C3, {IntMatrix{{-1}}}), RelationViolation);
  CHECK_THROWS_AS(lat(C2, {IntMatrix{{1, 0}}}), DimensionMismatch);
  CHECK_THROWS_AS(GammaLattice(C2, {IntMatrix{{1}}}), DimensionMismatch);
  CHECK_THROWS_AS(GammaLattice(C2, {IntMatrix{{-1}}, IntMatrix{{-1}}}), RelationViolation);
  // relations not stable: (1,0) is moved to (0,1)
  CHECK_THROWS_AS(GammaModule(swap2().ambient(), IntMatrix{{1}, {0}}), RelationViolation);
}

TEST_CASE("h0 examples") {
  CHECK(h0(swap2()) == FinAbGroup::free(1));
  CHECK(h0(sign()).is_trivial());
  CHECK(h0(mod_n(sign(), 3)).is_trivial());
  CHECK(h0(mod_n(sign(), 2)) == FinAbGroup::cyclic(2));
  CHECK(oracle::matches(h0(mod_n(sign(), 3)), oracle::h0_counts(mod_n(sign(), 3), 3)));
  CHECK(oracle::matches(h0(mod_n(sign(), 2)), oracle::h0_counts(mod_n(sign(), 2), 2)));
  CHECK(h0(trivial_c2(3)) == FinAbGroup::free(3));
}

TEST_CASE("h0_sub examples") {
  const auto s = h0_sub(swap2());
  CHECK(lattice::equal(s.matrix(), IntMatrix{{1}, {1}}));
  CHECK(is_injective(s));
  const auto t = h0_sub(trivial_c2(2));
  CHECK(lattice::equal(t.matrix(), IntMatrix::identity(2)));
  const auto mixed = direct_sum(sign(), trivial_c2());
  const auto u = h0_sub(mixed);
  CHECK(lattice::equal(u.matrix(), IntMatrix{{0}, {1}}));
  for (Element g = 0; g < 2; ++g) CHECK(u.source().action(g).is_identity());
}

TEST_CASE("h0 matches fixed-point enumeration on finite modules") {
  for (const auto& cg : cli::corpus_groups())
    for (const auto& cl : cli::corpus_lattices(cg, 3))
      for (long n : {2, 3, 4, 6}) {
        if (cl.module.rank() > 3 && n > 3) continue;
        const auto m = mod_n(cl.module, n);
        CHECK_MESSAGE(oracle::matches(h0(m), oracle::h0_counts(m, n)), cg.name, " ", cl.name, " n=", n);
      }
}

TEST_CASE("h1 examples") {
  CHECK(h1(sign()) == FinAbGroup::cyclic(2));
  CHECK(h1(swap2()).is_trivial());
  CHECK(h1(GammaModule(GammaLattice::trivial(C1, 2))).is_trivial());
  CHECK(h1(GammaModule(GammaLattice::trivial(C1, 1), IntMatrix{{5}})).is_trivial());
  CHECK(h1(trivial_c2()).is_trivial());
  CHECK(h1(mod_n(trivial_c2(), 2)) == FinAbGroup::cyclic(2));
}

TEST_CASE("h1_oracle examples and guard") {
  CHECK(h1_oracle(sign()) == FinAbGroup::cyclic(2));
  CHECK(h1_oracle(swap2()).is_trivial());
  CHECK(h1_oracle(GammaModule(GammaLattice::trivial(C1, 2))).is_trivial());
  CHECK(h1_oracle(GammaModule(regular_lattice(C3))).is_trivial());
  CHECK(h1_oracle(trivial_c2()).is_trivial());
  const GroupPtr C8 = share(FiniteGroup::cyclic(8));
  CHECK_NOTHROW(h1_oracle(GammaModule(GammaLattice::trivial(C8, 8))));
  CHECK_THROWS_AS(h1_oracle(GammaModule(GammaLattice::trivial(C8, 9))), SizeGuard);
}

TEST_CASE("h1 agrees with cocycle enumeration on finite modules") {
  for (const auto& cg : cli::corpus_groups()) {
    if (cg.group->order() > 6) continue;
    for (const auto& cl : cli::corpus_lattices(cg, 2))
      for (long n : {2, 3, 4}) {
        long points = 1;
        for (std::size_t i = 0; i < cl.module.rank(); ++i) points *= n;
        if (points > 256) continue;
        const auto m = mod_n(cl.module, n);
        const auto counts = oracle::h1_counts(m, n);
        CHECK_MESSAGE(oracle::matches(h1(m), counts), cg.name, " ", cl.name, " n=", n);
        CHECK(h1_oracle(m) == h1(m));
      }
  }
}

TEST_CASE("h1 order of lattices matches the mod-|G| count") {
  for (const auto& cg : cli::corpus_groups())
    for (const auto& cl : cli::corpus_lattices(cg)) {
      const long N = static_cast<long>(cg.group->order());
      long points = 1;
      for (std::size_t i = 0; i < cl.module.rank(); ++i) points *= N;
      if (points > 70000) continue;
      CHECK_MESSAGE(h1(cl.module).order() == oracle::lattice_h1_order(cl.module.ambient()), cg.name, " ",
                    cl.name);
    }
}

TEST_CASE("h1 is invariant under equivariant change of basis") {
  std::mt19937_64 rng(31);
  for (const auto& cg : cli::corpus_groups())
    for (const auto& cl : cli::corpus_lattices(cg, 3)) {
      const auto [p, p_inv] = oracle::random_unimodular(cl.module.rank(), rng);
      const auto m = change_basis(cl.module, p);
      CHECK(h1(m) == h1(cl.module));
      CHECK(h0(m) == h0(cl.module));
    }
}

TEST_CASE("mod_n examples") {
  const auto a = mod_n(sign(), 2);
  CHECK(a.underlying() == FinAbGroup::cyclic(2));
  CHECK(h0(a) == FinAbGroup::cyclic(2));
  const auto b = mod_n(sign(), 3);
  CHECK(b.underlying() == FinAbGroup::cyclic(3));
  CHECK(h0(b).is_trivial());
  const auto c = mod_n(swap2(), 2);
  CHECK(c.underlying() == FinAbGroup(0, {2, 2}));
  CHECK(c.action(1) == (IntMatrix{{0, 1}, {1, 0}}));
  CHECK(mod_n(swap2(), 1).underlying().is_trivial());
  CHECK_THROWS_AS(mod_n(sign(), 0), DimensionMismatch);
}

TEST_CASE("mod_n of mod_m is mod gcd") {
  for (const auto& cg : cli::corpus_groups())
    for (const auto& cl : cli::corpus_lattices(cg, 3))
      for (long n : {2, 3, 4, 6, 12})
        for (long m : {2, 3, 4, 6, 12}) {
          const long g = std::gcd(n, m);
          const auto twice = mod_n(mod_n(cl.module, m), n);
          const auto once = mod_n(cl.module, g);
          CHECK(twice.underlying() == once.underlying());
          CHECK(h0(twice) == h0(once));
        }
}

TEST_CASE("kernel, cokernel and composition") {
  const auto z = trivial_c2();
  const auto times3 = multiplication_map(z, 3);
  CHECK(kernel_map(times3).source().rank() == 0);
  CHECK(is_injective(times3));
  CHECK(!is_surjective(times3));
  const auto q = cokernel_map(times3).target();
  CHECK(q.underlying() == FinAbGroup::cyclic(3));
  CHECK(q.action(1).is_identity());

  // augmentation Z[Z/2] -> Z
  const GammaMap aug(swap2(), z, IntMatrix{{1, 1}});
  CHECK(is_surjective(aug));
  const auto k = kernel_map(aug);
  CHECK(k.source().rank() == 1);
  CHECK(k.source().action(1) == IntMatrix{{-1}});
  CHECK(lattice::equal(k.matrix(), IntMatrix{{1}, {-1}}));

  const auto id = identity_map(swap2());
  CHECK(compose(id, aug).matrix() == aug.matrix());
  CHECK_THROWS_AS(compose(aug, id), CompositionMismatch);
  // associativity of composition at matrix level
  const auto f = compose(compose(id, id), aug);
  const auto g = compose(id, compose(id, aug));
  CHECK(f.matrix() == g.matrix());
}

TEST_CASE("maps must be equivariant and well defined") {
  CHECK_THROWS_AS(GammaMap(swap2(), trivial_c2(), IntMatrix{{1, 0}}), RelationViolation);
  CHECK_THROWS_AS(GammaMap(trivial_c2(), sign(), IntMatrix{{1}}), RelationViolation);
  CHECK_THROWS_AS(GammaMap(mod_n(trivial_c2(), 2), trivial_c2(), IntMatrix{{1}}), RelationViolation);
  CHECK_THROWS_AS(GammaMap(swap2(), trivial_c2(), IntMatrix{{1}}), DimensionMismatch);
  CHECK_THROWS_AS(GammaMap(sign(), GammaModule(GammaLattice::trivial(C3, 1)), IntMatrix{{1}}), Error);
  // Equivariant only modulo the target relations: sign and trivial agree mod 2.
  CHECK_NOTHROW(GammaMap(sign(), mod_n(trivial_c2(), 2), IntMatrix{{1}}));
}

TEST_CASE("Shapiro: regular blocks have no H^1") {
  for (const auto& cg : cli::corpus_groups()) {
    const GammaModule reg(regular_lattice(cg.group));
    CHECK(h1(reg).is_trivial());
    CHECK(h0(reg) == FinAbGroup::free(1));
  }
}

TEST_CASE("n_torsion_module and reduce_to_lattice") {
  const auto m = mod_n(trivial_c2(), 6);
  CHECK(n_torsion_module(m, 4).underlying() == FinAbGroup::cyclic(2));
  CHECK(n_torsion_module(sign(), 5).underlying().is_trivial());
  const GammaModule sum = direct_sum(swap2(), GammaModule(GammaLattice::trivial(C2, 1), IntMatrix{{1}}));
  const auto r = reduce_to_lattice(sum);
  CHECK(r.rank() == 2);
  CHECK(h1(r) == h1(swap2()));
  CHECK_THROWS_AS(reduce_to_lattice(m), NotATorus);
}

TEST_CASE("fixed point sequences") {
  // 0 -> Z -(2)-> Z -> Z/2 -> 0 with trivial action
  const auto z = trivial_c2();
  const auto two = multiplication_map(z, 2);
  const auto proj = cokernel_map(two);
  const auto seq = fixed_point_sequence(two, proj);
  CHECK(seq.injective);
  CHECK(seq.exact);
  CHECK(seq.right == FinAbGroup::cyclic(2));
  CHECK(h0_kernel(proj) == FinAbGroup::free(1));
}
