#include "mtinv/galois/gamma_module.hpp"

#include <string>
#include <utility>

#include "mtinv/errors.hpp"
#include "mtinv/lattice/lattice.hpp"
#include "mtinv/lattice/smith.hpp"

namespace mtinv {
namespace {

void check_action(const FiniteGroup& group, const std::vector<IntMatrix>& action, std::size_t rank) {
  if (action.size() != group.order()) throw DimensionMismatch("GammaLattice: need one matrix per group element");
  for (const auto& a : action)
    if (a.rows() != rank || a.cols() != rank) throw DimensionMismatch("GammaLattice: action matrix shape");
  if (!action[group.identity()].is_identity())
    throw RelationViolation("GammaLattice: identity does not act trivially");
  for (Element g = 0; g < group.order(); ++g)
    for (Element h = 0; h < group.order(); ++h)
      if (action[g] * action[h] != action[group.mul(g, h)])
        throw RelationViolation("action is not a homomorphism at pair (" + group.name(g) + ", " + group.name(h) +
                                ")");
  for (Element g = 0; g < group.order(); ++g)
    if (!is_unimodular(action[g]))
      throw RelationViolation("action matrix of " + group.name(g) + " is not unimodular");
}

}  // namespace

GammaLattice::GammaLattice(GroupPtr group, std::vector<IntMatrix> action)
    : group_(std::move(group)), action_(std::move(action)) {
  if (!group_) throw DimensionMismatch("GammaLattice: null group");
  rank_ = action_.empty() ? 0 : action_.front().rows();
  check_action(*group_, action_, rank_);
}

GammaLattice GammaLattice::from_generator_action(GroupPtr group, const std::vector<IntMatrix>& generator_action) {
  if (generator_action.size() != group->generators().size())
    throw DimensionMismatch("need one action matrix per generator");
  std::size_t rank = 0;
  if (!generator_action.empty()) rank = generator_action.front().rows();
  for (const auto& a : generator_action)
    if (a.rows() != rank || a.cols() != rank) throw DimensionMismatch("generator action matrix shape");
  for (std::size_t s = 0; s < generator_action.size(); ++s)
    if (!is_unimodular(generator_action[s]))
      throw RelationViolation("action matrix of generator " + std::to_string(s) + " is not unimodular");
  std::vector<IntMatrix> action(group->order());
  for (Element g = 0; g < group->order(); ++g) {
    IntMatrix a = IntMatrix::identity(rank);
    for (std::size_t s : group->word(g)) a = a * generator_action[s];
    action[g] = std::move(a);
  }
  return GammaLattice(std::move(group), std::move(action));
}

GammaLattice GammaLattice::trivial(GroupPtr group, std::size_t rank) {
  std::vector<IntMatrix> action(group->order(), IntMatrix::identity(rank));
  return GammaLattice(std::move(group), std::move(action));
}

std::vector<IntMatrix> GammaLattice::generator_action() const {
  std::vector<IntMatrix> out;
  for (Element s : group_->generators()) out.push_back(action_[s]);
  return out;
}

bool GammaLattice::is_permutation() const {
  for (const auto& a : action_)
    if (!a.is_permutation()) return false;
  return true;
}

bool GammaLattice::operator==(const GammaLattice& other) const {
  return (group_ == other.group_ || *group_ == *other.group_) && rank_ == other.rank_ && action_ == other.action_;
}

GammaLattice permutation_lattice(const GroupPtr& group, const std::vector<Permutation>& generator_perms) {
  if (generator_perms.size() != group->generators().size())
    throw DimensionMismatch("permutation_lattice: need one permutation per generator");
  std::vector<IntMatrix> mats;
  for (const auto& p : generator_perms) {
    IntMatrix m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= p.size()) throw DimensionMismatch("permutation_lattice: point out of range");
      m(p[i], i) = 1;
    }
    if (!m.is_permutation()) throw DimensionMismatch("permutation_lattice: not a permutation");
    mats.push_back(std::move(m));
  }
  return GammaLattice::from_generator_action(group, mats);
}

GammaLattice coset_lattice(const GroupPtr& group, const std::vector<std::vector<Element>>& subgroups) {
  // Point (block b, coset c) is sent by h to (b, coset of h * rep(c)).
  std::vector<std::vector<std::vector<Element>>> cosets;
  std::size_t rank = 0;
  for (const auto& h : subgroups) {
    cosets.push_back(group->left_cosets(h));
    rank += cosets.back().size();
  }
  std::vector<IntMatrix> action;
  for (Element h = 0; h < group->order(); ++h) {
    IntMatrix m(rank, rank);
    std::size_t offset = 0;
    for (const auto& block : cosets) {
      std::vector<std::size_t> coset_of(group->order());
      for (std::size_t c = 0; c < block.size(); ++c)
        for (Element x : block[c]) coset_of[x] = c;
      for (std::size_t c = 0; c < block.size(); ++c)
        m(offset + coset_of[group->mul(h, block[c].front())], offset + c) = 1;
      offset += block.size();
    }
    action.push_back(std::move(m));
  }
  return GammaLattice(group, std::move(action));
}

GammaLattice regular_lattice(const GroupPtr& group) {
  const std::size_t n = group->order();
  std::vector<IntMatrix> action;
  for (Element h = 0; h < n; ++h) {
    IntMatrix m(n, n);
    for (Element g = 0; g < n; ++g) m(group->mul(h, g), g) = 1;
    action.push_back(std::move(m));
  }
  return GammaLattice(group, std::move(action));
}

GammaModule::GammaModule(GammaLattice ambient, IntMatrix relations)
    : ambient_(std::move(ambient)), relations_(std::move(relations)) {
  if (relations_.rows() != ambient_.rank()) throw DimensionMismatch("GammaModule: relation matrix row count");
  LinearSolver rel(relations_);
  for (Element s : group()->generators())
    if (!rel.contains_columns(ambient_.action(s) * relations_))
      throw RelationViolation("GammaModule: relations are not stable under " + group()->name(s));
  underlying_ = cokernel(relations_);
}

GammaModule::GammaModule(GammaLattice ambient)
    : GammaModule(ambient, IntMatrix(ambient.rank(), 0)) {}

GammaMap::GammaMap(GammaModule source, GammaModule target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
    throw DimensionMismatch("GammaMap: matrix shape does not match source/target ranks");
  if (!(*source_.group() == *target_.group())) throw CompositionMismatch("GammaMap: modules over different groups");
  LinearSolver rel(target_.relations());
  if (!rel.contains_columns(matrix_ * source_.relations()))
    throw RelationViolation("GammaMap: source relations do not map into target relations");
  for (Element s : source_.group()->generators())
    if (!rel.contains_columns(target_.action(s) * matrix_ - matrix_ * source_.action(s)))
      throw RelationViolation("GammaMap: not equivariant for " + source_.group()->name(s));
}

GammaMap identity_map(const GammaModule& m) { return GammaMap(m, m, IntMatrix::identity(m.rank())); }

GammaMap multiplication_map(const GammaModule& m, const Integer& n) {
  return GammaMap(m, m, IntMatrix::scalar(m.rank(), n));
}

GammaModule mod_n(const GammaModule& m, const Integer& n) {
  if (n < 1) throw DimensionMismatch("mod_n: modulus must be positive");
  return GammaModule(m.ambient(), hconcat(m.relations(), IntMatrix::scalar(m.rank(), n)));
}

GammaModule n_torsion_module(const GammaModule& m, const Integer& n) {
  if (n < 1) throw DimensionMismatch("n_torsion_module: n must be positive");
  return kernel_map(multiplication_map(m, n)).source();
}

GammaMap kernel_map(const GammaMap& f) {
  const auto& src = f.source();
  const IntMatrix b = lattice::preimage(f.matrix(), f.target().relations());
  const auto& group = src.group();
  std::vector<IntMatrix> action;
  action.reserve(group->order());
  for (Element g = 0; g < group->order(); ++g) action.push_back(lattice::coordinates(b, src.action(g) * b));
  GammaModule kernel(GammaLattice(group, std::move(action)), lattice::coordinates(b, src.relations()));
  return GammaMap(std::move(kernel), src, b);
}

GammaMap cokernel_map(const GammaMap& f) {
  const auto& tgt = f.target();
  GammaModule quotient(tgt.ambient(), hconcat(tgt.relations(), f.matrix()));
  return GammaMap(tgt, std::move(quotient), IntMatrix::identity(tgt.rank()));
}

GammaMap compose(const GammaMap& first, const GammaMap& second) {
  if (!(first.target() == second.source()))
    throw CompositionMismatch("compose: target of the first map is not the source of the second");
  return GammaMap(first.source(), second.target(), second.matrix() * first.matrix());
}

IntMatrix image_lattice(const GammaMap& f) { return lattice::sum(f.matrix(), f.target().relations()); }

bool is_injective(const GammaMap& f) {
  return lattice::contains(f.source().relations(), lattice::preimage(f.matrix(), f.target().relations()));
}

bool is_surjective(const GammaMap& f) {
  return lattice::contains(image_lattice(f), IntMatrix::identity(f.target().rank()));
}

GammaModule direct_sum(const GammaModule& a, const GammaModule& b) {
  if (!(*a.group() == *b.group())) throw CompositionMismatch("direct_sum: modules over different groups");
  std::vector<IntMatrix> action;
  for (Element g = 0; g < a.group()->order(); ++g) action.push_back(block_diagonal({a.action(g), b.action(g)}));
  return GammaModule(GammaLattice(a.group(), std::move(action)), block_diagonal({a.relations(), b.relations()}));
}

GammaModule reduce_to_lattice(const GammaModule& m) {
  if (!m.is_torsion_free()) throw NotATorus("reduce_to_lattice: module has torsion " + m.underlying().to_string());
  const auto s = snf(m.relations());
  const std::size_t keep = m.rank() - s.rank;
  const IntMatrix project = s.U.select_rows(s.rank, keep);
  const IntMatrix section = s.U_inv.select_columns(s.rank, keep);
  std::vector<IntMatrix> action;
  for (Element g = 0; g < m.group()->order(); ++g) action.push_back(project * m.action(g) * section);
  return GammaModule(GammaLattice(m.group(), std::move(action)));
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!is_unimodular(m)) throw DimensionMismatch("unimodular_inverse: matrix is not unimodular");
  return lattice::coordinates(m, IntMatrix::identity(m.rows()));
}

GammaModule change_basis(const GammaModule& m, const IntMatrix& basis) {
  const IntMatrix inv = unimodular_inverse(basis);
  if (basis.rows() != m.rank()) throw DimensionMismatch("change_basis: basis size");
  std::vector<IntMatrix> action;
  for (Element g = 0; g < m.group()->order(); ++g) action.push_back(inv * m.action(g) * basis);
  return GammaModule(GammaLattice(m.group(), std::move(action)), inv * m.relations());
}

}  // namespace mtinv
