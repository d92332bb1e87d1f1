#include "mtinv/galois/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "mtinv/errors.hpp"

namespace mtinv {
namespace {

constexpr auto kNone = static_cast<Element>(-1);

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> mul, std::vector<Element> generators,
                                    std::vector<std::string> names) {
  const std::size_t n = mul.size();
  if (n == 0) throw InvalidGroup("group table is empty");
  for (const auto& row : mul) {
    if (row.size() != n) throw InvalidGroup("group table is not square");
    for (Element x : row)
      if (x >= n) throw InvalidGroup("group table entry out of range");
  }
  FiniteGroup g;
  g.mul_ = std::move(mul);
  g.identity_ = kNone;
  for (Element e = 0; e < n && g.identity_ == kNone; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = g.mul_[e][x] == x && g.mul_[x][e] == x;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ == kNone) throw InvalidGroup("group table has no identity");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (g.mul_[g.mul_[a][b]][c] != g.mul_[a][g.mul_[b][c]])
          throw InvalidGroup("group table is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
  g.inverse_.assign(n, kNone);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b)
      if (g.mul_[a][b] == g.identity_ && g.mul_[b][a] == g.identity_) g.inverse_[a] = b;
    if (g.inverse_[a] == kNone) throw InvalidGroup("element " + std::to_string(a) + " has no inverse");
  }
  for (Element s : generators)
    if (s >= n) throw InvalidGroup("generator index out of range");
  g.generators_ = std::move(generators);
  if (names.empty()) {
    for (Element a = 0; a < n; ++a) names.push_back("g" + std::to_string(a));
  } else if (names.size() != n) {
    throw InvalidGroup("element name count does not match group order");
  }
  g.names_ = std::move(names);
  g.build_words();
  return g;
}

void FiniteGroup::build_words() {
  const std::size_t n = order();
  words_.assign(n, {});
  parent_.assign(n, {kNone, 0});
  std::vector<bool> seen(n, false);
  std::deque<Element> queue{identity_};
  seen[identity_] = true;
  while (!queue.empty()) {
    const Element h = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < generators_.size(); ++s) {
      const Element x = mul_[h][generators_[s]];
      if (seen[x]) continue;
      seen[x] = true;
      parent_[x] = {h, s};
      words_[x] = words_[h];
      words_[x].push_back(s);
      queue.push_back(x);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InvalidGroup("generators do not generate the group");
}

bool FiniteGroup::is_tree_edge(Element g, std::size_t s) const {
  const Element x = mul_[g][generators_[s]];
  return x != identity_ && parent_[x].first == g && parent_[x].second == s;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators) {
  std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw InvalidGroup("permutation generators have different degrees");
    Permutation sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < degree; ++i)
      if (sorted[i] != i) throw InvalidGroup("generator is not a permutation");
  }
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;
  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const auto& s : generators) {
      Permutation x = compose(elements[k], s);
      if (index.emplace(x, elements.size()).second) elements.push_back(std::move(x));
    }
  const std::size_t n = elements.size();
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul[a][b] = index.at(compose(elements[a], elements[b]));
  std::vector<Element> gens;
  for (const auto& s : generators) gens.push_back(index.at(s));
  std::vector<std::string> names;
  for (const auto& p : elements) names.push_back(cycle_string(p));
  return from_table(std::move(mul), std::move(gens), std::move(names));
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}, {}, {"e"}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InvalidGroup("cyclic group of order 0");
  if (n == 1) return trivial();
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::string> names;
  for (Element a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : a == 1 ? "s" : "s^" + std::to_string(a));
    for (Element b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return from_table(std::move(mul), {1}, std::move(names));
}

FiniteGroup FiniteGroup::klein_four() {
  std::vector<std::vector<Element>> mul(4, std::vector<Element>(4));
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) mul[a][b] = a ^ b;
  return from_table(std::move(mul), {1, 2}, {"e", "a", "b", "ab"});
}

FiniteGroup FiniteGroup::symmetric3() { return from_permutations({{1, 0, 2}, {1, 2, 0}}); }

bool FiniteGroup::is_subgroup(const std::vector<Element>& elements) const {
  if (elements.empty()) return false;
  std::vector<bool> in(order(), false);
  for (Element x : elements) {
    if (x >= order() || in[x]) return false;
    in[x] = true;
  }
  if (!in[identity_]) return false;
  for (Element a : elements)
    for (Element b : elements)
      if (!in[mul_[a][inverse_[b]]]) return false;
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::left_cosets(const std::vector<Element>& subgroup) const {
  if (!is_subgroup(subgroup)) throw InvalidSubgroup("element list is not a subgroup");
  std::vector<std::vector<Element>> cosets;
  std::vector<bool> covered(order(), false);
  // Identity first, then remaining elements in index order.
  std::vector<Element> reps{identity_};
  for (Element g = 0; g < order(); ++g)
    if (g != identity_) reps.push_back(g);
  for (Element g : reps) {
    if (covered[g]) continue;
    std::vector<Element> coset;
    for (Element h : subgroup) {
      coset.push_back(mul_[g][h]);
      covered[mul_[g][h]] = true;
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

std::vector<Permutation> FiniteGroup::coset_action(const std::vector<Element>& subgroup) const {
  const auto cosets = left_cosets(subgroup);
  std::vector<std::size_t> coset_of(order());
  for (std::size_t c = 0; c < cosets.size(); ++c)
    for (Element x : cosets[c]) coset_of[x] = c;
  std::vector<Permutation> out;
  for (Element s : generators_) {
    Permutation p(cosets.size());
    for (std::size_t c = 0; c < cosets.size(); ++c) p[c] = coset_of[mul_[s][cosets[c].front()]];
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Permutation> FiniteGroup::regular_action() const {
  std::vector<Permutation> out;
  for (Element s : generators_) {
    Permutation p(order());
    for (Element g = 0; g < order(); ++g) p[g] = mul_[s][g];
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace mtinv
