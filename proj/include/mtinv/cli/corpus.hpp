#pragma once

#include <string>
#include <vector>

#include "mtinv/cli/problem.hpp"
#include "mtinv/galois/gamma_module.hpp"
#include "mtinv/mult_type/mult_type.hpp"

namespace mtinv::cli {

struct CorpusGroup {
  std::string name;
  GroupPtr group;
};

// C1, C2, C3, C4, C6, C8, V4, S3.
std::vector<CorpusGroup> corpus_groups();

// Every subgroup, ordered by size and then by element list.
std::vector<std::vector<Element>> all_subgroups(const FiniteGroup& g);

struct CorpusLattice {
  std::string name;
  GammaModule module;
  bool regular = false;
};

// Standard lattices over one group: trivial, regular, permutation lattices
// Z[G/H], norm-one lattices Z[G/H]/Z, augmentation kernels and a few sums.
// Regular blocks are always included; others are kept to rank <= max_rank.
std::vector<CorpusLattice> corpus_lattices(const CorpusGroup& g, std::size_t max_rank = 4);

struct CorpusEntry {
  std::string name;
  std::string group_name;
  MultTypeGroup group;
};

// The shipped groups of multiplicative type.
std::vector<CorpusEntry> multiplicative_corpus();

// A one-module problem file for a corpus entry (no tasks).
ProblemFile to_problem(const CorpusEntry& e);

}  // namespace mtinv::cli
