#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtinv/galois/gamma_module.hpp"

namespace mtinv::cli {

struct NamedModule {
  std::string name;
  GammaModule module;
};

struct Task {
  std::string op;
  std::string module;
  std::optional<Integer> modulus;
};

// A validated problem: one finite group, modules over it, and tasks.
//
// JSON layout (unknown keys are rejected):
//   {"group":   {"name": str?, "order": int,
//                "permutations": [[int...]...]                      -- or --
//                "table": [[int...]...], "generators": [int...]},
//    "modules": [{"name": str, "rank": int,
//                 "action": [matrix per generator], "relations": matrix?}],
//    "tasks":   [{"op": str, "module": str, "modulus": int?}]}
// Matrices are row-major arrays of integer rows; integers may be JSON numbers
// or decimal strings.
struct ProblemFile {
  std::string group_name;
  GroupPtr group;
  // Either the permutation generators or the table description, as given.
  std::vector<Permutation> permutations;
  bool from_table = false;
  std::vector<NamedModule> modules;
  std::vector<Task> tasks;

  const NamedModule* find(std::string_view name) const;
};

inline const std::vector<std::string>& known_ops() {
  static const std::vector<std::string> ops = {"h0",       "h1",           "h1_oracle",       "inv1_mod_n",
                                               "inv1_qz",  "inv0_torus_mod_n", "inv0_torus_qz", "pic_torus",
                                               "verify_cor52", "resolve"};
  return ops;
}

// Throws ParseError (malformed JSON), SchemaError (shape of the document) or
// ValidationError (group/action/relation invariants, unresolved names).
ProblemFile parse_problem(std::string_view bytes);

// Canonical JSON text of a problem; parse_problem(serialize_problem(p)) is
// equivalent to p.
std::string serialize_problem(const ProblemFile& p);

}  // namespace mtinv::cli
