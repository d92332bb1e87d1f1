#include "mtinv/cli/problem.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "mtinv/errors.hpp"

namespace mtinv::cli {
namespace {

using json = nlohmann::ordered_json;

void require_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional) {
  if (!obj.is_object()) throw SchemaError(std::string(where) + ": expected an object");
  for (auto key : required)
    if (!obj.contains(std::string(key))) throw SchemaError(std::string(where) + ": missing field '" + std::string(key) + "'");
  for (const auto& [key, value] : obj.items()) {
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) throw SchemaError(std::string(where) + ": unexpected field '" + key + "'");
  }
}

Integer to_integer(const json& v, std::string_view where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<unsigned long long>()));
    return Integer(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) throw SchemaError(std::string(where) + ": '" + s + "' is not an integer");
    return out;
  }
  throw SchemaError(std::string(where) + ": expected an integer");
}

std::size_t to_index(const json& v, std::string_view where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw SchemaError(std::string(where) + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::size_t> to_index_list(const json& v, std::string_view where) {
  if (!v.is_array()) throw SchemaError(std::string(where) + ": expected an array");
  std::vector<std::size_t> out;
  for (const auto& x : v) out.push_back(to_index(x, where));
  return out;
}

IntMatrix to_matrix(const json& v, std::size_t rows, std::optional<std::size_t> cols, std::string_view where) {
  if (!v.is_array()) throw SchemaError(std::string(where) + ": expected an array of rows");
  if (v.size() != rows)
    throw ValidationError(std::string(where) + ": expected " + std::to_string(rows) + " rows, got " +
                          std::to_string(v.size()));
  std::size_t width = cols.value_or(rows == 0 ? 0 : (v[0].is_array() ? v[0].size() : 0));
  std::vector<Integer> entries;
  for (const auto& row : v) {
    if (!row.is_array()) throw SchemaError(std::string(where) + ": rows must be arrays");
    if (row.size() != width)
      throw ValidationError(std::string(where) + ": expected rows of length " + std::to_string(width));
    for (const auto& x : row) entries.push_back(to_integer(x, where));
  }
  return IntMatrix(rows, width, std::move(entries));
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& e = m(i, j);
      if (e.fits_slong_p())
        row.push_back(e.get_si());
      else
        row.push_back(e.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const NamedModule* ProblemFile::find(std::string_view name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

ProblemFile parse_problem(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  require_keys(doc, "problem", {"group", "modules", "tasks"}, {});

  ProblemFile p;
  const json& g = doc["group"];
  require_keys(g, "group", {"order"}, {"name", "permutations", "table", "generators"});
  const std::size_t order = to_index(g["order"], "group.order");
  if (g.contains("name")) {
    if (!g["name"].is_string()) throw SchemaError("group.name: expected a string");
    p.group_name = g["name"].get<std::string>();
  }
  const bool has_perms = g.contains("permutations");
  const bool has_table = g.contains("table");
  if (has_perms == has_table) throw SchemaError("group: give exactly one of 'permutations' or 'table'");
  try {
    if (has_perms) {
      if (g.contains("generators")) throw SchemaError("group: 'generators' only accompanies 'table'");
      if (!g["permutations"].is_array()) throw SchemaError("group.permutations: expected an array");
      for (const auto& perm : g["permutations"]) p.permutations.push_back(to_index_list(perm, "group.permutations"));
      p.group = share(FiniteGroup::from_permutations(p.permutations));
    } else {
      if (!g.contains("generators")) throw SchemaError("group: 'table' requires 'generators'");
      const json& t = g["table"];
      if (!t.is_array()) throw SchemaError("group.table: expected an array");
      std::vector<std::vector<Element>> table;
      for (const auto& row : t) table.push_back(to_index_list(row, "group.table"));
      p.group = share(FiniteGroup::from_table(std::move(table), to_index_list(g["generators"], "group.generators")));
      p.from_table = true;
    }
  } catch (const InvalidGroup& e) {
    throw ValidationError(std::string("group: ") + e.what());
  }
  if (p.group->order() != order)
    throw ValidationError("group: declared order " + std::to_string(order) + " but generators give " +
                          std::to_string(p.group->order()));

  const json& mods = doc["modules"];
  if (!mods.is_array()) throw SchemaError("modules: expected an array");
  std::set<std::string> names;
  for (const auto& m : mods) {
    require_keys(m, "module", {"name", "rank", "action"}, {"relations"});
    if (!m["name"].is_string()) throw SchemaError("module.name: expected a string");
    const std::string name = m["name"].get<std::string>();
    const std::string where = "module '" + name + "'";
    if (!names.insert(name).second) throw ValidationError(where + ": duplicate module name");
    const std::size_t rank = to_index(m["rank"], where + ".rank");
    const json& action = m["action"];
    if (!action.is_array()) throw SchemaError(where + ".action: expected an array of matrices");
    if (action.size() != p.group->generators().size())
      throw ValidationError(where + ": expected one action matrix per generator (" +
                            std::to_string(p.group->generators().size()) + ")");
    std::vector<IntMatrix> gens;
    for (const auto& a : action) gens.push_back(to_matrix(a, rank, rank, where + ".action"));
    IntMatrix relations(rank, 0);
    if (m.contains("relations")) relations = to_matrix(m["relations"], rank, std::nullopt, where + ".relations");
    try {
      GammaLattice lat = gens.empty() ? GammaLattice::trivial(p.group, rank)
                                      : GammaLattice::from_generator_action(p.group, gens);
      p.modules.push_back({name, GammaModule(std::move(lat), std::move(relations))});
    } catch (const RelationViolation& e) {
      throw ValidationError(where + ": " + e.what());
    } catch (const DimensionMismatch& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }

  const json& tasks = doc["tasks"];
  if (!tasks.is_array()) throw SchemaError("tasks: expected an array");
  for (const auto& t : tasks) {
    require_keys(t, "task", {"op", "module"}, {"modulus"});
    if (!t["op"].is_string() || !t["module"].is_string()) throw SchemaError("task: 'op' and 'module' must be strings");
    Task task{t["op"].get<std::string>(), t["module"].get<std::string>(), std::nullopt};
    const auto& ops = known_ops();
    if (std::find(ops.begin(), ops.end(), task.op) == ops.end()) throw SchemaError("task: unknown op '" + task.op + "'");
    if (!p.find(task.module)) throw ValidationError("task " + task.op + ": unknown module '" + task.module + "'");
    if (t.contains("modulus")) {
      task.modulus = to_integer(t["modulus"], "task.modulus");
      if (*task.modulus < 1) throw ValidationError("task " + task.op + ": modulus must be positive");
    }
    p.tasks.push_back(std::move(task));
  }
  return p;
}

std::string serialize_problem(const ProblemFile& p) {
  json doc;
  json g;
  if (!p.group_name.empty()) g["name"] = p.group_name;
  g["order"] = p.group->order();
  if (p.from_table || p.permutations.empty()) {
    g["table"] = p.group->table();
    g["generators"] = p.group->generators();
  } else {
    g["permutations"] = p.permutations;
  }
  doc["group"] = std::move(g);
  json mods = json::array();
  for (const auto& m : p.modules) {
    json jm;
    jm["name"] = m.name;
    jm["rank"] = m.module.rank();
    json action = json::array();
    for (const auto& a : m.module.ambient().generator_action()) action.push_back(matrix_json(a));
    jm["action"] = std::move(action);
    if (m.module.relations().cols() > 0) jm["relations"] = matrix_json(m.module.relations());
    mods.push_back(std::move(jm));
  }
  doc["modules"] = std::move(mods);
  json tasks = json::array();
  for (const auto& t : p.tasks) {
    json jt;
    jt["op"] = t.op;
    jt["module"] = t.module;
    if (t.modulus) {
      if (t.modulus->fits_slong_p())
        jt["modulus"] = t.modulus->get_si();
      else
        jt["modulus"] = t.modulus->get_str();
    }
    tasks.push_back(std::move(jt));
  }
  doc["tasks"] = std::move(tasks);
  return doc.dump(2) + "\n";
}

}  // namespace mtinv::cli
