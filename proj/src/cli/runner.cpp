#include "mtinv/cli/runner.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mtinv/cli/corpus.hpp"
#include "mtinv/errors.hpp"
#include "mtinv/galois/cohomology.hpp"

namespace mtinv::cli {
namespace {

std::string error_kind(const Error& e) {
#define MTINV_KIND(T) \
  if (dynamic_cast<const T*>(&e)) return #T
  MTINV_KIND(CrossCheckFailure);
  MTINV_KIND(ExactnessFailure);
  MTINV_KIND(NotATorus);
  MTINV_KIND(SizeGuard);
  MTINV_KIND(RelationViolation);
  MTINV_KIND(CompositionMismatch);
  MTINV_KIND(DimensionMismatch);
  MTINV_KIND(InvalidSubgroup);
  MTINV_KIND(UnknownConstruction);
#undef MTINV_KIND
  return "Error";
}

void fill_from_report(ReportBlock& b, const InvariantReport& r) {
  b.theorem = std::string(to_string(r.theorem));
  b.group = r.group.to_string();
  b.divisible_rank = r.divisible_rank;
  if (r.divisible_rank) b.value = r.value_string();
  for (const auto& w : r.witnesses) b.witnesses.emplace_back(w.name, w.group.to_string());
  b.checks = r.checks;
}

const Integer& need_modulus(const TaskSpec& t) {
  if (!t.modulus) throw DimensionMismatch(t.op + " needs a modulus");
  return *t.modulus;
}

void compute(ReportBlock& b, const TaskSpec& t, Mode mode) {
  const GammaModule& m = *t.module;
  const MultTypeGroup g{m, t.module_name};
  const H1Method method = mode == Mode::Oracle ? H1Method::FullTable : H1Method::GeneratorsAndRelations;
  if (t.op == "h0") {
    b.group = h0(m).to_string();
  } else if (t.op == "h1") {
    const FinAbGroup value = mode == Mode::Oracle ? h1_oracle(m) : h1(m);
    b.group = value.to_string();
    if (mode != Mode::Oracle && m.group()->order() * m.rank() <= kH1OracleLimit) {
      if (!(h1_oracle(m) == value)) throw CrossCheckFailure("h1 disagrees with h1_oracle");
      b.checks.push_back({"h1 == h1_oracle", true});
    }
  } else if (t.op == "h1_oracle") {
    b.group = h1_oracle(m).to_string();
  } else if (t.op == "inv1_mod_n") {
    fill_from_report(b, inv1_mod_n(g, need_modulus(t)));
  } else if (t.op == "inv1_qz") {
    fill_from_report(b, inv1_qz(g));
  } else if (t.op == "inv0_torus_mod_n") {
    fill_from_report(b, inv0_torus_mod_n(g, need_modulus(t)));
  } else if (t.op == "inv0_torus_qz") {
    fill_from_report(b, inv0_torus_qz(g, method));
  } else if (t.op == "pic_torus") {
    fill_from_report(b, pic_torus(g, method));
  } else if (t.op == "verify_cor52") {
    const Integer& n = need_modulus(t);
    const ExactnessRecord rec = verify_cor52(g, n);
    b.group = rec.kernel.to_string();
    b.witnesses = {{"H0(chars[n])", rec.torsion_fixed.to_string()},
                   {"H0(S/n)", rec.s_fixed.to_string()},
                   {"H0(W/n)", rec.w_fixed.to_string()},
                   {"image(H0(chars[n]))", rec.image.to_string()},
                   {"ker(H0(S/n) -> H0(W/n))", rec.kernel.to_string()}};
    b.checks.push_back({"H0(chars[n]) -> H0(S/n) injective", rec.injective});
    b.checks.push_back({"exact at H0(S/n)", rec.exact});
    const FinAbGroup direct = n_torsion(h0(m), n);
    if (!(direct == rec.torsion_fixed)) throw CrossCheckFailure("H0(chars[n]) differs from H0(chars)[n]");
    b.checks.push_back({"H0(chars[n]) == H0(chars)[n]", true});
  } else if (t.op == "resolve") {
    const ToriResolution res = resolve_by_tori(g);
    b.group = m.underlying().to_string();
    b.witnesses = {{"chars", m.underlying().to_string()},
                   {"W", FinAbGroup::free(res.W.rank()).to_string()},
                   {"S", FinAbGroup::free(res.S.rank()).to_string()}};
    b.checks.push_back({"W is a permutation lattice", res.W.is_permutation()});
    b.checks.push_back({"0 -> S -> W -> chars -> 0 exact", true});
  } else {
    throw DimensionMismatch("unknown op '" + t.op + "'");
  }
}

std::vector<ReportBlock> execute_all(const std::vector<TaskSpec>& tasks, Mode mode, unsigned jobs) {
  std::vector<ReportBlock> blocks(tasks.size());
  auto work = [&](std::size_t i) {
    blocks[i] = execute(tasks[i], mode);
    blocks[i].index = i + 1;
  };
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) work(i);
    return blocks;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) work(i);
    });
  for (auto& th : pool) th.join();
  return blocks;
}

std::vector<Integer> ladder(const RunOptions& options) {
  if (options.modulus) return {*options.modulus};
  std::vector<Integer> out;
  for (long n : kVerifyLadder) out.emplace_back(n);
  return out;
}

RunOutcome finish(std::vector<ReportBlock> blocks, const RunOptions& options) {
  RunOutcome out;
  out.exit_code = exit_status(blocks);
  out.report = options.format == Format::Json ? render_json(blocks) : render_text(blocks);
  return out;
}

}  // namespace

int exit_status(const std::vector<ReportBlock>& blocks) {
  for (const auto& b : blocks)
    if (b.failed) return 1;
  return 0;
}

ReportBlock execute(const TaskSpec& task, Mode mode) {
  ReportBlock b;
  b.op = task.op;
  b.module = task.module_name;
  b.modulus = task.modulus;
  try {
    compute(b, task, mode);
    for (const auto& c : b.checks)
      if (!c.passed) b.failed = true;
  } catch (const CrossCheckFailure& e) {
    b.failed = true;
    b.error = error_kind(e) + ": " + e.what();
  } catch (const ExactnessFailure& e) {
    b.failed = true;
    b.error = error_kind(e) + ": " + e.what();
  } catch (const Error& e) {
    b.error = error_kind(e) + ": " + e.what();
  }
  return b;
}

RunOutcome run(const ProblemFile& problem, const RunOptions& options) {
  std::vector<TaskSpec> tasks;
  if (options.mode == Mode::Verify) {
    for (const auto& m : problem.modules)
      for (const auto& n : ladder(options)) {
        tasks.push_back({"verify_cor52", m.name, &m.module, n});
        tasks.push_back({"inv1_mod_n", m.name, &m.module, n});
      }
  } else {
    for (const auto& t : problem.tasks) {
      const NamedModule* m = problem.find(t.module);
      tasks.push_back({t.op, t.module, &m->module, options.modulus ? options.modulus : t.modulus});
    }
  }
  return finish(execute_all(tasks, options.mode, options.jobs), options);
}

RunOutcome run_corpus(const RunOptions& options) {
  const auto corpus = multiplicative_corpus();
  std::vector<TaskSpec> tasks;
  std::vector<std::pair<std::size_t, std::string>> sections;
  for (const auto& e : corpus) {
    sections.emplace_back(tasks.size(), e.name + " over " + e.group_name + ", chars " +
                                            e.group.chars.underlying().to_string());
    const GammaModule* m = &e.group.chars;
    tasks.push_back({"resolve", e.name, m, std::nullopt});
    for (const auto& n : ladder(options)) tasks.push_back({"inv1_mod_n", e.name, m, n});
    tasks.push_back({"inv1_qz", e.name, m, std::nullopt});
    for (const auto& n : ladder(options)) tasks.push_back({"verify_cor52", e.name, m, n});
    if (e.group.is_torus()) {
      for (long n : {2, 3}) tasks.push_back({"inv0_torus_mod_n", e.name, m, options.modulus.value_or(n)});
      tasks.push_back({"inv0_torus_qz", e.name, m, std::nullopt});
      tasks.push_back({"pic_torus", e.name, m, std::nullopt});
    }
  }
  auto blocks = execute_all(tasks, Mode::Compute, options.jobs);
  for (const auto& [at, title] : sections) blocks[at].section = title;
  return finish(std::move(blocks), options);
}

std::string render_text(const std::vector<ReportBlock>& blocks) {
  std::ostringstream os;
  std::size_t failures = 0, errors = 0;
  for (const auto& b : blocks) {
    if (b.section) os << "## " << *b.section << "\n";
    os << "[" << b.index << "] " << b.op << " " << b.module << "\n";
    if (b.theorem) os << "  theorem: " << *b.theorem << "\n";
    if (b.modulus) os << "  modulus: " << b.modulus->get_str() << "\n";
    if (b.group) os << "  group: " << *b.group << "\n";
    if (b.divisible_rank) os << "  divisible_rank: " << *b.divisible_rank << "\n";
    if (b.value) os << "  value: " << *b.value << "\n";
    for (const auto& [name, group] : b.witnesses) os << "  witness " << name << ": " << group << "\n";
    for (const auto& c : b.checks) os << "  check " << c.name << ": " << (c.passed ? "PASS" : "FAIL") << "\n";
    if (b.failed && b.error) os << "  check " << b.op << ": FAIL\n";
    if (b.error) os << "  error: " << *b.error << "\n";
    if (b.failed)
      ++failures;
    else if (b.error)
      ++errors;
  }
  os << "summary: " << blocks.size() << " tasks, " << failures << " failed, " << errors << " errors\n";
  return os.str();
}

std::string render_json(const std::vector<ReportBlock>& blocks) {
  using json = nlohmann::ordered_json;
  json arr = json::array();
  bool failed = false;
  for (const auto& b : blocks) {
    json j;
    j["index"] = b.index;
    if (b.section) j["section"] = *b.section;
    j["op"] = b.op;
    j["module"] = b.module;
    if (b.theorem) j["theorem"] = *b.theorem;
    if (b.modulus) j["modulus"] = b.modulus->get_str();
    if (b.group) j["group"] = *b.group;
    if (b.divisible_rank) j["divisible_rank"] = *b.divisible_rank;
    if (b.value) j["value"] = *b.value;
    json w = json::array();
    for (const auto& [name, group] : b.witnesses) w.push_back({{"name", name}, {"group", group}});
    j["witnesses"] = std::move(w);
    json c = json::array();
    for (const auto& ch : b.checks) c.push_back({{"name", ch.name}, {"result", ch.passed ? "PASS" : "FAIL"}});
    j["checks"] = std::move(c);
    if (b.error) j["error"] = *b.error;
    j["failed"] = b.failed;
    failed = failed || b.failed;
    arr.push_back(std::move(j));
  }
  json doc;
  doc["tasks"] = std::move(arr);
  doc["status"] = failed ? "FAIL" : "PASS";
  return doc.dump(2) + "\n";
}

}  // namespace mtinv::cli
