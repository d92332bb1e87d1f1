#include "mtinv/invariants/invariants.hpp"

#include <utility>

#include "mtinv/errors.hpp"
#include "mtinv/galois/cohomology.hpp"

namespace mtinv {
namespace {

void require_torus(const MultTypeGroup& t) {
  if (!t.is_torus())
    throw NotATorus((t.name.empty() ? std::string("group") : t.name) + " has character module with torsion " +
                    t.chars.underlying().to_string());
}

FinAbGroup compute_h1(const GammaModule& m, H1Method method) {
  return method == H1Method::FullTable ? h1_oracle(m) : h1(m);
}

Integer power(const Integer& base, std::size_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

std::string_view to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::T1_mod_n: return "T1_mod_n";
    case TheoremTag::T1_QZ_finite_part: return "T1_QZ_finite_part";
    case TheoremTag::T0_torus_mod_n: return "T0_torus_mod_n";
    case TheoremTag::T0_torus_QZ: return "T0_torus_QZ";
    case TheoremTag::Pic: return "Pic";
  }
  return "?";
}

std::string InvariantReport::value_string() const {
  if (!divisible_rank) return group.to_string();
  std::string out;
  if (*divisible_rank == 1)
    out = "Q/Z";
  else if (*divisible_rank > 1)
    out = "(Q/Z)^" + std::to_string(*divisible_rank);
  if (group.is_trivial()) return out.empty() ? "0" : out;
  return out.empty() ? group.to_string() : out + " + " + group.to_string();
}

InvariantReport inv1_mod_n(const MultTypeGroup& g, const Integer& n) { return inv1_mod_n(g, n, resolve_by_tori(g)); }

InvariantReport inv1_mod_n(const MultTypeGroup& g, const Integer& n, const ToriResolution& res) {
  if (n < 1) throw DimensionMismatch("inv1_mod_n: n must be positive");
  const FinAbGroup fixed = h0(g.chars);
  const FinAbGroup direct = n_torsion(fixed, n);

  const GammaModule s_mod = mod_n(GammaModule(res.S), n);
  const GammaModule w_mod = mod_n(GammaModule(res.W), n);
  const FinAbGroup via_resolution = h0_kernel(GammaMap(s_mod, w_mod, res.incl.matrix()));

  InvariantReport r;
  r.theorem = TheoremTag::T1_mod_n;
  r.modulus = n;
  r.group = direct;
  r.witnesses = {{"H0(chars)", fixed},
                 {"H0(chars)[n]", direct},
                 {"H0(S/n)", h0(s_mod)},
                 {"H0(W/n)", h0(w_mod)},
                 {"ker(H0(S/n) -> H0(W/n))", via_resolution}};
  if (!(direct == via_resolution))
    throw CrossCheckFailure("inv1_mod_n: H0(chars)[n] = " + direct.to_string() + " but resolution kernel = " +
                            via_resolution.to_string());
  r.checks.push_back({"H0(chars)[n] == ker(H0(S/n) -> H0(W/n))", true});
  return r;
}

InvariantReport inv1_qz(const MultTypeGroup& g) {
  const FinAbGroup fixed = h0(g.chars);
  const FinAbGroup tors = torsion_part(fixed);
  const Integer e = tors.exponent();
  const InvariantReport stable = inv1_mod_n(g, e);

  InvariantReport r;
  r.theorem = TheoremTag::T1_QZ_finite_part;
  r.group = tors;
  r.witnesses = {{"H0(chars)", fixed}, {"inv1_mod_n at exponent " + e.get_str(), stable.group}};
  if (!(stable.group == tors))
    throw CrossCheckFailure("inv1_qz: torsion " + tors.to_string() + " differs from inv1_mod_n at the exponent " +
                            stable.group.to_string());
  r.checks.push_back({"stabilizes at exponent " + e.get_str(), true});
  return r;
}

InvariantReport inv0_torus_mod_n(const MultTypeGroup& t, const Integer& n) {
  require_torus(t);
  if (n < 1) throw DimensionMismatch("inv0_torus_mod_n: n must be positive");
  InvariantReport r;
  r.theorem = TheoremTag::T0_torus_mod_n;
  r.modulus = n;
  r.group = h0(mod_n(t.chars, n));
  r.witnesses = {{"H0(chars)", h0(t.chars)}, {"H0(chars/n)", r.group}};
  return r;
}

InvariantReport inv0_torus_qz(const MultTypeGroup& t, H1Method method) {
  require_torus(t);
  const FinAbGroup fixed = h0(t.chars);
  const FinAbGroup cohom = compute_h1(t.chars, method);

  InvariantReport r;
  r.theorem = TheoremTag::T0_torus_QZ;
  r.divisible_rank = fixed.free_rank();
  r.group = cohom;
  r.witnesses = {{"H0(chars)", fixed}, {"H1(chars)", cohom}};
  for (long step : kQZLadder) {
    const Integer n = step;
    const FinAbGroup level = h0(mod_n(t.chars, n));
    r.witnesses.push_back({"H0(chars/" + n.get_str() + ")", level});
    const Integer expected = power(n, fixed.free_rank()) * n_torsion(cohom, n).order();
    const std::string name = "|H0(chars/" + n.get_str() + ")| == " + n.get_str() + "^r * |H1(chars)[" + n.get_str() + "]|";
    if (level.order() != expected)
      throw CrossCheckFailure("inv0_torus_qz: ladder failed at n = " + n.get_str() + ": " + level.to_string());
    r.checks.push_back({name, true});
  }
  return r;
}

InvariantReport pic_torus(const MultTypeGroup& t, H1Method method) {
  require_torus(t);
  InvariantReport r;
  r.theorem = TheoremTag::Pic;
  r.group = compute_h1(t.chars, method);
  r.witnesses = {{"H1(chars)", r.group}};
  if (t.chars.group()->order() * t.chars.rank() <= kH1OracleLimit) {
    const H1Method other = method == H1Method::FullTable ? H1Method::GeneratorsAndRelations : H1Method::FullTable;
    const FinAbGroup second = compute_h1(t.chars, other);
    if (!(second == r.group))
      throw CrossCheckFailure("pic_torus: H1 by generators and relations disagrees with the full cocycle table");
    r.checks.push_back({"h1 == h1_oracle", true});
  }
  return r;
}

ExactnessRecord verify_cor52(const MultTypeGroup& g, const Integer& n) { return verify_cor52(resolve_by_tori(g), n); }

ExactnessRecord verify_cor52(const ToriResolution& res, const Integer& n) {
  const CharacterSequence cs = character_sequence_mod_n(res, n);
  const FixedPointSequence seq = fixed_point_sequence(cs.connecting, cs.s_to_w);
  ExactnessRecord rec{n, seq.left, seq.middle, seq.right, seq.kernel, seq.image, seq.injective, seq.exact};
  if (!rec.injective) throw ExactnessFailure("verify_cor52: H0(chars[n]) -> H0(S/n) is not injective");
  if (!rec.exact) throw ExactnessFailure("verify_cor52: sequence is not exact at H0(S/n)");
  return rec;
}

}  // namespace mtinv
