#include "forms/form_inverse.hpp"

#include "errors.hpp"

namespace qsphere {

Scalar f_coefficient(const MultiIndex& m) {
  int total = 0;
  int vexp = 0; // exponent of v
  Scalar den(1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    total += m[i];
    vexp += -m[i] * m[i] + 4 * m[i] * static_cast<int>(i);
    den *= qfact(m[i]);
  }
  Scalar c = (-Scalar::theta()).pow(total) * Scalar::v(vexp) / den;
  return c;
}

FTensor build_F(int n, int D) {
  if (D < 0) throw UsageError("truncation degree must be non-negative");
  check_rank(n);
  FTensor F;
  F.n = n;
  F.D = D;
  for (const auto& m : multi_indices(n, D))
    F.entries.push_back({m, f_coefficient(m), etilde_monomial(m, n), f_monomial(m, n)});
  return F;
}

Json FTensor::to_json() const {
  Json j = Json::array();
  for (const auto& e : entries) j.push_back({{"m", e.m}, {"coeff", e.coeff.to_string()}});
  return j;
}

Report verify_F_inverse(const FTensor& F, const EvalContext& ctx) {
  Stopwatch sw;
  Report rep;
  rep.suite = "f-inverse";
  rep.params = {{"n", F.n}, {"max_deg", F.D}};
  rep.mode = ctx.mode.name();
  if (!ctx.mode.is_lambda()) throw UsageError("f-inverse runs in specialized mode");
  if (ctx.n != F.n) throw UsageError("rank of F and context differ");

  for (const auto& ek : F.entries) {
    // (f^k 1, e~^k 1*) = <gamma^-1(e~^k) f^k>
    Scalar pairing = invariant_form(ek.fpart, ek.epart, ctx);
    Scalar val = specialize(ek.coeff, ctx.mode) * pairing;
    rep.add("diagonal k=" + mi_string(ek.m), val.is_one(), val.is_one() ? std::nullopt : std::optional<std::string>(val.to_string()));
  }
  // off-diagonal sample: for each k, the next index of the same degree
  for (std::size_t a = 0; a + 1 < F.entries.size(); ++a) {
    const auto& ek = F.entries[a];
    const auto& em = F.entries[a + 1];
    int dk = 0, dm = 0;
    for (int x : ek.m) dk += x;
    for (int x : em.m) dm += x;
    if (dk != dm) continue;
    Scalar val = specialize(em.coeff, ctx.mode) * invariant_form(ek.fpart, em.epart, ctx);
    rep.add("off-diagonal k=" + mi_string(ek.m) + " m=" + mi_string(em.m), val.is_zero(),
            val.is_zero() ? std::nullopt : std::optional<std::string>(val.to_string()));
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

} // namespace qsphere
