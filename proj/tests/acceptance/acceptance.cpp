// One line per acceptance criterion; exit status 0 iff every line is PASS.

#include "forms/form_inverse.hpp"
#include "plane/plane_suites.hpp"
#include "verify/verma_suites.hpp"

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qsphere;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string note;

  void absorb(const Report& r, const std::string& label) {
    checks += r.checks.size();
    for (const auto& c : r.checks)
      if (!c.pass) {
        if (pass) note = label + ": " + c.name + (c.witness ? " (" + *c.witness + ")" : "");
        pass = false;
      }
  }
  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

int failed = 0;

void line(int id, const char* name, const char* scope, const std::function<Outcome()>& body) {
  Stopwatch sw;
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  if (!o.pass) ++failed;
  std::printf("%s %2d %-26s %-44s %6zu checks %7lld ms%s%s\n", o.pass ? "PASS" : "FAIL", id, name, scope, o.checks,
              static_cast<long long>(sw.ms()), o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
}

std::string sig(int s) { return s > 0 ? "sigma=+1" : "sigma=-1"; }

} // namespace

int main() {
  // The radical check gates every criterion that relies on the quotient oracle.
  bool oracle_ok = true;
  Outcome serre;
  Stopwatch serre_sw;
  for (int n : {2, 3, 4}) serre.absorb(verify_serre_radical({n, SpecMode::generic()}, 5), "n=" + std::to_string(n));
  oracle_ok = serre.pass;
  auto gated = [&](const std::function<Outcome()>& body) {
    return [&, body] {
      if (oracle_ok) return body();
      Outcome o;
      o.pass = false;
      o.note = "serre-radical gate failed";
      return o;
    };
  };

  line(1, "shapovalov-factorization", "n=2 |m|<=4, n=3 |m|<=3, both sigma", [] {
    Outcome o;
    for (int s : {1, -1}) {
      o.absorb(verify_factorization({2, SpecMode::lambda(s)}, 4), "n=2 " + sig(s));
      o.absorb(verify_factorization({3, SpecMode::lambda(s)}, 3), "n=3 " + sig(s));
    }
    return o;
  });

  line(2, "basis-action", "n=2,3 |m|<=4, both sigma", gated([] {
         Outcome o;
         for (int n : {2, 3})
           for (int s : {1, -1}) {
             IrreducibleModule L(n, SpecMode::lambda(s));
             o.absorb(verify_span_action(L, 4), "n=" + std::to_string(n) + " " + sig(s));
           }
         return o;
       }));

  line(3, "irreducibility", "n=2 |m|<=4, v0 in {2,3}, both sigma", gated([] {
         Outcome o;
         for (int s : {1, -1}) o.absorb(verify_irreducibility(2, {Scalar(2), Scalar(3)}, s, 4, 2), sig(s));
         return o;
       }));

  line(4, "f-inverse", "n=2 |k|<=4, both sigma", gated([] {
         Outcome o;
         FTensor F = build_F(2, 4);
         for (int s : {1, -1}) o.absorb(verify_F_inverse(F, {2, SpecMode::lambda(s)}), sig(s));
         return o;
       }));

  line(5, "xyz-lemma", "n=3,4 generic, 120 random triples", [] {
    Outcome o;
    for (int n : {3, 4}) o.absorb(verify_xyz({n, SpecMode::generic()}, 120, 1), "n=" + std::to_string(n));
    return o;
  });

  {
    long long ms = serre_sw.ms();
    if (!serre.pass) ++failed;
    std::printf("%s %2d %-26s %-44s %6zu checks %7lld ms%s%s\n", serre.pass ? "PASS" : "FAIL", 6, "serre-radical",
                "n=2,3,4 generic, weight bound 5", serre.checks, ms, serre.note.empty() ? "" : "  ", serre.note.c_str());
  }

  line(7, "delta-invariance", "n=2,3, k<=6", [] {
    Outcome o;
    for (int n : {2, 3}) o.absorb(verify_delta_inv(n, 6), "n=" + std::to_string(n));
    return o;
  });

  line(8, "invariant-dimensions", "n=2 m<=6, n=3 m<=4, v0 in {2,3}", [] {
    Outcome o;
    o.absorb(verify_invariant_dims(2, 6, {Scalar(2), Scalar(3)}), "n=2");
    o.absorb(verify_invariant_dims(3, 4, {Scalar(2), Scalar(3)}), "n=3");
    return o;
  });

  line(9, "star-product", "n=2, invariant degrees <=2", [] {
    Outcome o;
    Report r = verify_star(2, 2);
    o.absorb(r, "n=2");
    o.require(r.params.contains("non_associative_witness"), "no non-associative triple found");
    return o;
  });

  line(10, "module-algebra", "n=2,3, 200 random cases each", [] {
    Outcome o;
    for (int n : {2, 3}) o.absorb(verify_module_algebra(n, 4, 200, 1), "n=" + std::to_string(n));
    return o;
  });

  std::printf("%s: %d of 10 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
