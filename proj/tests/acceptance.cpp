// Acceptance suite: every criterion prints one pass/fail line; the process
// exits nonzero when any criterion fails. All checks are exact equalities on
// finite structures, each with a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "slat/classify.hpp"
#include "slat/downsets.hpp"
#include "slat/envelope.hpp"
#include "slat/frame.hpp"
#include "slat/generate.hpp"
#include "slat/iso.hpp"
#include "slat/rng.hpp"
#include "slat/sweep.hpp"

using namespace slat;

namespace {

MeetSemilattice parse_ms(const std::string& text) {
  return MeetSemilattice::from_poset(Poset::parse(text));
}

MeetSemilattice m3() {
  return parse_ms("elements: 0 x y z 1\ncovers: 0<x 0<y 0<z x<1 y<1 z<1\n");
}
MeetSemilattice c3() { return parse_ms("elements: 0 m 1\ncovers: 0<m m<1\n"); }
MeetSemilattice fence() { return parse_ms("elements: 0 a b\ncovers: 0<a 0<b\n"); }

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

int failures = 0;

void run_criterion(const Criterion& c) {
  std::string why;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = c.run(why);
  } catch (const std::exception& e) {
    why = e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > c.budget_seconds) {
    ok = false;
    why = "over budget (" + std::to_string(c.budget_seconds) + " s)";
  }
  if (!ok) ++failures;
  std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
              c.name.c_str(), elapsed, why.empty() ? "" : " — ", why.c_str());
  std::fflush(stdout);
}

bool all_pass(const SweepResult& r, std::string& why) {
  for (const auto& v : r.verdicts)
    if (v.status == "fail") {
      why = v.instance + ": " + v.detail;
      return false;
    }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "dideal closure is a nucleus computed by annihilators (size <= 6)", 60,
                      [](std::string& why) {
                        for (int n = 1; n <= 6; ++n)
                          for (const auto& a : exhaustive_instances(n)) {
                            auto fam = downsets(a);
                            for (Mask e : fam.members)
                              if (dideal_closure_by_saturation(a, e) !=
                                  dideal_closure_by_annihilators(a, e)) {
                                why = "route mismatch at " + a.poset().set_label(e);
                                return false;
                              }
                            if (auto v = verify_nucleus(a.poset(), dideal_map(a), fam); !v) {
                              why = v.detail;
                              return false;
                            }
                          }
                        return true;
                      }});

  criteria.push_back({2, "induced nucleus equals the dideal closure pointwise (size <= 6)", 120,
                      [](std::string& why) {
                        for (int n = 1; n <= 6; ++n)
                          for (const auto& a : exhaustive_instances(n)) {
                            auto normals = normal_family(a);
                            for (Mask e : downsets(a).members)
                              if (normal_nucleus(a, e, normals) !=
                                  dideal_closure_by_saturation(a, e)) {
                                why = "mismatch at " + a.poset().set_label(e);
                                return false;
                              }
                          }
                        return true;
                      }});

  criteria.push_back({3, "sandwich E <= j(E) <= k(E), normal ideals are D-ideals (size <= 7)",
                      60, [](std::string& why) {
                        auto family = exhaustive_family(7);
                        auto r = sweep("k-sandwich", family);
                        return all_pass(r, why);
                      }});

  criteria.push_back({4, "the four MacNeille-frame conditions agree (size <= 6, fixtures)", 120,
                      [](std::string& why) {
                        auto r = sweep("ma-frame", exhaustive_family(6));
                        if (!all_pass(r, why)) return false;
                        auto diamond = ma_frame_conditions(m3());
                        if (!diamond.agree() || diamond.value()) {
                          why = "diamond should be consistently false";
                          return false;
                        }
                        for (auto a : {fence(), c3()}) {
                          auto cv = ma_frame_conditions(a);
                          if (!cv.agree() || !cv.value()) {
                            why = "fixture should be consistently true";
                            return false;
                          }
                        }
                        return true;
                      }});

  criteria.push_back({5, "subfit distributive lattices have frame completions (size <= 7)", 60,
                      [](std::string& why) {
                        auto r = sweep("subfit-ma", exhaustive_family(7));
                        return all_pass(r, why);
                      }});

  criteria.push_back({6, "sublocales with the base as S-base form the interval (size <= 4)", 120,
                      [](std::string& why) {
                        auto r = sweep("interval", exhaustive_family(4));
                        for (const auto& v : r.verdicts)
                          if (v.status == "skip") {
                            why = "unexpected skip: " + v.instance;
                            return false;
                          }
                        return all_pass(r, why);
                      }});

  criteria.push_back({7, "the five base-is-a-frame conditions agree (size <= 6)", 120,
                      [](std::string& why) {
                        auto r = sweep("a-extremal", exhaustive_family(6));
                        return all_pass(r, why);
                      }});

  criteria.push_back(
      {8, "envelope lemma, embedding characterization, frink ideal frame (size <= 6)", 120,
       [](std::string& why) {
         for (auto name : {"envelope-lemma", "envelope-char", "frink-ideal-iso"}) {
           auto r = sweep(name, exhaustive_family(6));
           if (!all_pass(r, why)) {
             why = std::string(name) + ": " + why;
             return false;
           }
         }
         return true;
       }});

  criteria.push_back(
      {9, "finite collapse: distributive bases are lattices with trivial completions (<= 7)", 60,
       [](std::string& why) {
         for (int n = 1; n <= 7; ++n)
           for (const auto& a : exhaustive_instances(n)) {
             if (!is_distributive_semilattice(a)) continue;
             for (int x = 0; x < a.size(); ++x)
               for (int y = 0; y < a.size(); ++y)
                 if (!a.join(x, y)) {
                   why = "distributive instance without a join";
                   return false;
                 }
             auto completion = dideal_completion(a);
             auto env = distributive_envelope(a);
             auto ideals = ideal_frame(env.lattice);
             if (!lattices_isomorphic(completion.frame.lattice(), env.lattice) ||
                 !lattices_isomorphic(env.lattice, ideals.lattice)) {
               why = "completion endpoints differ on a distributive base";
               return false;
             }
           }
         return true;
       }});

  criteria.push_back(
      {10, "zero-dimensional suite: center completion is the Booleanization", 30,
       [](std::string& why) {
         std::vector<FiniteFrame> fixtures;
         for (int atoms = 0; atoms <= 3; ++atoms) fixtures.push_back(boolean_frame(atoms));
         fixtures.push_back(frame_product(boolean_frame(2), boolean_frame(2)));
         for (const auto& f : fixtures) {
           if (auto v = verify_zero_dim_facts(f); !v) {
             why = v.detail;
             return false;
           }
           auto cv = ed_conditions(f);
           if (!cv.agree()) {
             why = "disconnectedness conditions disagree: " + cv.summary();
             return false;
           }
         }
         auto v = frame_of_downsets(Poset::parse("elements: x y z\ncovers: y<x z<x\n"));
         auto ed = is_extremally_disconnected(v);
         if (ed.ok || ed.detail != "{y}") {
           why = "expected witness {y} on the five-element frame";
           return false;
         }
         return true;
       }});

  criteria.push_back(
      {11, "oracle agreement on 500 seeded pairs; byte-identical sweep reruns", 120,
       [](std::string& why) {
         SplitMix64 rng(0xACCE5500);
         for (int trial = 0; trial < 500; ++trial) {
           int size = 3 + static_cast<int>(rng.below(6));  // sizes 3..8
           InstanceSpec spec{InstanceKind::semilattice, size, rng.next(),
                             GenMethod::closure_system};
           auto a = random_instance(spec);
           auto fam = downsets(a);
           Mask e = fam.members[rng.below(fam.members.size())];
           if (oracle_delta(a, e) != dideal_closure(a, e)) {
             why = "oracle disagrees on " + spec.id() + " at " + a.poset().set_label(e);
             return false;
           }
         }
         auto family = exhaustive_family(4);
         for (const auto& name : theorem_names()) {
           auto first = sweep(name, family, 1);
           auto second = sweep(name, family, 4);
           if (first.json_lines() != second.json_lines()) {
             why = "sweep output of '" + name + "' depends on the run";
             return false;
           }
         }
         return true;
       }});

  criteria.push_back(
      {12, "normal-closure nucleus search terminates reproducibly (size <= 7)", 600,
       [](std::string& why) {
         auto first = search_k_not_nucleus(7);
         auto second = search_k_not_nucleus(7);
         if (first.found != second.found || first.instance_text != second.instance_text ||
             first.witness != second.witness || first.certificate != second.certificate) {
           why = "search is not reproducible";
           return false;
         }
         if (first.found) {
           // Replay the witness through the public operations.
           auto a = MeetSemilattice::from_poset(Poset::parse(first.instance_text));
           auto fam = downsets(a);
           if (verify_nucleus(a.poset(), normal_map(a), fam).ok) {
             why = "witness instance does not break the nucleus law";
             return false;
           }
           std::printf("       search witness: size %d, %s\n", first.size,
                       first.witness.c_str());
         } else {
           std::printf("       search certificate: %s\n", first.certificate.c_str());
         }
         return true;
       }});

  for (const auto& c : criteria) run_criterion(c);
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
