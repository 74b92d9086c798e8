#include "slat/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <thread>

#include "json.hpp"
#include "slat/classify.hpp"
#include "slat/downsets.hpp"
#include "slat/envelope.hpp"
#include "slat/errors.hpp"
#include "slat/frame.hpp"
#include "slat/generate.hpp"
#include "slat/iso.hpp"

namespace slat {

namespace {

InstanceVerdict pass(const std::string& id) { return {id, "pass", ""}; }
InstanceVerdict fail(const std::string& id, std::string w) { return {id, "fail", std::move(w)}; }
InstanceVerdict skip(const std::string& id, std::string why) {
  return {id, "skip", std::move(why)};
}

bool is_lattice(const MeetSemilattice& a) { return a.has_top(); }

bool is_frame_instance(const MeetSemilattice& a) {
  return is_lattice(a) && is_distributive_semilattice(a).ok;
}

// --- verifiers, one per registered theorem ------------------------------

InstanceVerdict verify_delta_annihilator(const MeetSemilattice& a, const std::string& id) {
  auto family = downsets(a);
  for (Mask e : family.members)
    if (dideal_closure_by_saturation(a, e) != dideal_closure_by_annihilators(a, e))
      return fail(id, "closure routes disagree at " + a.poset().set_label(e));
  if (auto v = verify_nucleus(a.poset(), dideal_map(a), family); !v) return fail(id, v.detail);
  return pass(id);
}

InstanceVerdict verify_j_equals_delta(const MeetSemilattice& a, const std::string& id) {
  auto normals = normal_family(a);
  for (Mask e : downsets(a).members)
    if (normal_nucleus(a, e, normals) != dideal_closure_by_saturation(a, e))
      return fail(id, "nucleus differs from closure at " + a.poset().set_label(e));
  return pass(id);
}

InstanceVerdict verify_k_sandwich(const MeetSemilattice& a, const std::string& id) {
  auto normals = normal_family(a);
  for (Mask e : downsets(a).members) {
    Mask j = normal_nucleus(a, e, normals);
    Mask k = normal_closure(a, e);
    if (!subset(e, j) || !subset(j, k))
      return fail(id, "sandwich fails at " + a.poset().set_label(e));
  }
  auto dideals = dideal_family(a);
  for (Mask m : normals)
    if (std::find(dideals.begin(), dideals.end(), m) == dideals.end())
      return fail(id, "normal ideal " + a.poset().set_label(m) + " is not a D-ideal");
  return pass(id);
}

InstanceVerdict verify_ma_frame(const MeetSemilattice& a, const std::string& id) {
  auto cv = ma_frame_conditions(a);
  if (!cv.agree()) return fail(id, cv.summary());
  return pass(id);
}

InstanceVerdict verify_subfit_ma(const MeetSemilattice& a, const std::string& id) {
  if (!is_lattice(a)) return skip(id, "not a lattice");
  auto lat = FiniteLattice::from_semilattice(a);
  if (!lat.distributive()) return skip(id, "not distributive");
  auto v = verify_subfit_implies_ma_frame(lat);
  if (!v) return fail(id, v.detail);
  return v.detail.empty() ? pass(id) : skip(id, v.detail);
}

InstanceVerdict verify_interval(const MeetSemilattice& a, const std::string& id) {
  auto family = downsets(a);
  if (family.size() > 12) return skip(id, "downset frame too large for a sublocale scan");
  auto frame = FiniteFrame::from_lattice(family_lattice(a.poset(), family.members));
  std::vector<int> principal(a.size());
  Mask principal_mask = 0;
  for (int c = 0; c < a.size(); ++c) {
    principal[c] = family.index_of(a.poset().down(c));
    principal_mask |= bit(principal[c]);
  }
  auto dideals = dideal_family(a);
  Mask dideal_mask = 0;
  for (Mask m : dideals) dideal_mask |= bit(family.index_of(m));

  for (Mask s : sublocales(frame)) {
    bool contains_completion = subset(dideal_mask, s);
    bool has_base = subset(principal_mask, s);
    if (has_base) {
      // Every member must be the least member above its base elements.
      for (int i : bits(s)) {
        Mask below = 0;
        for (int c = 0; c < a.size(); ++c)
          if (subset(a.poset().down(c), family.members[i])) below |= a.poset().down(c);
        Mask least = a.carrier();
        for (int m : bits(s))
          if (subset(below, family.members[m])) least &= family.members[m];
        if (least != family.members[i]) {
          has_base = false;
          break;
        }
      }
    }
    if (has_base != contains_completion)
      return fail(id, "sublocale of " + std::to_string(count(s)) +
                          " members breaks the interval law");
  }
  return pass(id);
}

InstanceVerdict verify_a_extremal(const MeetSemilattice& a, const std::string& id) {
  if (!a.has_top()) return skip(id, "base not bounded");
  auto cv = a_extremal_conditions(a);
  if (!cv.agree()) return fail(id, cv.summary());
  return pass(id);
}

InstanceVerdict verify_envelope_lemma_sweep(const MeetSemilattice& a, const std::string& id) {
  if (!is_distributive_semilattice(a)) return skip(id, "base not distributive");
  auto v = verify_envelope_lemma(a);
  return v ? pass(id) : fail(id, v.detail);
}

InstanceVerdict verify_envelope_char(const MeetSemilattice& a, const std::string& id) {
  if (!is_distributive_semilattice(a)) return skip(id, "base not distributive");
  // Identity embedding into the base itself (a finite distributive
  // semilattice is a lattice), and the principal embedding into the D-ideal
  // completion; both must generate a copy of the envelope.
  std::vector<int> identity(a.size());
  for (int i = 0; i < a.size(); ++i) identity[i] = i;
  auto self = FiniteLattice::from_semilattice(a);
  if (auto v = envelope_via_embedding(identity, a, self); !v)
    return fail(id, "identity embedding: " + v.detail);

  auto completion = dideal_completion(a);
  if (auto v = envelope_via_embedding(completion.embedding, a, completion.frame.lattice()); !v)
    return fail(id, "completion embedding: " + v.detail);
  return pass(id);
}

InstanceVerdict verify_frink_ideal_iso(const MeetSemilattice& a, const std::string& id) {
  if (!is_distributive_semilattice(a)) return skip(id, "base not distributive");
  auto frink = frink_ideals(a);
  auto env = distributive_envelope(a);
  auto ideals = ideal_frame(env.lattice);
  if (!lattices_isomorphic(frink.lattice, ideals.lattice))
    return fail(id, "frink ideals differ from the envelope ideal frame");
  return pass(id);
}

InstanceVerdict verify_zero_dim_booleanization(const MeetSemilattice& a, const std::string& id) {
  if (!is_frame_instance(a)) return skip(id, "not a frame");
  auto frame = FiniteFrame::from_lattice(FiniteLattice::from_semilattice(a));
  if (!is_zero_dimensional(frame)) return skip(id, "not zero-dimensional");
  auto v = verify_zero_dim_facts(frame);
  return v ? pass(id) : fail(id, v.detail);
}

InstanceVerdict verify_ed_equivalences(const MeetSemilattice& a, const std::string& id) {
  if (!is_frame_instance(a)) return skip(id, "not a frame");
  auto frame = FiniteFrame::from_lattice(FiniteLattice::from_semilattice(a));
  auto forms = ed_formulations(frame);
  if (!forms.agree()) return fail(id, forms.summary());
  if (is_zero_dimensional(frame)) {
    auto cv = ed_conditions(frame);
    if (!cv.agree()) return fail(id, cv.summary());
  }
  return pass(id);
}

const std::map<std::string, Verifier>& registry() {
  static const std::map<std::string, Verifier> table = {
      {"interval", verify_interval},
      {"ma-frame", verify_ma_frame},
      {"delta-annihilator", verify_delta_annihilator},
      {"j-equals-delta", verify_j_equals_delta},
      {"k-sandwich", verify_k_sandwich},
      {"subfit-ma", verify_subfit_ma},
      {"a-extremal", verify_a_extremal},
      {"envelope-lemma", verify_envelope_lemma_sweep},
      {"envelope-char", verify_envelope_char},
      {"frink-ideal-iso", verify_frink_ideal_iso},
      {"zero-dim-booleanization", verify_zero_dim_booleanization},
      {"ed-equivalences", verify_ed_equivalences},
  };
  return table;
}

}  // namespace

std::vector<std::string> theorem_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

bool is_registered_theorem(const std::string& name) { return registry().count(name) > 0; }

Verifier theorem_verifier(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) raise(Err::unknown_theorem, "unknown theorem '" + name + "'");
  return it->second;
}

SweepResult sweep(const std::string& theorem, const Family& family, int workers) {
  auto verifier = theorem_verifier(theorem);
  auto started = std::chrono::steady_clock::now();

  SweepResult result;
  result.theorem = theorem;
  result.instances = static_cast<int>(family.size());
  result.verdicts.resize(family.size());

  if (workers <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    workers = static_cast<int>(hw ? hw : 1);
  }
  workers = std::min(workers, static_cast<int>(std::max<size_t>(family.size(), 1)));
  if (workers <= 1 || family.size() < 8) {
    for (size_t i = 0; i < family.size(); ++i)
      result.verdicts[i] = verifier(family[i].second, family[i].first);
  } else {
    // Strided partition into a pre-sized vector: the merge order, and hence
    // the output bytes, do not depend on scheduling.
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (size_t i = w; i < family.size(); i += workers)
          result.verdicts[i] = verifier(family[i].second, family[i].first);
      });
    for (auto& t : pool) t.join();
  }
  for (const auto& v : result.verdicts)
    if (v.status == "fail") ++result.failures;
  result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  return result;
}

std::string SweepResult::json_lines() const {
  std::string out;
  for (const auto& v : verdicts) {
    nlohmann::ordered_json line;
    line["instance"] = v.instance;
    line["status"] = v.status;
    if (!v.detail.empty()) line["detail"] = v.detail;
    out += line.dump() + "\n";
  }
  nlohmann::ordered_json summary;
  summary["summary"]["theorem"] = theorem;
  summary["summary"]["instances"] = instances;
  summary["summary"]["failures"] = failures;
  out += summary.dump() + "\n";
  return out;
}

Mask oracle_delta(const MeetSemilattice& a, Mask e) {
  if (a.size() > 10) raise(Err::too_large, "oracle capped at 10 elements");
  const auto& p = a.poset();
  Mask out = 0;
  // Scan every subset of e; a subset contributes its join when admissible.
  Mask g = e;
  for (;;) {
    Mask uppers = p.carrier();
    for (int i : bits(g)) uppers &= p.up(i);
    int join = -1;
    for (int u : bits(uppers))
      if (subset(uppers, p.up(u))) join = u;
    if (join >= 0) {
      bool admissible = true;
      for (int x = 0; x < a.size() && admissible; ++x) {
        Mask meets = 0;
        for (int y : bits(g)) meets |= bit(a.meet(x, y));
        Mask mu = p.carrier();
        for (int i : bits(meets)) mu &= p.up(i);
        int mjoin = -1;
        for (int u : bits(mu))
          if (subset(mu, p.up(u))) mjoin = u;
        admissible = mjoin >= 0 && mjoin == a.meet(x, join);
      }
      if (admissible) out |= bit(join);
    }
    if (g == 0) break;
    g = (g - 1) & e;
  }
  return out;
}

KSearchResult search_k_not_nucleus(int max_n) {
  if (max_n > 7) raise(Err::too_large, "search capped at 7 elements");
  for (int n = 1; n <= max_n; ++n) {
    int index = 0;
    for (const auto& a : exhaustive_instances(n)) {
      auto family = downsets(a);
      std::vector<Mask> closed(family.members.size());
      for (size_t i = 0; i < family.members.size(); ++i)
        closed[i] = normal_closure(a, family.members[i]);
      for (size_t i = 0; i < family.members.size(); ++i)
        for (size_t j = 0; j < family.members.size(); ++j) {
          int m = family.index_of(family.members[i] & family.members[j]);
          if (closed[m] != (closed[i] & closed[j])) {
            KSearchResult r;
            r.found = true;
            r.size = n;
            r.index = index;
            r.instance_text = a.poset().to_text();
            r.witness = "(" + a.poset().set_label(family.members[i]) + "," +
                        a.poset().set_label(family.members[j]) + ")";
            return r;
          }
        }
      ++index;
    }
  }
  KSearchResult r;
  r.certificate =
      "no meet-semilattice with at most " + std::to_string(max_n) +
      " elements breaks the nucleus meet law of the normal closure";
  return r;
}

}  // namespace slat
