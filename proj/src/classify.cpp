#include "slat/classify.hpp"

#include <algorithm>
#include <cassert>

#include "json.hpp"
#include "slat/errors.hpp"
#include "slat/iso.hpp"

namespace slat {

Verdict is_subfit(const FiniteLattice& l) {
  if (!l.distributive())
    raise(Err::not_bounded_distributive, "subfitness assumes a bounded distributive lattice");
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      if (l.le(a, b)) continue;
      bool found = false;
      for (int c = 0; c < l.size() && !found; ++c)
        found = l.join(a, c) == l.top() && l.join(b, c) != l.top();
      if (!found) return Verdict::fail("(" + l.name(a) + "," + l.name(b) + ")");
    }
  return Verdict::pass();
}

bool rather_below(const FiniteLattice& l, int c, int a) {
  for (int d = 0; d < l.size(); ++d)
    if (l.meet(c, d) == l.bottom() && l.join(d, a) == l.top()) return true;
  return false;
}

Verdict is_regular_lattice(const FiniteLattice& l) {
  if (!l.distributive())
    raise(Err::not_bounded_distributive, "regularity assumes a bounded distributive lattice");
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      if (l.le(a, b)) continue;
      bool found = false;
      for (int c = 0; c < l.size() && !found; ++c)
        found = rather_below(l, c, a) && !l.le(c, b);
      if (!found) return Verdict::fail("(" + l.name(a) + "," + l.name(b) + ")");
    }
  return Verdict::pass();
}

std::optional<LeftAdjoint> left_adjoint_embedding(const MeetSemilattice& a,
                                                  const FiniteFrame& l,
                                                  const std::vector<int>& emb) {
  assert(static_cast<int>(emb.size()) == a.size());
  for (int x = 0; x < l.size(); ++x) {
    Mask below = 0;
    for (int c = 0; c < a.size(); ++c)
      if (l.le(emb[c], x)) below |= bit(emb[c]);
    if (l.join_of(below) != x)
      raise(Err::not_a_base, "image does not join-generate at " + l.name(x));
  }
  LeftAdjoint adj{std::vector<int>(l.size(), -1), true};
  for (int x = 0; x < l.size(); ++x) {
    // Least base element whose image dominates x.
    Mask uppers = 0;
    for (int c = 0; c < a.size(); ++c)
      if (l.le(x, emb[c])) uppers |= bit(c);
    int least = -1;
    for (int c : bits(uppers))
      if (subset(uppers, a.poset().up(c))) least = c;
    if (least < 0) return std::nullopt;
    adj.map[x] = least;
  }
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (adj.map[l.meet(x, y)] != a.meet(adj.map[x], adj.map[y])) adj.left_exact = false;
  return adj;
}

bool ConditionVector::agree() const {
  for (const auto& [name, value] : conditions)
    if (value != conditions.front().second) return false;
  return true;
}

std::string ConditionVector::summary() const {
  std::string out;
  for (const auto& [name, value] : conditions)
    out += (out.empty() ? "" : " ") + name + "=" + (value ? "true" : "false");
  if (!witness.empty()) out += " [" + witness + "]";
  return out;
}

ConditionVector a_extremal_conditions(const MeetSemilattice& a) {
  if (!a.has_top()) raise(Err::not_bounded, "the base must be bounded");
  ConditionVector cv;
  auto note = [&](const std::string& name, bool value, const std::string& why) {
    cv.conditions.emplace_back(name, value);
    if (!value && cv.witness.empty()) cv.witness = name + ": " + why;
  };

  std::vector<Mask> principals;
  for (int c = 0; c < a.size(); ++c) principals.push_back(a.poset().down(c));
  std::sort(principals.begin(), principals.end(), [](Mask x, Mask y) {
    return count(x) != count(y) ? count(x) < count(y) : x < y;
  });

  // (1) the base itself is a finite frame.
  auto lat = FiniteLattice::from_semilattice(a);
  note("base-frame", lat.distributive(), "base lattice not distributive");

  // (2) the principal downsets exhaust the D-ideals.
  note("dideals-principal", dideal_family(a) == principals, "a non-principal D-ideal exists");

  // (3) the normal closure is a nucleus with exactly the principal fixpoints.
  auto family = downsets(a);
  bool k_nucleus = verify_nucleus(a.poset(), normal_map(a), family).ok;
  note("normal-nucleus", k_nucleus && normal_family(a) == principals,
       "normal closure is not a nucleus onto the base");

  // (4) normal closure and induced nucleus coincide, fixing only the base.
  auto normals = normal_family(a);
  bool k_equals_j = true;
  std::vector<Mask> fixed;
  for (Mask e : family.members) {
    Mask j = normal_nucleus(a, e, normals);
    if (j != normal_closure(a, e)) k_equals_j = false;
    if (j == e) fixed.push_back(e);
  }
  note("closure-equals-nucleus", k_equals_j && fixed == principals,
       "normal closure differs from the induced nucleus");

  // (5) the embedding into the downset frame has a left exact left adjoint.
  bool adjoint = true, exact = true;
  std::vector<int> least_above(family.size(), -1);
  for (int i = 0; i < family.size(); ++i) {
    Mask uppers = 0;
    for (int c = 0; c < a.size(); ++c)
      if (subset(family.members[i], a.poset().down(c))) uppers |= bit(c);
    int least = -1;
    for (int c : bits(uppers))
      if (subset(uppers, a.poset().up(c))) least = c;
    if (least < 0) adjoint = false;
    least_above[i] = least;
  }
  if (adjoint)
    for (int i = 0; i < family.size() && exact; ++i)
      for (int j = 0; j < family.size(); ++j) {
        int meet_idx = family.index_of(family.members[i] & family.members[j]);
        if (least_above[meet_idx] != a.meet(least_above[i], least_above[j])) {
          exact = false;
          break;
        }
      }
  note("left-exact-adjoint", adjoint && exact,
       adjoint ? "left adjoint exists but is not left exact" : "no left adjoint");
  return cv;
}

Verdict is_a_extremal(const MeetSemilattice& a) {
  auto cv = a_extremal_conditions(a);
  if (!cv.agree()) return Verdict::fail("conditions disagree: " + cv.summary());
  return Verdict::pass(cv.value() ? "true" : "false");
}

ConditionVector ma_frame_conditions(const MeetSemilattice& a) {
  ConditionVector cv;
  auto note = [&](const std::string& name, bool value, const std::string& why) {
    cv.conditions.emplace_back(name, value);
    if (!value && cv.witness.empty()) cv.witness = name + ": " + why;
  };

  auto normals = normal_family(a);
  auto dideals = dideal_family(a);

  // (1) the normal-ideal lattice is distributive.
  auto ma = family_lattice(a.poset(), normals);
  note("macneille-frame", ma.distributive(), "normal-ideal lattice not distributive");

  // (2) every D-ideal is normal.
  std::string family_gap;
  if (normals != dideals)
    for (Mask e : dideals)
      if (std::find(normals.begin(), normals.end(), e) == normals.end()) {
        family_gap = a.poset().set_label(e) + " is a D-ideal but not normal";
        break;
      }
  note("families-coincide", normals == dideals, family_gap);

  // (3) the two closures agree pointwise on the downset frame.
  std::string pointwise_gap;
  bool pointwise = true;
  for (Mask e : downsets(a).members)
    if (normal_closure(a, e) != dideal_closure_by_saturation(a, e)) {
      pointwise = false;
      pointwise_gap = "closures differ at " + a.poset().set_label(e);
      break;
    }
  note("closures-pointwise", pointwise, pointwise_gap);

  // (4) every relative annihilator is a normal ideal.
  bool annihilators_normal = true;
  std::string ann_gap;
  for (int p = 0; p < a.size() && annihilators_normal; ++p)
    for (int q = 0; q < a.size(); ++q) {
      Mask ann = a.annihilator(p, q);
      if (normal_closure(a, ann) != ann) {
        annihilators_normal = false;
        ann_gap = "<" + a.name(p) + "," + a.name(q) + "> = " + a.poset().set_label(ann) +
                  " is not normal";
        break;
      }
    }
  note("annihilators-normal", annihilators_normal, ann_gap);
  return cv;
}

Verdict verify_ma_frame_theorem(const MeetSemilattice& a) {
  auto cv = ma_frame_conditions(a);
  if (!cv.agree()) return Verdict::fail("conditions disagree: " + cv.summary());
  return Verdict::pass(cv.value() ? "true" : "false");
}

Verdict verify_subfit_implies_ma_frame(const FiniteLattice& l) {
  if (!is_subfit(l)) return Verdict::pass("not applicable (not subfit)");
  auto cv = ma_frame_conditions(l.base());
  if (!cv.agree()) return Verdict::fail("conditions disagree: " + cv.summary());
  if (!cv.value()) return Verdict::fail("subfit but MacNeille completion is not a frame");
  return Verdict::pass();
}

Mask complemented_elements(const FiniteFrame& f) { return complemented(f); }

ConditionVector ed_formulations(const FiniteFrame& f) {
  ConditionVector cv;
  auto note = [&](const std::string& name, bool value, const std::string& why) {
    cv.conditions.emplace_back(name, value);
    if (!value && cv.witness.empty()) cv.witness = name + ": " + why;
  };
  auto law = is_extremally_disconnected_law(f);
  note("pseudocomplement-law", law.ok, law.detail);

  Mask regulars = 0;
  for (int x = 0; x < f.size(); ++x)
    if (f.pseudo(f.pseudo(x)) == x) regulars |= bit(x);
  Mask cl = complemented(f);
  note("booleanization-is-center", regulars == cl,
       f.poset().set_label(regulars ^ cl) + " separates them");

  bool demorgan = true;
  std::string witness;
  for (int x = 0; x < f.size() && demorgan; ++x)
    for (int y = 0; y < f.size(); ++y)
      if (f.pseudo(f.meet(x, y)) != f.join(f.pseudo(x), f.pseudo(y))) {
        demorgan = false;
        witness = "(" + f.name(x) + "," + f.name(y) + ")";
        break;
      }
  note("demorgan-law", demorgan, witness);
  return cv;
}

Verdict is_extremally_disconnected(const FiniteFrame& f) {
  auto law = is_extremally_disconnected_law(f);
  return law.ok ? Verdict::pass("true") : Verdict::fail(law.detail);
}

ConditionVector ed_conditions(const FiniteFrame& f) {
  if (!is_zero_dimensional(f))
    raise(Err::not_zero_dimensional, "conditions assume a zero-dimensional frame");
  ConditionVector cv;
  auto note = [&](const std::string& name, bool value, const std::string& why) {
    cv.conditions.emplace_back(name, value);
    if (!value && cv.witness.empty()) cv.witness = name + ": " + why;
  };
  Mask cl = complemented(f);
  auto cl_semilattice = MeetSemilattice::from_poset(f.poset().restrict(cl));

  // (1) the pseudocomplement law.
  note("ed-law", is_extremally_disconnected_law(f).ok, "law fails");

  // (2) the complemented elements form a frame.
  note("center-frame", FiniteLattice::from_semilattice(cl_semilattice).distributive(),
       "center not distributive");

  // (3) CL = its D-ideal completion = the Booleanization, as sublocales.
  auto completion = dideal_completion(cl_semilattice);
  Mask regulars = 0;
  for (int x = 0; x < f.size(); ++x)
    if (f.pseudo(f.pseudo(x)) == x) regulars |= bit(x);
  note("center-complete-and-dense",
       completion.frame.size() == count(cl) && regulars == cl,
       "center differs from its completion or from the Booleanization");

  // (4) the center is a complete (finite) Boolean algebra.
  bool boolean = FiniteLattice::from_semilattice(cl_semilattice).distributive();
  {
    auto cl_lat = FiniteLattice::from_semilattice(cl_semilattice);
    for (int x = 0; x < cl_lat.size() && boolean; ++x) {
      bool has_complement = false;
      for (int y = 0; y < cl_lat.size() && !has_complement; ++y)
        has_complement = cl_lat.meet(x, y) == cl_lat.bottom() && cl_lat.join(x, y) == cl_lat.top();
      boolean = has_complement;
    }
  }
  note("center-boolean", boolean, "center not a Boolean algebra");

  // (5) the embedding of the center has a left adjoint.
  bool adjoint = true;
  for (int x = 0; x < f.size() && adjoint; ++x) {
    Mask uppers = cl & f.poset().up(x);
    bool least = false;
    for (int c : bits(uppers))
      if (subset(uppers, f.poset().up(c))) least = true;
    adjoint = least;
  }
  note("center-adjoint", adjoint, "no least complemented element above some x");
  return cv;
}

Verdict verify_zero_dim_facts(const FiniteFrame& f) {
  if (!is_zero_dimensional(f))
    raise(Err::not_zero_dimensional, "facts assume a zero-dimensional frame");
  Mask cl = complemented(f);
  auto cl_semilattice = MeetSemilattice::from_poset(f.poset().restrict(cl));
  auto completion = dideal_completion(cl_semilattice);
  auto boolean = booleanization(f);
  if (!lattices_isomorphic(completion.frame.lattice(), boolean.frame.lattice()))
    return Verdict::fail("completion of the center is not the Booleanization");
  auto cv = ed_conditions(f);
  if (!cv.agree()) return Verdict::fail("conditions disagree: " + cv.summary());
  return Verdict::pass();
}

namespace {

std::string verdict_text(const Verdict& v) {
  if (v.ok) return v.detail.empty() ? "true" : v.detail;
  return "false (witness " + v.detail + ")";
}

}  // namespace

Report classification_report(const MeetSemilattice& a, const std::string& instance_id) {
  Report r;
  r.instance = instance_id;

  bool is_lattice = true;
  for (int x = 0; x < a.size() && is_lattice; ++x)
    for (int y = 0; y < a.size(); ++y)
      if (!a.join(x, y)) {
        is_lattice = false;
        break;
      }
  auto distributive = is_distributive_semilattice(a);
  auto weakly = is_weakly_distributive(a);

  r.predicates.emplace_back("lattice", is_lattice ? "true" : "false");
  r.predicates.emplace_back("bottom", a.has_bottom() ? "true" : "false");
  r.predicates.emplace_back("top", a.has_top() ? "true" : "false");
  r.predicates.emplace_back("distributive", verdict_text(distributive));
  r.predicates.emplace_back("weakly-distributive", verdict_text(weakly));

  bool frame = is_lattice && a.has_top() && distributive.ok;
  if (frame) {
    auto lat = FiniteLattice::from_semilattice(a);
    r.predicates.emplace_back("subfit", verdict_text(is_subfit(lat)));
    r.predicates.emplace_back("regular", verdict_text(is_regular_lattice(lat)));
    auto fr = FiniteFrame::from_lattice(lat);
    r.predicates.emplace_back("zero-dimensional", verdict_text(is_zero_dimensional(fr)));
    r.predicates.emplace_back("extremally-disconnected",
                              verdict_text(is_extremally_disconnected(fr)));
  } else {
    r.predicates.emplace_back("subfit", "n/a (not a bounded distributive lattice)");
    r.predicates.emplace_back("regular", "n/a (not a bounded distributive lattice)");
  }

  auto ma = ma_frame_conditions(a);
  r.theorems.emplace_back("ma-frame", (ma.agree() ? std::string("agree; ") : "DISAGREE; ") +
                                          ma.summary());
  if (a.has_top()) {
    auto ae = a_extremal_conditions(a);
    r.theorems.emplace_back("a-extremal", (ae.agree() ? std::string("agree; ") : "DISAGREE; ") +
                                              ae.summary());
  } else {
    r.theorems.emplace_back("a-extremal", "n/a (base not bounded)");
  }
  if (distributive.ok) {
    r.theorems.emplace_back("envelope-lemma", verdict_text(verify_envelope_lemma(a)));
    try {
      auto frink = frink_ideals(a);
      auto env = distributive_envelope(a);
      auto ideal = ideal_frame(env.lattice);
      bool iso = lattices_isomorphic(frink.lattice, ideal.lattice);
      r.theorems.emplace_back("frink-ideal-iso", iso ? "true" : "false");
    } catch (const Error& e) {
      if (e.kind() != Err::too_large) throw;
      r.theorems.emplace_back("frink-ideal-iso", "n/a (exceeds enumeration cap)");
    }
  } else {
    r.theorems.emplace_back("envelope-lemma", "n/a (base not distributive)");
    r.theorems.emplace_back("frink-ideal-iso", "n/a (base not distributive)");
  }
  if (frame) {
    auto fr = FiniteFrame::from_lattice(FiniteLattice::from_semilattice(a));
    if (is_zero_dimensional(fr))
      r.theorems.emplace_back("zero-dim-booleanization", verdict_text(verify_zero_dim_facts(fr)));
    else
      r.theorems.emplace_back("zero-dim-booleanization", "n/a (not zero-dimensional)");
  } else {
    r.theorems.emplace_back("zero-dim-booleanization", "n/a (not a frame)");
  }

  auto guarded_size = [&](const std::string& name, std::function<long long()> measure) {
    try {
      r.sizes.emplace_back(name, measure());
    } catch (const Error& e) {
      if (e.kind() != Err::too_large) throw;
      r.sizes.emplace_back(name, -1);  // exceeds the enumeration cap
    }
  };
  r.sizes.emplace_back("elements", a.size());
  guarded_size("downsets", [&] { return downsets(a).size(); });
  guarded_size("dideals", [&] { return static_cast<long long>(dideal_family(a).size()); });
  guarded_size("normal-ideals", [&] { return static_cast<long long>(normal_family(a).size()); });
  guarded_size("envelope",
               [&] { return static_cast<long long>(distributive_envelope(a).elements.size()); });
  guarded_size("prime-filters",
               [&] { return static_cast<long long>(prime_filters(a).points.size()); });

  r.excluded.push_back("lindelof-coreflection: excluded, infinite construction");
  r.excluded.push_back("compactification: excluded, infinite construction");
  r.excluded.push_back("cozero-part: excluded, collapses to the center on finite frames");
  r.excluded.push_back("sigma-frame-degrees: excluded, countable joins are finite joins here");
  return r;
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema"] = schema;
  doc["instance"] = instance;
  auto& preds = doc["predicates"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : predicates) preds[k] = v;
  auto& thms = doc["theorems"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : theorems) thms[k] = v;
  auto& sz = doc["sizes"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : sizes) sz[k] = v;
  doc["excluded"] = excluded;
  return doc.dump();
}

std::string Report::to_text() const {
  std::string out = "instance: " + instance + " (schema " + std::to_string(schema) + ")\n";
  out += "predicates:\n";
  for (const auto& [k, v] : predicates) out += "  " + k + ": " + v + "\n";
  out += "theorems:\n";
  for (const auto& [k, v] : theorems) out += "  " + k + ": " + v + "\n";
  out += "sizes:\n";
  for (const auto& [k, v] : sizes) out += "  " + k + ": " + std::to_string(v) + "\n";
  out += "excluded:\n";
  for (const auto& e : excluded) out += "  " + e + "\n";
  return out;
}

}  // namespace slat
