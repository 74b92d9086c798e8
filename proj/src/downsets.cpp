#include "slat/downsets.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "slat/errors.hpp"

namespace slat {

namespace {

void sort_by_inclusion(std::vector<Mask>& members) {
  std::sort(members.begin(), members.end(), [](Mask x, Mask y) {
    return count(x) != count(y) ? count(x) < count(y) : x < y;
  });
}

// Intersection closure of the generators, plus the full carrier.
std::vector<Mask> moore_closure(Mask carrier, const std::vector<Mask>& generators) {
  std::set<Mask> family{carrier};
  std::vector<Mask> work{carrier};
  while (!work.empty()) {
    Mask m = work.back();
    work.pop_back();
    for (Mask g : generators) {
      Mask x = m & g;
      if (family.insert(x).second) {
        if (family.size() > default_downset_cap)
          raise(Err::too_large, "closure family exceeds cap");
        work.push_back(x);
      }
    }
  }
  std::vector<Mask> out(family.begin(), family.end());
  sort_by_inclusion(out);
  return out;
}

}  // namespace

int DownsetFamily::index_of(Mask m) const {
  auto cmp = [](Mask x, Mask y) {
    return count(x) != count(y) ? count(x) < count(y) : x < y;
  };
  auto it = std::lower_bound(members.begin(), members.end(), m, cmp);
  if (it != members.end() && *it == m) return static_cast<int>(it - members.begin());
  return -1;
}

DownsetFamily poset_downsets(const Poset& p, std::size_t max_count) {
  std::vector<Mask> downs{0};
  for (int e : p.linear_extension()) {
    size_t sz = downs.size();
    for (size_t i = 0; i < sz; ++i)
      if (subset(p.down(e) & ~bit(e), downs[i])) {
        downs.push_back(downs[i] | bit(e));
        if (downs.size() > max_count) raise(Err::too_large, "downset count exceeds cap");
      }
  }
  sort_by_inclusion(downs);
  DownsetFamily fam{std::move(downs), {}};
  fam.closed_under.intersections = true;
  fam.closed_under.unions = true;
  fam.closed_under.heyting = true;
  return fam;
}

DownsetFamily downsets(const MeetSemilattice& a, std::size_t max_count) {
  return poset_downsets(a.poset(), max_count);
}

Mask heyting_impl(const MeetSemilattice& a, Mask e, Mask h) {
  Mask r = 0;
  for (int x = 0; x < a.size(); ++x) {
    bool all = true;
    for (int t : bits(e))
      if (!has(h, a.meet(x, t))) {
        all = false;
        break;
      }
    if (all) r |= bit(x);
  }
  return r;
}

Mask annihilator(const MeetSemilattice& a, int p, int q) { return a.annihilator(p, q); }

Mask dideal_closure_by_saturation(const MeetSemilattice& a, Mask e) {
  assert(a.poset().is_downset(e));
  Mask s = e;
  // A candidate enters iff the largest available subset below it is
  // admissible with that exact join; iterate to the fixpoint.
  for (bool grew = true; grew;) {
    grew = false;
    for (int x = 0; x < a.size(); ++x) {
      if (has(s, x)) continue;
      Mask g = s & a.poset().down(x);
      if (admissible_join(a, g) == x) {
        s |= bit(x);
        grew = true;
      }
    }
  }
  return s;
}

Mask dideal_closure_by_annihilators(const MeetSemilattice& a, Mask e) {
  Mask acc = a.carrier();
  for (int p = 0; p < a.size(); ++p)
    for (int q = 0; q < a.size(); ++q) {
      Mask ann = a.annihilator(p, q);
      if (subset(e, ann)) acc &= ann;
    }
  return acc;
}

Mask dideal_closure(const MeetSemilattice& a, Mask e) {
  Mask by_saturation = dideal_closure_by_saturation(a, e);
  Mask by_annihilators = dideal_closure_by_annihilators(a, e);
  if (by_saturation != by_annihilators)
    throw std::logic_error("dideal closure routes disagree on " + a.poset().set_label(e));
  return by_saturation;
}

Mask normal_closure(const MeetSemilattice& a, Mask e) {
  Mask acc = a.carrier();
  for (int c = 0; c < a.size(); ++c)
    if (subset(e, a.poset().down(c))) acc &= a.poset().down(c);
  return acc;
}

Mask normal_nucleus(const MeetSemilattice& a, Mask e, const std::vector<Mask>& normals) {
  Mask acc = a.carrier();
  for (Mask c : normals) acc &= heyting_impl(a, heyting_impl(a, e, c), c);
  return acc;
}

Mask normal_nucleus(const MeetSemilattice& a, Mask e) {
  return normal_nucleus(a, e, normal_family(a));
}

std::vector<Mask> normal_family(const MeetSemilattice& a) {
  std::vector<Mask> gens;
  for (int c = 0; c < a.size(); ++c) gens.push_back(a.poset().down(c));
  return moore_closure(a.carrier(), gens);
}

std::vector<Mask> dideal_family(const MeetSemilattice& a) {
  std::vector<Mask> gens;
  for (int p = 0; p < a.size(); ++p)
    for (int q = 0; q < a.size(); ++q) gens.push_back(a.annihilator(p, q));
  return moore_closure(a.carrier(), gens);
}

ClosureMap dideal_map(const MeetSemilattice& a) {
  return {"dideal", [&a](Mask e) { return dideal_closure(a, e); }};
}
ClosureMap normal_map(const MeetSemilattice& a) {
  return {"normal", [&a](Mask e) { return normal_closure(a, e); }};
}
ClosureMap nucleus_map(const MeetSemilattice& a) {
  auto normals = normal_family(a);
  return {"nucleus", [&a, normals](Mask e) { return normal_nucleus(a, e, normals); }};
}
ClosureMap identity_map() {
  return {"identity", [](Mask e) { return e; }};
}

Verdict verify_closure(const Poset& base, const ClosureMap& map, const DownsetFamily& family) {
  for (Mask e : family.members)
    if (!subset(e, map.eval(e)))
      return Verdict::fail(map.kind + " not inflationary at " + base.set_label(e));
  for (Mask e : family.members)
    for (Mask h : family.members)
      if (subset(e, h) && !subset(map.eval(e), map.eval(h)))
        return Verdict::fail(map.kind + " not monotone at (" + base.set_label(e) + "," +
                             base.set_label(h) + ")");
  for (Mask e : family.members) {
    Mask once = map.eval(e);
    if (map.eval(once) != once)
      return Verdict::fail(map.kind + " not idempotent at " + base.set_label(e));
  }
  return Verdict::pass();
}

Verdict verify_nucleus(const Poset& base, const ClosureMap& map, const DownsetFamily& family) {
  if (auto v = verify_closure(base, map, family); !v) return v;
  for (Mask e : family.members)
    for (Mask h : family.members)
      if (map.eval(e & h) != (map.eval(e) & map.eval(h)))
        return Verdict::fail(map.kind + " meet law fails at (" + base.set_label(e) + "," +
                             base.set_label(h) + ")");
  return Verdict::pass();
}

FiniteLattice family_lattice(const Poset& base, const std::vector<Mask>& members) {
  if (members.size() > max_elements) raise(Err::too_large, "family exceeds 64 elements");
  const int m = static_cast<int>(members.size());
  std::vector<std::string> names;
  for (Mask mm : members) names.push_back(base.set_label(mm));
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (subset(members[i], members[j])) less.emplace_back(i, j);
  return FiniteLattice::from_poset(Poset(std::move(names), less));
}

namespace {

std::vector<int> principal_embedding(const MeetSemilattice& a, const DownsetFamily& fam) {
  std::vector<int> embed(a.size(), -1);
  for (int c = 0; c < a.size(); ++c) embed[c] = fam.index_of(a.poset().down(c));
  return embed;
}

}  // namespace

FamilyFrame dideal_completion(const MeetSemilattice& a) {
  DownsetFamily fam{dideal_family(a), {}};
  fam.closed_under.intersections = true;
  auto lat = family_lattice(a.poset(), fam.members);
  auto embed = principal_embedding(a, fam);
  for ([[maybe_unused]] int e : embed) assert(e >= 0);  // principals are D-ideals
  return FamilyFrame{std::move(fam), FiniteFrame::from_lattice(std::move(lat)),
                     std::move(embed)};
}

FamilyLattice macneille_completion(const MeetSemilattice& a) {
  DownsetFamily fam{normal_family(a), {}};
  fam.closed_under.intersections = true;
  auto lat = family_lattice(a.poset(), fam.members);
  auto embed = principal_embedding(a, fam);
  for ([[maybe_unused]] int e : embed) assert(e >= 0);  // principals are normal
  return FamilyLattice{std::move(fam), std::move(lat), std::move(embed)};
}

std::string family_to_json(const Poset& base, const std::vector<Mask>& members) {
  nlohmann::ordered_json doc;
  auto& elements = doc["elements"] = nlohmann::ordered_json::array();
  for (Mask m : members) {
    auto labels = nlohmann::ordered_json::array();
    for (int i : bits(m)) labels.push_back(base.name(i));
    elements.push_back(labels);
  }
  return doc.dump();
}

std::string family_to_dot(const Poset& base, const std::vector<Mask>& members) {
  if (members.size() > 512)
    raise(Err::too_large, "dot export of families is capped at 512 members");
  const int m = static_cast<int>(members.size());
  std::string out = "digraph family {\n  rankdir=BT;\n";
  for (Mask mm : members) {
    std::string label = base.set_label(mm);
    out += "  \"" + label + "\" [label=\"" + label + "\"];\n";
  }
  // Cover edges of the inclusion order, bottom to top.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !subset(members[i], members[j])) continue;
      bool covered = true;
      for (int k = 0; k < m && covered; ++k)
        if (k != i && k != j && subset(members[i], members[k]) && subset(members[k], members[j]))
          covered = false;
      if (covered)
        out += "  \"" + base.set_label(members[i]) + "\" -> \"" + base.set_label(members[j]) +
               "\";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace slat
