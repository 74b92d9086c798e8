#include "slat/generate.hpp"

#include <algorithm>
#include <set>

#include "slat/errors.hpp"
#include "slat/iso.hpp"
#include "slat/rng.hpp"

namespace slat {

const char* kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::semilattice: return "semilattice";
    case InstanceKind::lattice: return "lattice";
    case InstanceKind::distributive_lattice: return "distributive_lattice";
    case InstanceKind::bounded_semilattice: return "bounded_semilattice";
  }
  return "?";
}

InstanceKind kind_from_name(const std::string& name) {
  for (auto k : {InstanceKind::semilattice, InstanceKind::lattice,
                 InstanceKind::distributive_lattice, InstanceKind::bounded_semilattice})
    if (name == kind_name(k)) return k;
  raise(Err::parse, "unknown instance kind '" + name + "'");
}

std::string InstanceSpec::id() const {
  if (method == GenMethod::exhaustive) return "exhaustive:" + std::to_string(size);
  return std::string("random:") + kind_name(kind) + ":" + std::to_string(size) + ":" +
         std::to_string(seed);
}

namespace {

MeetSemilattice semilattice_of_closure_system(const std::vector<Mask>& family) {
  std::vector<Mask> sorted(family);
  std::sort(sorted.begin(), sorted.end(), [](Mask x, Mask y) {
    return count(x) != count(y) ? count(x) < count(y) : x < y;
  });
  const int n = static_cast<int>(sorted.size());
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (subset(sorted[i], sorted[j])) less.emplace_back(i, j);
  return MeetSemilattice::from_poset(Poset(std::move(names), less));
}

}  // namespace

MeetSemilattice random_instance(const InstanceSpec& spec) {
  if (spec.method == GenMethod::exhaustive)
    raise(Err::spec_infeasible, "exhaustive specs have no single instance");
  if (spec.size < 1 || spec.size > 16)
    raise(Err::spec_infeasible, "closure-system sampler supports sizes 1..16");

  const int ground = spec.size;
  const Mask ground_mask = all_of(ground);
  const bool adjoin_top = spec.kind != InstanceKind::semilattice;
  const bool want_distributive = spec.kind == InstanceKind::distributive_lattice;

  SplitMix64 rng(spec.seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::set<Mask> family;
    if (adjoin_top) family.insert(ground_mask);
    int draws = 0;
    while (static_cast<int>(family.size()) < spec.size && draws < 64 * spec.size) {
      ++draws;
      Mask draw = rng.next() & ground_mask;
      // Tentatively close under intersection; reject draws that overshoot.
      std::set<Mask> trial(family);
      std::vector<Mask> work{draw};
      trial.insert(draw);
      while (!work.empty() && trial.size() <= static_cast<size_t>(spec.size)) {
        Mask m = work.back();
        work.pop_back();
        for (Mask f : trial) {
          Mask x = m & f;
          if (trial.insert(x).second) work.push_back(x);
        }
      }
      if (trial.size() <= static_cast<size_t>(spec.size)) family = std::move(trial);
    }
    if (static_cast<int>(family.size()) != spec.size) continue;
    auto ms = semilattice_of_closure_system({family.begin(), family.end()});
    if (want_distributive && !is_distributive_semilattice(ms)) continue;
    return ms;
  }
  raise(Err::spec_infeasible, "no instance found for " + spec.id());
}

std::vector<MeetSemilattice> exhaustive_instances(int n) {
  if (n < 1 || n > 7) raise(Err::too_large, "exhaustive enumeration capped at 7 elements");

  // Grow by one maximal element at a time: prefixes of linear extensions of a
  // meet-semilattice are meet-semilattices, so every isomorphism class is
  // reachable through smaller classes.
  std::vector<Poset> level{canonical_relabel(Poset({"e0"}, {}))};
  for (int k = 2; k <= n; ++k) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Poset>> next;
    for (const Poset& p : level) {
      // Candidate strict down-sets for the new element: downsets D such that
      // D ∩ ↓x has a greatest element for every existing x.
      std::vector<Mask> downs{0};
      for (int e : p.linear_extension()) {
        size_t sz = downs.size();
        for (size_t i = 0; i < sz; ++i)
          if (subset(p.down(e) & ~bit(e), downs[i])) downs.push_back(downs[i] | bit(e));
      }
      for (Mask d : downs) {
        if (d == 0) continue;
        bool glbs = true;
        for (int x = 0; x < p.size() && glbs; ++x) {
          Mask common = d & p.down(x);
          bool greatest = false;
          for (int m : bits(common))
            if (subset(common, p.down(m))) greatest = true;
          glbs = greatest;
        }
        if (!glbs) continue;
        std::vector<std::string> names(p.names());
        names.push_back("e" + std::to_string(p.size()));
        std::vector<std::pair<int, int>> less;
        for (int a = 0; a < p.size(); ++a)
          for (int b : bits(p.up(a) & ~bit(a))) less.emplace_back(a, b);
        for (int a : bits(d)) less.emplace_back(a, p.size());
        Poset child = canonical_relabel(Poset(std::move(names), less));
        std::string form = canonical_form(child);
        if (seen.insert(form).second) next.emplace_back(std::move(form), std::move(child));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [form, child] : next) level.push_back(std::move(child));
  }
  std::vector<MeetSemilattice> out;
  for (const Poset& p : level) out.push_back(MeetSemilattice::from_poset(p));
  return out;
}

std::vector<std::pair<std::string, MeetSemilattice>> exhaustive_family(int n) {
  std::vector<std::pair<std::string, MeetSemilattice>> out;
  for (int k = 1; k <= n; ++k) {
    int index = 0;
    for (auto& ms : exhaustive_instances(k))
      out.emplace_back("exhaustive:" + std::to_string(k) + ":" + std::to_string(index++),
                       std::move(ms));
  }
  return out;
}

}  // namespace slat
