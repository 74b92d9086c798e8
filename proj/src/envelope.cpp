#include "slat/envelope.hpp"

#include <algorithm>
#include <set>

#include "slat/downsets.hpp"
#include "slat/errors.hpp"
#include "slat/iso.hpp"

namespace slat {

namespace {

void sort_by_inclusion(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end(),
            [](Mask x, Mask y) { return count(x) != count(y) ? count(x) < count(y) : x < y; });
}

}  // namespace

PrimeFilterSpace prime_filters(const MeetSemilattice& a) {
  auto fs = filters(a).filters;
  PrimeFilterSpace space;
  for (Mask p : fs) {
    if (p == a.carrier()) continue;  // points are proper
    bool prime = true;
    for (Mask f : fs) {
      for (Mask g : fs)
        if (subset(f & g, p) && !subset(f, p) && !subset(g, p)) {
          prime = false;
          break;
        }
      if (!prime) break;
    }
    if (prime) space.points.push_back(p);
  }
  sort_by_inclusion(space.points);
  return space;
}

StoneAssignment stone_map(const MeetSemilattice& a) {
  StoneAssignment s{prime_filters(a), {}};
  s.image.assign(a.size(), 0);
  for (int x = 0; x < a.size(); ++x)
    for (int p = 0; p < static_cast<int>(s.space.points.size()); ++p)
      if (has(s.space.points[p], x)) s.image[x] |= bit(p);
  return s;
}

EnvelopeLattice distributive_envelope(const MeetSemilattice& a) {
  StoneAssignment stone = stone_map(a);

  // Close the images under binary union.
  std::set<Mask> closed(stone.image.begin(), stone.image.end());
  std::vector<Mask> work(closed.begin(), closed.end());
  while (!work.empty()) {
    Mask m = work.back();
    work.pop_back();
    for (Mask im : stone.image) {
      Mask u = m | im;
      if (closed.insert(u).second) work.push_back(u);
    }
  }
  std::vector<Mask> elements(closed.begin(), closed.end());
  sort_by_inclusion(elements);
  if (elements.size() > max_elements) raise(Err::too_large, "envelope exceeds 64 elements");

  // Name every element as the union of the maximal Stone images inside it.
  std::vector<std::string> names;
  for (Mask s : elements) {
    std::vector<int> gens;
    for (int x = 0; x < a.size(); ++x) {
      if (!subset(stone.image[x], s)) continue;
      bool maximal = true;
      for (int y = 0; y < a.size() && maximal; ++y)
        if (subset(stone.image[y], s) && subset(stone.image[x], stone.image[y]) &&
            stone.image[x] != stone.image[y])
          maximal = false;
      if (maximal) {
        bool dup = false;
        for (int g : gens) dup = dup || stone.image[g] == stone.image[x];
        if (!dup) gens.push_back(x);
      }
    }
    std::string name;
    for (int g : gens) name += (name.empty() ? "" : "∪") + ("s(" + a.name(g) + ")");
    names.push_back(name);
  }

  const int m = static_cast<int>(elements.size());
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (subset(elements[i], elements[j])) less.emplace_back(i, j);
  FiniteLattice lattice = FiniteLattice::from_poset(Poset(names, less));

  std::vector<int> embedding(a.size(), -1);
  for (int x = 0; x < a.size(); ++x) {
    auto it = std::find(elements.begin(), elements.end(), stone.image[x]);
    embedding[x] = static_cast<int>(it - elements.begin());
  }
  bool injective = true, reflecting = true;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (x != y && stone.image[x] == stone.image[y]) injective = false;
      if (subset(stone.image[x], stone.image[y]) && !a.le(x, y)) reflecting = false;
    }

  return EnvelopeLattice{std::move(stone), std::move(elements),    std::move(names),
                         std::move(lattice), std::move(embedding), injective,
                         reflecting,         is_distributive_semilattice(a).ok};
}

Verdict verify_envelope_lemma(const MeetSemilattice& a, int max_tuple) {
  if (!is_distributive_semilattice(a))
    raise(Err::precondition_violated, "envelope lemma assumes a distributive base");
  auto stone = stone_map(a);
  const int n = a.size();
  std::string witness;
  auto check = [&](const std::vector<int>& as, int b) {
    Mask uppers = a.carrier();
    for (int x : as) uppers &= a.poset().up(x);
    bool lhs = subset(uppers, a.poset().up(b));
    Mask cover = 0;
    for (int x : as) cover |= stone.image[x];
    bool rhs = subset(stone.image[b], cover);
    return lhs == rhs;
  };
  std::vector<int> stack;
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth > 0)
      for (int b = 0; b < n; ++b)
        if (!check(stack, b)) {
          witness = "(";
          for (int x : stack) witness += a.name(x) + ",";
          witness += a.name(b) + ")";
          return false;
        }
    if (depth == max_tuple) return true;
    for (int x = 0; x < n; ++x) {
      stack.push_back(x);
      bool ok = self(self, depth + 1);
      stack.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (!rec(rec, 0)) return Verdict::fail(witness);
  return Verdict::pass();
}

Verdict is_sup_morphism(const std::vector<int>& h, const MeetSemilattice& a,
                        const MeetSemilattice& b) {
  if (static_cast<int>(h.size()) != a.size()) return Verdict::fail("map not total");
  for (int x : h)
    if (x < 0 || x >= b.size()) return Verdict::fail("value out of range");
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (h[a.meet(x, y)] != b.meet(h[x], h[y]))
        return Verdict::fail("meet not preserved at (" + a.name(x) + "," + a.name(y) + ")");
      auto j = a.join(x, y);
      if (!j) continue;
      auto hj = b.join(h[x], h[y]);
      if (!hj || *hj != h[*j])
        return Verdict::fail("join not preserved at (" + a.name(x) + "," + a.name(y) + ")");
    }
  return Verdict::pass();
}

EnvelopeMorphism envelope_extend(const std::vector<int>& h, const MeetSemilattice& a,
                                 const MeetSemilattice& b) {
  if (!is_distributive_semilattice(a) || !is_distributive_semilattice(b))
    raise(Err::not_distributive, "envelope extension assumes distributive bases");
  if (auto v = is_sup_morphism(h, a, b); !v)
    raise(Err::not_sup_morphism, "not a sup-morphism: " + v.detail);

  EnvelopeLattice dom = distributive_envelope(a);
  EnvelopeLattice cod = distributive_envelope(b);
  auto index_in_cod = [&](Mask m) {
    auto it = std::find(cod.elements.begin(), cod.elements.end(), m);
    return it == cod.elements.end() ? -1 : static_cast<int>(it - cod.elements.begin());
  };

  // Dh(⋃ s(a_i)) = ⋃ s(h a_i), evaluated over every image below the element.
  std::vector<int> map;
  bool square = true, preserves = true;
  for (Mask s : dom.elements) {
    Mask target = 0;
    for (int x = 0; x < a.size(); ++x)
      if (subset(dom.stone.image[x], s)) target |= cod.stone.image[h[x]];
    int idx = index_in_cod(target);
    if (idx < 0) {
      square = false;
      idx = 0;
    }
    map.push_back(idx);
  }
  for (int x = 0; x < a.size(); ++x)
    if (map[dom.embedding[x]] != cod.embedding[h[x]]) square = false;
  const int m = static_cast<int>(dom.elements.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (map[dom.lattice.join(i, j)] != cod.lattice.join(map[i], map[j])) preserves = false;
      if (map[dom.lattice.meet(i, j)] != cod.lattice.meet(map[i], map[j])) preserves = false;
    }
  return EnvelopeMorphism{std::move(dom), std::move(cod), std::move(map), square, preserves};
}

Verdict envelope_via_embedding(const std::vector<int>& h, const MeetSemilattice& a,
                               const FiniteLattice& b) {
  if (!b.distributive()) raise(Err::not_distributive, "codomain must be distributive");
  if (auto v = is_sup_morphism(h, a, b.base()); !v)
    raise(Err::not_sup_morphism, "not a sup-morphism: " + v.detail);
  for (int x = 0; x < a.size(); ++x)
    for (int y = x + 1; y < a.size(); ++y)
      if (h[x] == h[y]) raise(Err::not_sup_morphism, "map not injective");

  // Sublattice of b generated by the image.
  Mask sub = 0;
  for (int x : h) sub |= bit(x);
  for (bool grew = true; grew;) {
    grew = false;
    for (int x : bits(sub))
      for (int y : bits(sub)) {
        Mask add = bit(b.meet(x, y)) | bit(b.join(x, y));
        if (!subset(add, sub)) {
          sub |= add;
          grew = true;
        }
      }
  }
  auto generated = FiniteLattice::from_poset(b.poset().restrict(sub));
  auto env = distributive_envelope(a);
  if (!lattices_isomorphic(generated, env.lattice))
    return Verdict::fail("generated sublattice (" + std::to_string(generated.size()) +
                         " elements) not isomorphic to envelope (" +
                         std::to_string(env.lattice.size()) + " elements)");
  return Verdict::pass();
}

FrinkFamily frink_ideals(const MeetSemilattice& a) {
  const int n = a.size();
  if (n > 14) raise(Err::too_large, "frink ideal scan limited to 14 elements");
  auto upper = [&](Mask s) {
    Mask u = a.carrier();
    for (int i : bits(s)) u &= a.poset().up(i);
    return u;
  };
  auto lower = [&](Mask s) {
    Mask l = a.carrier();
    for (int i : bits(s)) l &= a.poset().down(i);
    return l;
  };
  std::vector<Mask> ideals;
  for (Mask i = 1; i <= a.carrier(); ++i) {
    bool ideal = true;
    // Every subset S of i, the empty set included.
    Mask s = i;
    for (;;) {
      if (!subset(lower(upper(s)), i)) {
        ideal = false;
        break;
      }
      if (s == 0) break;
      s = (s - 1) & i;
    }
    if (ideal) ideals.push_back(i);
  }
  sort_by_inclusion(ideals);
  auto lattice = family_lattice(a.poset(), ideals);
  return FrinkFamily{std::move(ideals), std::move(lattice)};
}

IdealFamily ideal_frame(const FiniteLattice& l) {
  std::vector<Mask> ideals;
  for (Mask d : downsets(l.base()).members) {
    if (d == 0) continue;
    bool join_closed = true;
    for (int x : bits(d)) {
      for (int y : bits(d))
        if (!has(d, l.join(x, y))) {
          join_closed = false;
          break;
        }
      if (!join_closed) break;
    }
    if (join_closed) ideals.push_back(d);
  }
  sort_by_inclusion(ideals);
  auto lattice = family_lattice(l.poset(), ideals);
  std::vector<int> iso(l.size(), -1);
  for (int x = 0; x < l.size(); ++x) {
    auto it = std::find(ideals.begin(), ideals.end(), l.poset().down(x));
    iso[x] = static_cast<int>(it - ideals.begin());
  }
  return IdealFamily{std::move(ideals), std::move(lattice), std::move(iso)};
}

}  // namespace slat
