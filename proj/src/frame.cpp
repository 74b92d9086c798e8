#include "slat/frame.hpp"

#include <algorithm>
#include <cassert>

#include "slat/errors.hpp"

namespace slat {

FiniteFrame::FiniteFrame(FiniteLattice l) : l_(std::move(l)) {
  if (!l_.distributive())
    raise(Err::not_distributive, "frame construction needs a distributive lattice");
  const int n = l_.size();
  heyting_.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < n; ++c) {
      Mask candidates = 0;
      for (int y = 0; y < n; ++y)
        if (l_.le(l_.meet(x, y), c)) candidates |= bit(y);
      int h = l_.join_of(candidates);
      assert(l_.le(l_.meet(x, h), c));
      heyting_[x * n + c] = static_cast<signed char>(h);
    }
  pseudo_.assign(n, -1);
  for (int x = 0; x < n; ++x) pseudo_[x] = heyting_[x * n + l_.bottom()];
}

FiniteFrame FiniteFrame::from_lattice(FiniteLattice l) { return FiniteFrame(std::move(l)); }

FiniteFrame FiniteFrame::from_poset(const Poset& p) {
  return FiniteFrame(FiniteLattice::from_poset(p));
}

int w_nucleus(const FiniteFrame& f, int c, int x) {
  return f.heyting(f.heyting(x, c), c);
}

FiniteFrame boolean_frame(int atoms) {
  if (atoms < 0 || atoms > 6) raise(Err::too_large, "boolean frame limited to 6 atoms");
  static const char* atom_names = "abcdef";
  const int n = 1 << atoms;
  std::vector<std::string> names;
  for (int m = 0; m < n; ++m) {
    std::string label = "{";
    for (int i = 0; i < atoms; ++i)
      if (m >> i & 1) {
        if (label.size() > 1) label += ",";
        label += atom_names[i];
      }
    names.push_back(label + "}");
  }
  std::vector<std::pair<int, int>> less;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((x & ~y) == 0) less.emplace_back(x, y);
  return FiniteFrame::from_poset(Poset(std::move(names), less));
}

FiniteFrame frame_product(const FiniteFrame& a, const FiniteFrame& b) {
  return FiniteFrame::from_lattice(lattice_product(a.lattice(), b.lattice()));
}

FiniteFrame frame_of_downsets(const Poset& p) {
  std::vector<Mask> downs{0};
  for (int e : p.linear_extension()) {
    size_t sz = downs.size();
    for (size_t i = 0; i < sz; ++i)
      if (subset(p.down(e) & ~bit(e), downs[i])) {
        downs.push_back(downs[i] | bit(e));
        if (downs.size() > max_elements)
          raise(Err::too_large, "downset frame exceeds 64 elements");
      }
  }
  std::sort(downs.begin(), downs.end(), [](Mask x, Mask y) {
    return count(x) != count(y) ? count(x) < count(y) : x < y;
  });
  const int m = static_cast<int>(downs.size());
  std::vector<std::string> names;
  for (Mask d : downs) names.push_back(p.set_label(d));
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (subset(downs[i], downs[j])) less.emplace_back(i, j);
  return FiniteFrame::from_poset(Poset(std::move(names), less));
}

Mask complemented(const FiniteFrame& f) {
  Mask r = 0;
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y)
      if (f.meet(x, y) == f.bottom() && f.join(x, y) == f.top()) {
        r |= bit(x);
        break;
      }
  return r;
}

Verdict is_zero_dimensional(const FiniteFrame& f) {
  Mask cl = complemented(f);
  for (int x = 0; x < f.size(); ++x)
    if (f.join_of(cl & f.poset().down(x)) != x)
      return Verdict::fail(f.name(x));
  return Verdict::pass();
}

Verdict is_extremally_disconnected_law(const FiniteFrame& f) {
  for (int x = 0; x < f.size(); ++x)
    if (f.join(f.pseudo(x), f.pseudo(f.pseudo(x))) != f.top()) return Verdict::fail(f.name(x));
  return Verdict::pass();
}

Booleanization booleanization(const FiniteFrame& f) {
  const int n = f.size();
  std::vector<int> nucleus(n);
  Mask fixed = 0;
  for (int x = 0; x < n; ++x) {
    nucleus[x] = f.pseudo(f.pseudo(x));
    if (nucleus[x] == x) fixed |= bit(x);
  }
  assert(nucleus[f.bottom()] == f.bottom());  // the sublocale is dense
  std::vector<int> fixpoints;
  for (int i : bits(fixed)) fixpoints.push_back(i);
  auto sub = FiniteFrame::from_poset(f.poset().restrict(fixed));
  return Booleanization{std::move(sub), std::move(fixpoints), std::move(nucleus)};
}

Verdict verify_closure_table(const FiniteFrame& f, const std::vector<int>& table) {
  for (int x = 0; x < f.size(); ++x)
    if (!f.le(x, table[x]))
      return Verdict::fail("not inflationary at " + f.name(x));
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y)
      if (f.le(x, y) && !f.le(table[x], table[y]))
        return Verdict::fail("not monotone at (" + f.name(x) + "," + f.name(y) + ")");
  for (int x = 0; x < f.size(); ++x)
    if (table[table[x]] != table[x])
      return Verdict::fail("not idempotent at " + f.name(x));
  return Verdict::pass();
}

Verdict verify_nucleus_table(const FiniteFrame& f, const std::vector<int>& table) {
  if (auto v = verify_closure_table(f, table); !v) return v;
  for (int x = 0; x < f.size(); ++x)
    for (int y = 0; y < f.size(); ++y)
      if (table[f.meet(x, y)] != f.meet(table[x], table[y]))
        return Verdict::fail("meet law fails at (" + f.name(x) + "," + f.name(y) + ")");
  return Verdict::pass();
}

Verdict is_sublocale(const FiniteFrame& f, Mask s) {
  if (!has(s, f.top())) return Verdict::fail("missing top");
  for (int x : bits(s))
    for (int y : bits(s))
      if (!has(s, f.meet(x, y)))
        return Verdict::fail("not meet-closed at (" + f.name(x) + "," + f.name(y) + ")");
  for (int x = 0; x < f.size(); ++x)
    for (int t : bits(s))
      if (!has(s, f.heyting(x, t)))
        return Verdict::fail("not heyting-closed at (" + f.name(x) + "," + f.name(t) + ")");
  return Verdict::pass();
}

std::vector<Mask> sublocales(const FiniteFrame& f) {
  if (f.size() > 12) raise(Err::too_large, "sublocale scan limited to 12 elements");
  std::vector<Mask> out;
  for (Mask s = 0; s <= all_of(f.size()); ++s)
    if (is_sublocale(f, s)) out.push_back(s);
  std::sort(out.begin(), out.end(), [](Mask x, Mask y) {
    return count(x) != count(y) ? count(x) < count(y) : x < y;
  });
  return out;
}

bool is_dense_sublocale(const FiniteFrame& f, Mask s) { return has(s, f.bottom()); }

}  // namespace slat
