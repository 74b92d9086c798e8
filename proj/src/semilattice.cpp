#include "slat/semilattice.hpp"

#include <algorithm>

#include "slat/errors.hpp"

namespace slat {

MeetSemilattice::MeetSemilattice(Poset p) : p_(std::move(p)) {
  const int n = p_.size();
  meet_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      auto glb = p_.bound(bit(a) | bit(b), Dir::meet);
      if (!glb)
        raise(Err::not_meet_closed,
              "no meet for {" + p_.name(a) + "," + p_.name(b) + "}");
      meet_[a * n + b] = meet_[b * n + a] = static_cast<signed char>(*glb);
    }
  if (auto b = p_.bottom()) bottom_ = *b;
  if (auto t = p_.top()) top_ = *t;
}

MeetSemilattice MeetSemilattice::from_poset(const Poset& p) { return MeetSemilattice(p); }

std::optional<int> MeetSemilattice::bottom() const {
  return bottom_ >= 0 ? std::optional<int>(bottom_) : std::nullopt;
}

std::optional<int> MeetSemilattice::top() const {
  return top_ >= 0 ? std::optional<int>(top_) : std::nullopt;
}

int MeetSemilattice::meet_of(Mask s) const {
  int acc = -1;
  for (int i : bits(s)) acc = acc < 0 ? i : meet(acc, i);
  return acc;
}

Mask MeetSemilattice::annihilator(int p, int q) const {
  Mask r = 0;
  for (int x = 0; x < size(); ++x)
    if (le(meet(x, p), q)) r |= bit(x);
  return r;
}

Verdict is_distributive_semilattice(const MeetSemilattice& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int c = 0; c < n; ++c) {
        if (!a.le(a.meet(x, y), c)) continue;
        bool found = false;
        for (int xp : bits(a.poset().up(x))) {
          for (int yp : bits(a.poset().up(y)))
            if (a.meet(xp, yp) == c) {
              found = true;
              break;
            }
          if (found) break;
        }
        if (!found)
          return Verdict::fail("(" + a.name(x) + "," + a.name(y) + "," + a.name(c) + ")");
      }
  return Verdict::pass();
}

Verdict is_weakly_distributive(const MeetSemilattice& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto yz = a.join(y, z);
        if (!yz) continue;
        Mask meets = bit(a.meet(x, y)) | bit(a.meet(x, z));
        auto lhs = a.join_of(meets);
        if (!lhs || *lhs != a.meet(x, *yz))
          return Verdict::fail("(" + a.name(x) + "," + a.name(y) + "," + a.name(z) + ")");
      }
  return Verdict::pass();
}

bool is_admissible(const MeetSemilattice& a, Mask g) {
  auto j = a.join_of(g);
  if (!j) return false;
  for (int x = 0; x < a.size(); ++x) {
    Mask meets = 0;
    for (int y : bits(g)) meets |= bit(a.meet(x, y));
    auto part = a.join_of(meets);
    if (!part || *part != a.meet(x, *j)) return false;
  }
  return true;
}

std::optional<int> admissible_join(const MeetSemilattice& a, Mask g) {
  if (!is_admissible(a, g)) return std::nullopt;
  return a.join_of(g);
}

FilterFamily filters(const MeetSemilattice& a) {
  // A filter is a nonempty meet-closed upset; improper filters are kept.
  // Enumerate upsets by the dual of downset enumeration, then test meets.
  std::vector<Mask> ups{0};
  // The dual's linear extension processes maximal elements first, so every
  // element lands only on sets already containing its strict upset.
  for (int e : a.poset().dual().linear_extension()) {
    size_t sz = ups.size();
    for (size_t i = 0; i < sz; ++i)
      if (subset(a.poset().up(e) & ~bit(e), ups[i])) ups.push_back(ups[i] | bit(e));
  }
  FilterFamily fam;
  for (Mask u : ups) {
    if (u == 0) continue;
    bool closed = true;
    for (int x : bits(u)) {
      for (int y : bits(u))
        if (!has(u, a.meet(x, y))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) fam.filters.push_back(u);
  }
  std::sort(fam.filters.begin(), fam.filters.end(), [](Mask x, Mask y) {
    return count(x) != count(y) ? count(x) < count(y) : x < y;
  });

  // Lattice structure of the family under inclusion.
  const auto& fs = fam.filters;
  const int m = static_cast<int>(fs.size());
  std::vector<int> meet_tab(static_cast<size_t>(m) * m), join_tab(static_cast<size_t>(m) * m);
  fam.is_lattice = true;
  for (int i = 0; i < m && fam.is_lattice; ++i)
    for (int j = 0; j < m && fam.is_lattice; ++j)
      for (bool lower : {true, false}) {
        // Greatest member below both / least member above both, if any.
        int best = -1;
        for (int k = 0; k < m; ++k) {
          bool fits = lower ? subset(fs[k], fs[i]) && subset(fs[k], fs[j])
                            : subset(fs[i], fs[k]) && subset(fs[j], fs[k]);
          if (fits && (best < 0 || (lower ? subset(fs[best], fs[k]) : subset(fs[k], fs[best]))))
            best = k;
        }
        bool ok = best >= 0;
        for (int k = 0; ok && k < m; ++k) {
          bool fits = lower ? subset(fs[k], fs[i]) && subset(fs[k], fs[j])
                            : subset(fs[i], fs[k]) && subset(fs[j], fs[k]);
          if (fits && !(lower ? subset(fs[k], fs[best]) : subset(fs[best], fs[k]))) ok = false;
        }
        if (!ok) {
          fam.is_lattice = false;
          break;
        }
        (lower ? meet_tab : join_tab)[i * m + j] = best;
      }
  if (fam.is_lattice) {
    fam.is_distributive = true;
    for (int x = 0; x < m && fam.is_distributive; ++x)
      for (int y = 0; y < m && fam.is_distributive; ++y)
        for (int z = 0; z < m; ++z)
          if (meet_tab[x * m + join_tab[y * m + z]] !=
              join_tab[meet_tab[x * m + y] * m + meet_tab[x * m + z]]) {
            fam.is_distributive = false;
            break;
          }
  }
  return fam;
}

FiniteLattice::FiniteLattice(MeetSemilattice ms) : ms_(std::move(ms)) {
  const int n = ms_.size();
  join_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      auto lub = ms_.join(a, b);
      if (!lub)
        raise(Err::not_lattice, "no join for {" + ms_.name(a) + "," + ms_.name(b) + "}");
      join_[a * n + b] = join_[b * n + a] = static_cast<signed char>(*lub);
    }
  bottom_ = *ms_.bottom();
  top_ = *ms_.top();  // a finite lattice is bounded
  distributive_ = true;
  for (int a = 0; a < n && distributive_; ++a)
    for (int b = 0; b < n && distributive_; ++b)
      for (int c = 0; c < n; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
          distributive_ = false;
          break;
        }
}

FiniteLattice FiniteLattice::from_semilattice(const MeetSemilattice& a) {
  return FiniteLattice(a);
}

FiniteLattice FiniteLattice::from_poset(const Poset& p) {
  return FiniteLattice(MeetSemilattice::from_poset(p));
}

int FiniteLattice::join_of(Mask s) const {
  int acc = bottom_;
  for (int i : bits(s)) acc = join(acc, i);
  return acc;
}

Mask FiniteLattice::join_irreducibles() const {
  Mask r = 0;
  for (int x = 0; x < size(); ++x) {
    if (x == bottom_) continue;
    Mask strictly_below = poset().down(x) & ~bit(x);
    if (count(poset().maximal_of(strictly_below)) == 1) r |= bit(x);
  }
  return r;
}

FiniteLattice lattice_product(const FiniteLattice& a, const FiniteLattice& b) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> less;
  const int na = a.size(), nb = b.size();
  if (na * nb > max_elements) raise(Err::too_large, "product exceeds 64 elements");
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) names.push_back(a.name(i) + "." + b.name(j));
  auto id = [nb](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          if (a.le(i, k) && b.le(j, l)) less.emplace_back(id(i, j), id(k, l));
  return FiniteLattice::from_poset(Poset(std::move(names), less));
}

}  // namespace slat
