#include "slat/iso.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

namespace slat {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  return h;
}

// Iteratively refined isomorphism-invariant key per element. Hash collisions
// only enlarge the permutation search, never change the result.
std::vector<std::uint64_t> invariant_keys(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint64_t> key(n);
  for (int i = 0; i < n; ++i)
    key[i] = mix(static_cast<std::uint64_t>(count(p.down(i))) << 32, count(p.up(i)));
  for (int round = 0; round < 2; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> below, above;
      for (int j : bits(p.down(i) & ~bit(i))) below.push_back(key[j]);
      for (int j : bits(p.up(i) & ~bit(i))) above.push_back(key[j]);
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      std::uint64_t h = mix(key[i], 0x1234567);
      for (auto v : below) h = mix(h, v);
      h = mix(h, 0xfeed);
      for (auto v : above) h = mix(h, v);
      next[i] = h;
    }
    key = std::move(next);
  }
  return key;
}

struct CanonicalSearch {
  const Poset& p;
  std::vector<std::vector<int>> blocks;  // elements grouped by key, block order fixed
  std::vector<int> order;                // order[new position] = original element
  std::vector<Mask> best_rows;
  std::vector<int> best_order;

  explicit CanonicalSearch(const Poset& poset) : p(poset) {
    auto key = invariant_keys(p);
    std::vector<int> ids(p.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      return key[a] != key[b] ? key[a] < key[b] : a < b;
    });
    for (int id : ids) {
      if (blocks.empty() || key[blocks.back().back()] != key[id]) blocks.emplace_back();
      blocks.back().push_back(id);
    }
    run();
  }

  void run() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    for (;;) {
      consider();
      // Odometer over per-block permutations.
      int i = static_cast<int>(blocks.size()) - 1;
      while (i >= 0 && !std::next_permutation(blocks[i].begin(), blocks[i].end())) --i;
      if (i < 0) break;
    }
  }

  void consider() {
    const int n = p.size();
    order.clear();
    for (const auto& b : blocks) order.insert(order.end(), b.begin(), b.end());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<Mask> rows(n);
    bool better = best_rows.empty(), decided = best_rows.empty();
    for (int i = 0; i < n; ++i) {
      Mask row = 0;
      for (int j : bits(p.up(order[i]))) row |= bit(pos[j]);
      rows[i] = row;
      if (!decided) {
        if (row < best_rows[i]) {
          better = true;
          decided = true;
        } else if (row > best_rows[i]) {
          return;  // worse prefix
        }
      }
    }
    if (better) {
      best_rows = rows;
      best_order = order;
    }
  }
};

}  // namespace

std::string canonical_form(const Poset& p) {
  CanonicalSearch search(p);
  std::string out;
  out.push_back(static_cast<char>(p.size()));
  for (Mask row : search.best_rows) {
    std::array<char, 8> bytes;
    std::memcpy(bytes.data(), &row, 8);
    out.append(bytes.data(), 8);
  }
  return out;
}

Poset canonical_relabel(const Poset& p) {
  CanonicalSearch search(p);
  const int n = p.size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[search.best_order[i]] = i;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<int, int>> less;
  for (int a = 0; a < n; ++a)
    for (int b : bits(p.up(a) & ~bit(a))) less.emplace_back(pos[a], pos[b]);
  return Poset(std::move(names), less);
}

bool posets_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  auto ka = invariant_keys(a), kb = invariant_keys(b);
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) return false;
  return canonical_form(a) == canonical_form(b);
}

bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return false;
  if (a.distributive() != b.distributive()) return false;
  if (a.distributive()) {
    // Birkhoff: a finite distributive lattice is the downset lattice of its
    // join-irreducible subposet.
    Mask ja = a.join_irreducibles(), jb = b.join_irreducibles();
    if (count(ja) != count(jb)) return false;
    if (count(ja) == 0) return true;  // both one-element lattices
    return posets_isomorphic(a.poset().restrict(ja), b.poset().restrict(jb));
  }
  return posets_isomorphic(a.poset(), b.poset());
}

}  // namespace slat
