#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slat/masks.hpp"

namespace slat {

enum class Dir { meet, join };

// A finite poset on at most 64 named elements. The order is stored as one
// bitmask per element in each direction, which makes comparability, bound
// computations and down-closure tests single-word operations.
class Poset {
 public:
  // `less` pairs may be covers or any valid less-than pairs; the constructor
  // takes the reflexive-transitive closure and rejects cycles.
  Poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& less);

  // Text format (line oriented, '#' comments):
  //   elements: 0 m 1
  //   covers: 0<m m<1
  // A JSON object {"elements":[...],"covers":[["a","b"],...]} is accepted too.
  static Poset parse(const std::string& input);
  static Poset parse_text(const std::string& text);
  static Poset parse_json(const std::string& text);

  int size() const { return n_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 when absent

  bool le(int a, int b) const { return has(up_[a], b); }
  Mask down(int i) const { return down_[i]; }  // {j : j <= i}
  Mask up(int i) const { return up_[i]; }      // {j : i <= j}
  Mask carrier() const { return all_of(n_); }

  bool is_downset(Mask m) const;
  bool is_upset(Mask m) const;
  Mask down_closure(Mask m) const;

  // Greatest lower / least upper bound of a subset, when it exists.
  // bound({}, meet) is the top and bound({}, join) the bottom, when present.
  std::optional<int> bound(Mask s, Dir dir) const;
  std::optional<int> bottom() const { return bound(0, Dir::join); }
  std::optional<int> top() const { return bound(0, Dir::meet); }

  Mask minimal_of(Mask s) const;
  Mask maximal_of(Mask s) const;

  // Cover pairs (a,b) with a < b and nothing strictly between, sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;
  std::vector<int> linear_extension() const;

  Poset dual() const;
  // Restriction to a downset of the carrier, keeping element order.
  Poset restrict(Mask m) const;

  // Normalized serialization; parse(to_text(p)) round-trips byte-for-byte.
  std::string to_text() const;
  std::string to_json() const;
  std::string to_dot() const;

  std::string set_label(Mask m) const;  // "{a,b}" with names in element order

  bool operator==(const Poset& o) const { return names_ == o.names_ && up_ == o.up_; }

 private:
  int n_;
  std::vector<std::string> names_;
  std::vector<Mask> down_, up_;
};

}  // namespace slat
