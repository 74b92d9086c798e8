#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "slat/downsets.hpp"
#include "slat/errors.hpp"
#include "slat/generate.hpp"
#include "slat/iso.hpp"

using namespace slat;
using namespace fixtures;

namespace {

int frame_element(const FiniteFrame& f, const std::string& name) {
  return f.poset().index_of(name);
}

}  // namespace

TEST_CASE("frame construction requires distributivity") {
  CHECK_THROWS_AS(FiniteFrame::from_lattice(FiniteLattice::from_semilattice(m3())), Error);
  auto f = FiniteFrame::from_lattice(FiniteLattice::from_semilattice(b2()));
  CHECK(f.size() == 4);
}

TEST_CASE("heyting and pseudocomplement tables") {
  auto v = frame_v();  // upsets of x<y, x<z: {}, {y}, {z}, {y,z}, {x,y,z}
  int empty = frame_element(v, "{}");
  int why = frame_element(v, "{y}");
  int zed = frame_element(v, "{z}");
  int top = v.top();
  REQUIRE(why >= 0);
  REQUIRE(zed >= 0);
  CHECK(v.pseudo(why) == zed);
  CHECK(v.pseudo(zed) == why);
  CHECK(v.pseudo(empty) == top);
  CHECK(v.pseudo(top) == empty);

  // heyting(x,c) really is the largest y with x ∧ y <= c.
  for (int x = 0; x < v.size(); ++x)
    for (int c = 0; c < v.size(); ++c) {
      int h = v.heyting(x, c);
      CHECK(v.le(v.meet(x, h), c));
      for (int y = 0; y < v.size(); ++y)
        if (v.le(v.meet(x, y), c)) CHECK(v.le(y, h));
    }

  // pseudo is antitone and x <= pseudo(pseudo(x)).
  for (int x = 0; x < v.size(); ++x) {
    CHECK(v.le(x, v.pseudo(v.pseudo(x))));
    for (int y = 0; y < v.size(); ++y)
      if (v.le(x, y)) CHECK(v.le(v.pseudo(y), v.pseudo(x)));
  }
}

TEST_CASE("heyting tables across every small frame") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : exhaustive_instances(n)) {
      if (!a.has_top() || !is_distributive_semilattice(a)) continue;
      auto f = FiniteFrame::from_lattice(FiniteLattice::from_semilattice(a));
      for (int x = 0; x < f.size(); ++x) {
        for (int c = 0; c < f.size(); ++c) {
          int h = f.heyting(x, c);
          CHECK(f.le(f.meet(x, h), c));
          for (int y = 0; y < f.size(); ++y)
            if (f.le(f.meet(x, y), c)) CHECK(f.le(y, h));
          std::vector<int> table(f.size());
          for (int t = 0; t < f.size(); ++t) table[t] = w_nucleus(f, c, t);
          CHECK(verify_nucleus_table(f, table).ok);
        }
        CHECK(f.pseudo(x) == f.heyting(x, f.bottom()));
      }
    }
}

TEST_CASE("double-implication nuclei") {
  auto v = frame_v();
  int why = frame_element(v, "{y}");
  CHECK(w_nucleus(v, v.bottom(), why) == why);
  for (int c = 0; c < v.size(); ++c) {
    CHECK(w_nucleus(v, c, c) == c);
    for (int x = 0; x < v.size(); ++x) CHECK(w_nucleus(v, v.top(), x) == v.top());
    std::vector<int> table(v.size());
    for (int x = 0; x < v.size(); ++x) table[x] = w_nucleus(v, c, x);
    CHECK(verify_nucleus_table(v, table).ok);
  }
}

TEST_CASE("complemented elements and zero-dimensionality") {
  auto boolean = boolean_frame(3);
  CHECK(complemented(boolean) == boolean.poset().carrier());
  CHECK(is_zero_dimensional(boolean).ok);

  auto v = frame_v();
  CHECK(count(complemented(v)) == 2);  // only the bounds
  CHECK_FALSE(is_zero_dimensional(v).ok);

  auto chain = FiniteFrame::from_lattice(FiniteLattice::from_semilattice(c3()));
  CHECK(count(complemented(chain)) == 2);
  CHECK_FALSE(is_zero_dimensional(chain).ok);
}

TEST_CASE("booleanization") {
  auto boolean = boolean_frame(2);
  auto fixed = booleanization(boolean);
  CHECK(fixed.frame.size() == boolean.size());

  auto chain = FiniteFrame::from_lattice(FiniteLattice::from_semilattice(c3()));
  auto chain_fix = booleanization(chain);
  CHECK(chain_fix.frame.size() == 2);

  auto v = frame_v();
  auto v_fix = booleanization(v);
  CHECK(v_fix.frame.size() == 4);
  CHECK(lattices_isomorphic(v_fix.frame.lattice(), boolean_frame(2).lattice()));
  CHECK(verify_nucleus_table(v, v_fix.nucleus).ok);
  CHECK(v_fix.nucleus[v.bottom()] == v.bottom());  // dense
}

TEST_CASE("sublocale recognition") {
  auto v = frame_v();
  CHECK(is_sublocale(v, v.poset().carrier()).ok);
  CHECK(is_sublocale(v, bit(v.top())).ok);
  CHECK_FALSE(is_sublocale(v, bit(v.bottom())).ok);

  // The fixpoints of the dideal closure form a sublocale of the downset
  // frame, and the full scan finds them.
  for (const auto& a : {fence(), m3()}) {
    auto fam = downsets(a);
    auto frame = FiniteFrame::from_lattice(family_lattice(a.poset(), fam.members));
    Mask fix_delta = 0;
    for (Mask m : dideal_family(a)) fix_delta |= bit(fam.index_of(m));
    CHECK(is_sublocale(frame, fix_delta).ok);
    if (frame.size() <= 12) {
      auto subs = sublocales(frame);
      CHECK(std::find(subs.begin(), subs.end(), fix_delta) != subs.end());
    }
  }
}

TEST_CASE("sublocale scan matches the nucleus count") {
  auto square = boolean_frame(2);
  auto subs = sublocales(square);
  int nuclei = 0;
  // Brute force over all self-maps of the four-element frame.
  std::vector<int> table(4);
  for (table[0] = 0; table[0] < 4; ++table[0])
    for (table[1] = 0; table[1] < 4; ++table[1])
      for (table[2] = 0; table[2] < 4; ++table[2])
        for (table[3] = 0; table[3] < 4; ++table[3])
          if (verify_nucleus_table(square, table).ok) ++nuclei;
  CHECK(static_cast<int>(subs.size()) == nuclei);

  auto two_chain = boolean_frame(1);
  CHECK(sublocales(two_chain).size() == 2);
}

TEST_CASE("sublocales form a coframe") {
  for (const auto& f : {frame_v(), boolean_frame(2),
                        FiniteFrame::from_lattice(FiniteLattice::from_semilattice(c3()))}) {
    auto subs = sublocales(f);
    auto join_of_two = [&](Mask s, Mask t) {
      // Smallest sublocale containing both; the family is closed under
      // intersections, so the intersection of everything above works.
      Mask acc = f.poset().carrier();
      for (Mask u : subs)
        if (subset(s | t, u)) acc &= u;
      return acc;
    };
    for (Mask s : subs)
      for (Mask t : subs) {
        CHECK(is_sublocale(f, s & t).ok);
        CHECK(is_sublocale(f, join_of_two(s, t)).ok);
        // Binary coframe law: joins distribute over meets.
        for (Mask u : subs)
          CHECK(join_of_two(s, t & u) == (join_of_two(s, t) & join_of_two(s, u)));
      }
  }
}

TEST_CASE("booleanization is the smallest dense sublocale") {
  std::vector<FiniteFrame> frames{
      frame_v(), boolean_frame(2),
      FiniteFrame::from_lattice(FiniteLattice::from_semilattice(c3()))};
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : exhaustive_instances(n))
      if (a.has_top() && is_distributive_semilattice(a))
        frames.push_back(FiniteFrame::from_lattice(FiniteLattice::from_semilattice(a)));
  for (const auto& frame : frames) {
    auto fixed = booleanization(frame);
    Mask boolean_mask = 0;
    for (int i : fixed.fixpoints) boolean_mask |= bit(i);
    for (Mask s : sublocales(frame))
      if (is_dense_sublocale(frame, s)) CHECK(subset(boolean_mask, s));
  }
}

TEST_CASE("sublocale scan cap") {
  CHECK_THROWS_AS(sublocales(boolean_frame(4)), Error);
}

TEST_CASE("frame products multiply sizes") {
  auto prod = frame_product(boolean_frame(1), boolean_frame(2));
  CHECK(prod.size() == 8);
  CHECK(lattices_isomorphic(prod.lattice(), boolean_frame(3).lattice()));
}
