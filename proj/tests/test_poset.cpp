#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "slat/errors.hpp"
#include "slat/generate.hpp"

using namespace slat;

TEST_CASE("parsing builds the declared order") {
  auto c3 = Poset::parse("elements: 0 m 1\ncovers: 0<m m<1\n");
  CHECK(c3.size() == 3);
  CHECK(c3.le(0, 2));  // transitive closure
  CHECK_FALSE(c3.le(2, 0));

  auto m3 = Poset::parse("elements: 0 x y z 1\ncovers: 0<x 0<y 0<z x<1 y<1 z<1\n");
  CHECK(m3.size() == 5);
  CHECK_FALSE(m3.le(1, 2));
  CHECK(m3.le(0, 4));
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS_AS(Poset::parse("elements: a b\ncovers: a<b b<a\n"), Error);
  CHECK_THROWS_AS(Poset::parse("elements: a a\ncovers:\n"), Error);
  CHECK_THROWS_AS(Poset::parse("elements: a b\ncovers: a<c\n"), Error);
  CHECK_THROWS_AS(Poset::parse("elements: a b\nbogus: x\n"), Error);
  CHECK_THROWS_AS(Poset::parse(""), Error);
  CHECK_THROWS_AS(Poset::parse("covers: a<b\n"), Error);
  try {
    Poset::parse("elements: a b\ncovers: a<b b<a\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::cycle_detected);
  }
}

TEST_CASE("comments and json input") {
  auto p = Poset::parse("# a chain\nelements: a b # trailing\ncovers: a<b\n");
  CHECK(p.size() == 2);
  auto q = Poset::parse(R"({"elements":["a","b"],"covers":[["a","b"]]})");
  CHECK(q.le(0, 1));
  CHECK(p.to_text() == q.to_text());
  CHECK_THROWS_AS(Poset::parse(R"({"elements":["a"],"covers":[["a","b"]]})"), Error);
}

TEST_CASE("serialization round-trips byte for byte on normalized input") {
  for (const char* text : {
           "elements: 0 m 1\ncovers: 0<m m<1\n",
           "elements: 0 x y z 1\ncovers: 0<x 0<y 0<z x<1 y<1 z<1\n",
           "elements: a\ncovers:\n",
       }) {
    auto p = Poset::parse(text);
    CHECK(p.to_text() == text);
    CHECK(Poset::parse(p.to_text()).to_text() == p.to_text());
    CHECK(Poset::parse(p.to_json()).to_text() == p.to_text());
  }
}

TEST_CASE("bound computes glbs and lubs") {
  auto m3 = fixtures::m3().poset();
  CHECK(m3.bound(bit(1) | bit(2), Dir::meet) == 0);
  CHECK(m3.bound(bit(1) | bit(2), Dir::join) == 4);
  CHECK(m3.bound(0, Dir::join) == 0);  // empty join is the bottom
  CHECK(m3.bound(0, Dir::meet) == 4);  // empty meet is the top

  auto fence = fixtures::fence().poset();
  CHECK_FALSE(fence.bound(bit(1) | bit(2), Dir::join).has_value());
  CHECK_FALSE(fence.bound(0, Dir::meet).has_value());  // no top
}

TEST_CASE("bounds dominate what they bound") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& ms : exhaustive_instances(n)) {
      const auto& p = ms.poset();
      for (Mask s = 0; s <= p.carrier(); ++s) {
        auto glb = p.bound(s, Dir::meet);
        if (!glb) continue;
        for (int i : bits(s)) CHECK(p.le(*glb, i));
        for (int l = 0; l < p.size(); ++l) {
          bool lower = true;
          for (int i : bits(s)) lower = lower && p.le(l, i);
          if (lower) CHECK(p.le(l, *glb));
        }
      }
    }
}

TEST_CASE("order axioms hold on everything the parser accepts") {
  auto check_axioms = [](const Poset& p) {
    for (int a = 0; a < p.size(); ++a) {
      CHECK(p.le(a, a));
      for (int b = 0; b < p.size(); ++b) {
        if (a != b && p.le(a, b)) CHECK_FALSE(p.le(b, a));
        for (int c = 0; c < p.size(); ++c)
          if (p.le(a, b) && p.le(b, c)) CHECK(p.le(a, c));
      }
    }
  };
  check_axioms(fixtures::m3().poset());
  check_axioms(fixtures::fence().poset());
  for (int n = 1; n <= 5; ++n)
    for (const auto& ms : exhaustive_instances(n)) check_axioms(ms.poset());
}

TEST_CASE("covers are the transitive reduction") {
  auto c4 = Poset::parse("elements: a b c d\ncovers: a<b b<c c<d a<c a<d b<d\n");
  CHECK(c4.cover_pairs().size() == 3);
  CHECK(c4.to_text() == "elements: a b c d\ncovers: a<b b<c c<d\n");
}

TEST_CASE("dot export") {
  auto dot = fixtures::c3().poset().to_dot();
  CHECK(dot.find("\"0\" -> \"m\"") != std::string::npos);
  CHECK(dot.find("\"m\" -> \"1\"") != std::string::npos);
  CHECK(dot.find("\"0\" -> \"1\"") == std::string::npos);  // covers only
  CHECK(dot.find("rankdir=BT") != std::string::npos);
}

TEST_CASE("downset and restriction helpers") {
  auto m3 = fixtures::m3().poset();
  CHECK(m3.is_downset(bit(0) | bit(1)));
  CHECK_FALSE(m3.is_downset(bit(1)));
  CHECK(m3.down_closure(bit(4)) == m3.carrier());
  auto restricted = m3.restrict(bit(0) | bit(1) | bit(2));
  CHECK(restricted.size() == 3);
  CHECK(restricted.le(0, 1));
  CHECK_FALSE(restricted.le(1, 2));
}
