#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "slat/classify.hpp"
#include "slat/errors.hpp"
#include "slat/generate.hpp"
#include "slat/iso.hpp"

using namespace slat;
using namespace fixtures;

TEST_CASE("subfitness") {
  CHECK(is_subfit(FiniteLattice::from_semilattice(b2())).ok);
  auto chain = is_subfit(FiniteLattice::from_semilattice(c3()));
  CHECK_FALSE(chain.ok);
  CHECK(chain.detail == "(m,0)");
  for (int atoms = 0; atoms <= 3; ++atoms)
    CHECK(is_subfit(boolean_frame(atoms).lattice()).ok);
  CHECK_THROWS_AS(is_subfit(FiniteLattice::from_semilattice(m3())), Error);
}

TEST_CASE("rather-below") {
  auto square = FiniteLattice::from_semilattice(b2());
  for (int c = 0; c < square.size(); ++c)
    for (int a = 0; a < square.size(); ++a)
      CHECK(rather_below(square, c, a) == square.le(c, a));  // Boolean collapse

  auto chain = FiniteLattice::from_semilattice(c3());
  int m = element(c3(), "m");
  CHECK(rather_below(chain, m, chain.top()));
  CHECK_FALSE(rather_below(chain, m, m));
}

TEST_CASE("regularity") {
  CHECK(is_regular_lattice(FiniteLattice::from_semilattice(b2())).ok);
  CHECK_FALSE(is_regular_lattice(FiniteLattice::from_semilattice(c3())).ok);

  auto product = lattice_product(FiniteLattice::from_semilattice(b2()),
                                 FiniteLattice::from_semilattice(c3()));
  auto verdict = is_regular_lattice(product);
  CHECK_FALSE(verdict.ok);  // the chain factor blocks regularity
  CHECK_FALSE(verdict.detail.empty());
  // Regular implies subfit on every bounded distributive instance.
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : exhaustive_instances(n)) {
      if (!a.has_top() || !is_distributive_semilattice(a)) continue;
      auto lat = FiniteLattice::from_semilattice(a);
      if (is_regular_lattice(lat)) CHECK(is_subfit(lat).ok);
    }
}

TEST_CASE("left adjoints of base embeddings") {
  auto square = b2();
  auto frame = FiniteFrame::from_lattice(FiniteLattice::from_semilattice(square));
  std::vector<int> identity{0, 1, 2, 3};
  auto adj = left_adjoint_embedding(square, frame, identity);
  REQUIRE(adj.has_value());
  CHECK(adj->left_exact);
  for (int i = 0; i < 4; ++i) CHECK(adj->map[i] == i);

  // The diamond into its dideal completion: the adjoint exists (the diamond
  // has a top) but fails to preserve meets of coatoms.
  auto diamond = m3();
  auto completion = dideal_completion(diamond);
  auto dadj = left_adjoint_embedding(diamond, completion.frame, completion.embedding);
  REQUIRE(dadj.has_value());
  CHECK_FALSE(dadj->left_exact);

  // An embedding whose image does not join-generate.
  std::vector<int> sparse{0, 0, 0, 3};
  CHECK_THROWS_AS(left_adjoint_embedding(square, frame, sparse), Error);
}

TEST_CASE("base-is-a-frame conditions") {
  auto square = a_extremal_conditions(b2());
  CHECK(square.agree());
  CHECK(square.value());

  auto chain = a_extremal_conditions(c3());
  CHECK(chain.agree());
  CHECK(chain.value());

  auto diamond = a_extremal_conditions(m3());
  CHECK(diamond.agree());
  CHECK_FALSE(diamond.value());

  CHECK_THROWS_AS(a_extremal_conditions(fence()), Error);  // unbounded

  CHECK(is_a_extremal(b2()).ok);
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : exhaustive_instances(n))
      if (a.has_top()) CHECK(is_a_extremal(a).ok);
}

TEST_CASE("macneille-is-a-frame conditions") {
  auto diamond = ma_frame_conditions(m3());
  CHECK(diamond.agree());
  CHECK_FALSE(diamond.value());
  CHECK(diamond.witness.find("not distributive") != std::string::npos);

  auto v = ma_frame_conditions(fence());
  CHECK(v.agree());
  CHECK(v.value());

  auto chain = ma_frame_conditions(c3());
  CHECK(chain.agree());
  CHECK(chain.value());

  // The annihilator <x,0> = {0,y,z} is the canonical non-normal witness.
  auto diamond_ms = m3();
  Mask ann = diamond_ms.annihilator(element(diamond_ms, "x"), element(diamond_ms, "0"));
  CHECK(ann == mask_of(diamond_ms, {"0", "y", "z"}));
  CHECK(normal_closure(diamond_ms, ann) != ann);

  for (int n = 1; n <= 7; ++n)
    for (const auto& a : exhaustive_instances(n)) CHECK(verify_ma_frame_theorem(a).ok);
}

TEST_CASE("subfit implies a frame completion") {
  CHECK(verify_subfit_implies_ma_frame(FiniteLattice::from_semilattice(b2())).ok);
  auto chain = verify_subfit_implies_ma_frame(FiniteLattice::from_semilattice(c3()));
  CHECK(chain.ok);
  CHECK(chain.detail.find("not applicable") != std::string::npos);
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : exhaustive_instances(n)) {
      if (!a.has_top() || !is_distributive_semilattice(a)) continue;
      CHECK(verify_subfit_implies_ma_frame(FiniteLattice::from_semilattice(a)).ok);
    }
}

TEST_CASE("extremal disconnectedness") {
  CHECK(is_extremally_disconnected(boolean_frame(3)).ok);
  auto chain = FiniteFrame::from_lattice(FiniteLattice::from_semilattice(c3()));
  CHECK(is_extremally_disconnected(chain).ok);  // m* = 0, m** = 1

  auto v = frame_v();
  auto ed = is_extremally_disconnected(v);
  CHECK_FALSE(ed.ok);
  CHECK(ed.detail == "{y}");

  // The three formulations agree on every small frame.
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : exhaustive_instances(n)) {
      if (!a.has_top() || !is_distributive_semilattice(a)) continue;
      CHECK(ed_formulations(FiniteFrame::from_lattice(FiniteLattice::from_semilattice(a)))
                .agree());
    }
  CHECK(ed_formulations(v).agree());
}

TEST_CASE("zero-dimensional facts") {
  for (int atoms = 0; atoms <= 3; ++atoms) {
    auto f = boolean_frame(atoms);
    auto cv = ed_conditions(f);
    CHECK(cv.agree());
    CHECK(cv.value());
    CHECK(verify_zero_dim_facts(f).ok);
  }
  auto prod = frame_product(boolean_frame(2), boolean_frame(2));
  CHECK(verify_zero_dim_facts(prod).ok);
  CHECK_THROWS_AS(verify_zero_dim_facts(frame_v()), Error);
}

TEST_CASE("classification report") {
  auto report = classification_report(m3(), "m3");
  auto text = report.to_text();
  CHECK(text.find("distributive: false (witness (x,y,z))") != std::string::npos);
  CHECK(text.find("dideals: 8") != std::string::npos);
  CHECK(text.find("normal-ideals: 5") != std::string::npos);
  CHECK(text.find("prime-filters: 0") != std::string::npos);
  auto ma_line = std::find_if(report.theorems.begin(), report.theorems.end(),
                              [](const auto& kv) { return kv.first == "ma-frame"; });
  REQUIRE(ma_line != report.theorems.end());
  CHECK(ma_line->second.find("agree") != std::string::npos);
  CHECK(ma_line->second.find("false") != std::string::npos);

  // Deterministic bytes for a fixed input.
  CHECK(report.to_json() == classification_report(m3(), "m3").to_json());
  CHECK(report.to_json().find("\"schema\":1") != std::string::npos);

  auto square = classification_report(b2(), "b2");
  auto sq_text = square.to_text();
  CHECK(sq_text.find("zero-dimensional: true") != std::string::npos);
  CHECK(sq_text.find("extremally-disconnected: true") != std::string::npos);
  CHECK(sq_text.find("a-extremal: agree; base-frame=true") != std::string::npos);
  CHECK(sq_text.find("excluded") != std::string::npos);

  auto chain = classification_report(c3(), "c3");
  CHECK(chain.to_text().find("subfit: false (witness (m,0))") != std::string::npos);
}
