#include <doctest.h>

#include "ebs/classify.hpp"
#include "ebs/closure.hpp"
#include "test_support.hpp"

using namespace ebs;

TEST_CASE("parameter extraction examples") {
  auto const lat = family_materialize(Lattice{{0, 0}, 3}, Window::make(0, 0, 12, 12));
  Parameters const p1 = compute_parameters(lat);
  CHECK(p1.alpha0 == 0);
  CHECK(p1.beta0 == 0);
  CHECK(p1.beta_bar.is_inf);
  CHECK(p1.alpha_bar.is_inf);
  REQUIRE(p1.gamma_bar.has_value());
  CHECK(p1.gamma_bar->is_inf);

  ElementSet const single(Window::make(0, 0, 10, 10), {{2, 5}});
  Parameters const p2 = compute_parameters(single);
  CHECK(p2.alpha0 == 2);
  CHECK(p2.beta0 == 5);
  CHECK(p2.beta_bar == SupValue::finite(5));
  CHECK(p2.alpha_bar == SupValue::finite(2));
  CHECK(*p2.gamma_bar == SupValue::finite(0));

  ElementSet const chain(Window::make(0, 0, 10, 10), {{0, 0}, {1, 1}, {3, 3}});
  Parameters const p3 = compute_parameters(chain);
  CHECK(p3.beta_bar == SupValue::finite(0));
  CHECK(p3.alpha_bar == SupValue::finite(0));
  CHECK(*p3.gamma_bar == SupValue::finite(3));

  CHECK_THROWS_AS(compute_parameters(ElementSet(Window::make(0, 0, 3, 3))),
                  std::domain_error);
}

TEST_CASE("a lone member in the guard band is not horizon evidence") {
  ElementSet const s(Window::make(0, 0, 8, 8), {{0, 7}, {1, 0}});
  Parameters const p = compute_parameters(s);
  CHECK(p.beta_bar == SupValue::finite(7));
}

TEST_CASE("classify recovers the lattice from a padded closure") {
  auto const pc = padded_closure_full({{0, 0}, {0, 3}}, Window::make(0, 0, 8, 8), 3);
  auto const rep = classify(pc.full);
  CHECK(rep.case_label == "3.3.3-(13)");
  REQUIRE(rep.family.has_value());
  CHECK(*rep.family == Family{Lattice{{0, 0}, 3}});
}

TEST_CASE("classify examples across the occurring cases") {
  Window const w12 = Window::make(0, 0, 12, 12);

  auto const united = classify(family_materialize(LatticeUnion{{0, 0}, 3, {0, 1}}, w12));
  CHECK(united.case_label == "3.3.3-(12)");
  CHECK(*united.family == Family{LatticeUnion{{0, 0}, 3, {0, 1}}});

  auto const chain = classify(ElementSet(Window::make(0, 0, 10, 10),
                                         {{0, 0}, {1, 1}, {3, 3}}));
  CHECK(chain.case_label == "1.1.2");
  CHECK(*chain.family == Family{DiagonalChain{{0, 0}, {1, 3}, false}});

  auto const single = classify(ElementSet(Window::make(0, 0, 6, 6), {{4, 4}}));
  CHECK(single.case_label == "1.1.1");
  CHECK(*single.family == Family{Singleton{{4, 4}}});

  auto const cpl = classify(family_materialize(ChainPlusLattice{{0, 0}, {1}, 3, 2}, w12));
  CHECK(cpl.case_label == "1.1.3");
  CHECK(*cpl.family == Family{ChainPlusLattice{{0, 0}, {1}, 3, 2}});

  auto const cplu =
      classify(family_materialize(ChainPlusLatticeUnion{{0, 0}, {1}, {3, 4}, 2}, w12));
  CHECK(cplu.case_label == "1.1.3");
  CHECK(*cplu.family == Family{ChainPlusLatticeUnion{{0, 0}, {1}, {3, 4}, 2}});

  auto const empty = classify(ElementSet(w12));
  CHECK(empty.case_label == "empty");
  CHECK(!empty.family.has_value());
  CHECK(!empty.parameters.has_value());
}

TEST_CASE("window-clipped fragments get a diagnostic label") {
  // Window-closed under clipping, but not the restriction of any family.
  ElementSet const s(Window::make(0, 0, 2, 2), {{0, 1}, {1, 0}});
  REQUIRE(is_window_semiheap(s).ok);
  auto const rep = classify(s);
  CHECK(rep.case_label == "nonoccurring(2.2.?)");
  CHECK(!rep.family.has_value());
  CHECK(!rep.witness.empty());
}

TEST_CASE("classification is translation-invariant") {
  SplitMix64 rng(67);
  Window const inner = Window::make(0, 0, 5, 5);
  for (int t = 0; t < 25; ++t) {
    std::vector<Element> gens = {test::random_element(rng, 0, 4),
                                 test::random_element(rng, 0, 4)};
    auto const base = padded_closure_full(gens, inner, 3);
    auto const rep = classify(base.full);
    std::int64_t const da = rng.range(-15, 15), db = rng.range(-15, 15);
    auto const shifted = classify(base.full.translated(da, db));
    CHECK(shifted.case_label == rep.case_label);
    REQUIRE(rep.family.has_value());
    REQUIRE(shifted.family.has_value());
    auto const rebuilt =
        family_materialize(*shifted.family, base.full.window().translated(da, db));
    CHECK(rebuilt == base.full.translated(da, db));
  }
}

TEST_CASE("classification labels are adjoint-invariant") {
  SplitMix64 rng(71);
  Window const inner = Window::make(0, 0, 5, 5);
  for (int t = 0; t < 25; ++t) {
    std::vector<Element> gens = {test::random_element(rng, 0, 4),
                                 test::random_element(rng, 0, 4)};
    auto const base = padded_closure_full(gens, inner, 3);
    auto const rep = classify(base.full);
    auto const dual = classify(base.full.adjointed());
    CHECK(dual.case_label == rep.case_label);
  }
}

TEST_CASE("family round trip through materialize and classify") {
  std::vector<Family> grid = {
      Singleton{{0, 0}},
      DiagonalChain{{0, 0}, {2, 5}, false},
      Lattice{{0, 0}, 1},
      Lattice{{0, 0}, 4},
      LatticeUnion{{0, 0}, 3, {0, 2}},
      LatticeUnion{{0, 0}, 4, {0, 1, 3}},
      ChainPlusLattice{{0, 0}, {}, 1, 1},
      ChainPlusLattice{{0, 0}, {2, 4}, 6, 3},
      ChainPlusLatticeUnion{{0, 0}, {1}, {2, 3}, 2},
  };
  for (Family const& f : grid) {
    CAPTURE(family_summary(f));
    std::int64_t scale = 1, offset = 0;
    if (auto const* l = std::get_if<Lattice>(&f)) scale = l->period;
    if (auto const* l = std::get_if<LatticeUnion>(&f)) {
      scale = l->period;
      offset = l->offsets.back();
    }
    if (auto const* c = std::get_if<ChainPlusLattice>(&f)) {
      scale = c->sigma;
      offset = c->start;
    }
    if (auto const* c = std::get_if<ChainPlusLatticeUnion>(&f)) {
      scale = c->sigma;
      offset = c->anchors.back();
    }
    if (auto const* c = std::get_if<DiagonalChain>(&f)) offset = c->offsets.back();
    std::int64_t const side = 4 * scale + offset;
    auto const set = family_materialize(f, Window::make(0, 0, side, side));
    REQUIRE(is_window_semiheap(set).ok);
    auto const rep = classify(set);
    REQUIRE(rep.family.has_value());
    CHECK(*rep.family == family_canonical(f));
  }
}
