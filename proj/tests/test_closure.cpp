#include <doctest.h>

#include "ebs/closure.hpp"
#include "ebs/family.hpp"
#include "test_support.hpp"

using namespace ebs;
using test::naive_closure;

TEST_CASE("closure examples") {
  Window const w8 = Window::make(0, 0, 8, 8);

  CHECK(closure({{0, 0}}, w8).members() == std::vector<Element>{{0, 0}});

  // Two adjacent row points saturate the whole quadrant window.
  auto const full = closure({{0, 0}, {0, 1}}, w8);
  CHECK(full.size() == 64);

  // Distance-2 row points generate the period-2 lattice.
  auto const lat = closure({{0, 0}, {0, 2}}, w8);
  CHECK(lat == family_materialize(Lattice{{0, 0}, 2}, w8));

  // A chain-plus-lattice set is already closed.
  Window const w13 = Window::make(0, 0, 13, 13);
  auto fixture = family_materialize(ChainPlusLattice{{0, 0}, {1, 3}, 5, 2}, w13);
  CHECK(closure(fixture.members(), w13) == fixture);
}

TEST_CASE("closure preconditions") {
  Window const w = Window::make(0, 0, 4, 4);
  CHECK_THROWS_AS(closure({{5, 5}}, w), std::domain_error);
  ClosureContext const ctx(4, 4);
  CHECK_THROWS_AS(ctx.saturate({{0, 0}}, Window::make(0, 0, 5, 5)),
                  std::domain_error);
}

TEST_CASE("closure agrees with the naive reference") {
  SplitMix64 rng(47);
  for (int t = 0; t < 60; ++t) {
    Window const ws = Window::make(rng.range(-5, 5), rng.range(-5, 5), 9, 9);
    std::vector<Element> gens;
    int const n = static_cast<int>(rng.range(1, 3));
    for (int k = 0; k < n; ++k) {
      gens.push_back({ws.alpha + rng.range(0, 3), ws.beta + rng.range(0, 3)});
    }
    CAPTURE(t);
    CHECK(closure(gens, ws) == naive_closure(gens, ws));
  }
}

TEST_CASE("closure output is window-closed, monotone, idempotent") {
  SplitMix64 rng(53);
  for (int t = 0; t < 40; ++t) {
    Window const ws = Window::make(0, 0, 10, 10);
    std::vector<Element> gens;
    int const n = static_cast<int>(rng.range(1, 4));
    for (int k = 0; k < n; ++k) gens.push_back(test::random_element(rng, 0, 4));
    auto const c1 = closure(gens, ws);
    CHECK(is_window_semiheap(c1).ok);
    CHECK(closure(c1.members(), ws) == c1);  // idempotent
    auto more = gens;
    more.push_back(test::random_element(rng, 0, 4));
    CHECK(c1.subset_of(closure(more, ws)));  // monotone
  }
}

TEST_CASE("closure is translation-equivariant and adjoint-dual") {
  SplitMix64 rng(59);
  for (int t = 0; t < 40; ++t) {
    Window const ws = Window::make(rng.range(-8, 8), rng.range(-8, 8), 8, 11);
    std::vector<Element> gens;
    int const n = static_cast<int>(rng.range(1, 3));
    for (int k = 0; k < n; ++k) {
      gens.push_back({ws.alpha + rng.range(0, 3), ws.beta + rng.range(0, 3)});
    }
    auto const base = closure(gens, ws);

    std::int64_t const da = rng.range(-20, 20), db = rng.range(-20, 20);
    std::vector<Element> shifted;
    for (Element const& g : gens) shifted.push_back(translate(g, da, db));
    CHECK(closure(shifted, ws.translated(da, db)) == base.translated(da, db));

    std::vector<Element> adjointed;
    for (Element const& g : gens) adjointed.push_back(adjoint(g));
    CHECK(closure(adjointed, ws.transposed()) == base.adjointed());
  }
}

TEST_CASE("padded closure stabilizes for pad factors >= 3") {
  SplitMix64 rng(61);
  Window const inner = Window::make(0, 0, 6, 6);
  for (int t = 0; t < 30; ++t) {
    std::vector<Element> gens = {test::random_element(rng, 0, 5),
                                 test::random_element(rng, 0, 5)};
    auto const p3 = padded_closure(gens, inner, 3);
    CHECK(padded_closure(gens, inner, 4) == p3);
    CHECK(padded_closure(gens, inner, 5) == p3);
    CHECK(is_window_semiheap(p3).ok);
  }
}

TEST_CASE("padded closure examples") {
  Window const inner = Window::make(0, 0, 6, 6);
  CHECK(padded_closure({{0, 0}, {0, 3}}, inner, 3) ==
        family_materialize(Lattice{{0, 0}, 3}, inner));
  CHECK(padded_closure({{4, 4}}, inner, 3).members() ==
        std::vector<Element>{{4, 4}});
  auto const pc = padded_closure_full({{0, 2}, {2, 1}}, inner, 3);
  CHECK(is_window_semiheap(pc.full).ok);
  CHECK(pc.inner == pc.full.restricted(inner));
}
