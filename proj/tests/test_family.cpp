#include <doctest.h>

#include "ebs/family.hpp"
#include "ebs/io.hpp"
#include "test_support.hpp"

using namespace ebs;

TEST_CASE("materialization examples") {
  Window const w7 = Window::make(0, 0, 7, 7);
  auto const lat = family_materialize(Lattice{{0, 0}, 3}, w7);
  std::vector<Element> expect;
  for (std::int64_t r : {0, 3, 6})
    for (std::int64_t c : {0, 3, 6}) expect.push_back({r, c});
  CHECK(lat.members() == expect);

  auto const single = family_materialize(Singleton{{2, 5}}, Window::make(0, 0, 10, 10));
  CHECK(single.members() == std::vector<Element>{{2, 5}});

  auto const corner = family_materialize(CornerIdeal{1, 2}, Window::make(0, 0, 4, 4));
  for (std::int64_t r = 0; r < 4; ++r) {
    for (std::int64_t c = 0; c < 4; ++c) {
      CHECK(corner.contains({r, c}) == (r >= 1 && c >= 2));
    }
  }

  // Empty intersection is allowed.
  CHECK(family_materialize(Singleton{{9, 9}}, Window::make(0, 0, 3, 3)).empty());
}

TEST_CASE("lattice union lays out the two-parameter diagram") {
  // Period 3, diagonal residues {0, 1}: rows through each residue carry the
  // residue's own columns only.
  auto const s = family_materialize(LatticeUnion{{0, 0}, 3, {0, 1}},
                                    Window::make(0, 0, 8, 8));
  CHECK(s.contains({0, 0}));
  CHECK(s.contains({0, 3}));
  CHECK(s.contains({1, 1}));
  CHECK(s.contains({1, 4}));
  CHECK(s.contains({4, 7}));
  CHECK(!s.contains({0, 1}));
  CHECK(!s.contains({1, 0}));
  CHECK(!s.contains({2, 2}));
  CHECK(!s.contains({1, 3}));
}

TEST_CASE("chain plus lattice materialization") {
  auto const s = family_materialize(ChainPlusLattice{{0, 0}, {1, 3}, 5, 2},
                                    Window::make(0, 0, 10, 10));
  CHECK(s.contains({0, 0}));
  CHECK(s.contains({1, 1}));
  CHECK(s.contains({3, 3}));
  CHECK(!s.contains({2, 2}));
  CHECK(!s.contains({4, 4}));
  CHECK(s.contains({5, 5}));
  CHECK(s.contains({5, 7}));
  CHECK(s.contains({9, 5}));
  CHECK(!s.contains({6, 5}));
  CHECK(!s.contains({5, 6}));
}

TEST_CASE("every materialized family is window-closed") {
  Window const w = Window::make(0, 0, 12, 12);
  std::vector<Family> families = {
      Singleton{{2, 3}},
      DiagonalChain{{0, 0}, {1, 4, 6}, false},
      DiagonalSubset{{1, 2}, {0, 2, 5, 6}},
      Lattice{{0, 0}, 2},
      Lattice{{1, 3}, 3},
      LatticeUnion{{0, 0}, 3, {0, 1}},
      LatticeUnion{{0, 0}, 4, {0, 2, 3}},
      ChainPlusLattice{{0, 0}, {}, 2, 2},
      ChainPlusLattice{{0, 0}, {1, 3}, 5, 2},
      ChainPlusLatticeUnion{{0, 0}, {1}, {3, 4}, 2},
      ChainPlusLatticeUnion{{0, 0}, {}, {2, 3, 4}, 3},
      CornerIdeal{2, 1},
  };
  for (Family const& f : families) {
    CAPTURE(family_summary(f));
    CHECK(is_window_semiheap(family_materialize(f, w)).ok);
  }
}

TEST_CASE("structural validation rejects malformed parameters") {
  CHECK_THROWS_AS(family_validate(Lattice{{0, 0}, 0}), std::domain_error);
  CHECK_THROWS_AS(family_validate(LatticeUnion{{0, 0}, 3, {0, 3}}), std::domain_error);
  CHECK_THROWS_AS(family_validate(LatticeUnion{{0, 0}, 3, {}}), std::domain_error);
  CHECK_THROWS_AS(family_validate(DiagonalChain{{0, 0}, {2, 1}, false}), std::domain_error);
  CHECK_THROWS_AS(family_validate(DiagonalChain{{0, 0}, {0, 1}, false}), std::domain_error);
  CHECK_THROWS_AS(family_validate(ChainPlusLattice{{0, 0}, {3}, 2, 1}), std::domain_error);
  CHECK_THROWS_AS(family_validate(ChainPlusLatticeUnion{{0, 0}, {}, {}, 1}), std::domain_error);
}

TEST_CASE("canonical forms") {
  CHECK(family_canonical(DiagonalChain{{1, 2}, {}, false}) == Family{Singleton{{1, 2}}});
  CHECK(family_canonical(CornerIdeal{1, 2}) == Family{Lattice{{1, 2}, 1}});
  CHECK(family_canonical(LatticeUnion{{0, 0}, 3, {0}}) == Family{Lattice{{0, 0}, 3}});
  CHECK(family_canonical(LatticeUnion{{0, 0}, 3, {1, 2}}) ==
        Family{LatticeUnion{{1, 1}, 3, {0, 1}}});
  CHECK(family_canonical(DiagonalSubset{{0, 0}, {2, 3, 7}}) ==
        Family{DiagonalChain{{2, 2}, {1, 5}, false}});
  CHECK(family_canonical(DiagonalSubset{{4, 1}, {3}}) == Family{Singleton{{7, 4}}});
  CHECK(family_canonical(ChainPlusLatticeUnion{{0, 0}, {1}, {2, 4}, 2}) ==
        Family{ChainPlusLattice{{0, 0}, {1}, 2, 2}});

  // Canonicalization preserves the member set.
  Window const w = Window::make(0, 0, 10, 10);
  std::vector<Family> families = {
      LatticeUnion{{0, 0}, 3, {1, 2}},
      DiagonalSubset{{0, 0}, {2, 3, 7}},
      ChainPlusLatticeUnion{{0, 0}, {1}, {2, 4}, 2},
      CornerIdeal{1, 2},
  };
  for (Family const& f : families) {
    CAPTURE(family_summary(f));
    CHECK(family_materialize(f, w) == family_materialize(family_canonical(f), w));
  }
}

TEST_CASE("family JSON round trip") {
  std::vector<Family> families = {
      Singleton{{5, 5}},
      DiagonalChain{{0, 0}, {1, 3}, true},
      ChainPlusLattice{{2, -1}, {1, 3}, 5, 2},
      ChainPlusLatticeUnion{{0, 0}, {1}, {3, 4}, 2},
      Lattice{{-2, 3}, 4},
      LatticeUnion{{0, 0}, 3, {0, 1}},
      DiagonalSubset{{1, 1}, {0, 2, 4}},
      CornerIdeal{-1, 2},
  };
  for (Family const& f : families) {
    nlohmann::json const j = f;
    CHECK(j.at("tag").get<std::string>() == family_tag(f));
    Family const back = j.get<Family>();
    CHECK(back == f);
  }
  // The wire format for singletons uses the field "p".
  Family const s = nlohmann::json::parse(R"({"tag":"Singleton","p":[5,5]})").get<Family>();
  CHECK(s == Family{Singleton{{5, 5}}});
  CHECK_THROWS(nlohmann::json::parse(R"({"tag":"Nope"})").get<Family>());
}
