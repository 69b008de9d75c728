#include <doctest.h>

#include "ebs/sets.hpp"
#include "test_support.hpp"

using namespace ebs;

TEST_CASE("window geometry") {
  Window const w = Window::make(-2, 3, 4, 5);
  CHECK(w.cells() == 20);
  CHECK(w.contains({-2, 3}));
  CHECK(w.contains({1, 7}));
  CHECK(!w.contains({2, 3}));
  CHECK(!w.contains({-2, 8}));
  CHECK(w.index({-2, 3}) == 0);
  CHECK(w.index({-1, 3}) == 5);
  for (std::size_t idx = 0; idx < 20; ++idx) {
    CHECK(w.index(w.cell(idx)) == idx);
  }
  CHECK_THROWS_AS(Window::make(0, 0, 0, 3), std::domain_error);
  CHECK_THROWS_AS(Window::make(0, 0, 3, -1), std::domain_error);
}

TEST_CASE("element set membership and row-major iteration") {
  Window const w = Window::make(0, 0, 3, 3);
  ElementSet s(w, {{2, 1}, {0, 0}, {1, 2}});
  CHECK(s.size() == 3);
  CHECK(s.contains({0, 0}));
  CHECK(!s.contains({1, 1}));
  CHECK(!s.contains({5, 5}));  // outside the window
  auto const ms = s.members();
  REQUIRE(ms.size() == 3);
  CHECK(ms[0] == Element{0, 0});
  CHECK(ms[1] == Element{1, 2});
  CHECK(ms[2] == Element{2, 1});
  CHECK(s.first() == Element{0, 0});
  CHECK_THROWS_AS(s.insert({9, 9}), std::domain_error);
}

TEST_CASE("set translation and adjoint") {
  Window const w = Window::make(0, 0, 2, 3);
  ElementSet const s(w, {{0, 2}, {1, 0}});
  auto const t = s.translated(5, -1);
  CHECK(t.window() == Window::make(5, -1, 2, 3));
  CHECK(t.contains({5, 1}));
  CHECK(t.contains({6, -1}));
  auto const a = s.adjointed();
  CHECK(a.window() == Window::make(0, 0, 3, 2));
  CHECK(a.contains({2, 0}));
  CHECK(a.contains({0, 1}));
  CHECK(a.size() == 2);
  CHECK(a.adjointed() == s);
}

TEST_CASE("window-semiheap check with clip semantics") {
  Window const w = Window::make(0, 0, 4, 4);
  CHECK(is_window_semiheap(ElementSet(w, {{0, 0}, {1, 1}})).ok);
  CHECK(is_window_semiheap(ElementSet(w)).ok);  // vacuous

  auto const bad = is_window_semiheap(ElementSet(w, {{0, 0}, {0, 1}}));
  CHECK(!bad.ok);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->x == Element{0, 0});
  CHECK(bad.witness->y == Element{0, 1});
  CHECK(bad.witness->z == Element{0, 0});
  CHECK(bad.witness->result == Element{1, 0});
}

TEST_CASE("rendering") {
  Window const w = Window::make(0, 0, 2, 3);
  ElementSet const s(w, {{0, 0}, {1, 2}});
  CHECK(s.render("#", ".") == "#..\n..#\n");
  CHECK(s.render() == "●○○\n○○●\n");
}
