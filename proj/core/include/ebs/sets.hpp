#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ebs/element.hpp"

namespace ebs {

/// An axis-aligned rectangle of lattice cells
/// {alpha .. alpha+height-1} x {beta .. beta+width-1}.
struct Window {
  std::int64_t alpha = 0;   // minimum row
  std::int64_t beta = 0;    // minimum column
  std::int64_t height = 1;  // > 0
  std::int64_t width = 1;   // > 0

  static Window make(std::int64_t alpha, std::int64_t beta, std::int64_t height,
                     std::int64_t width);

  std::int64_t cells() const { return height * width; }
  bool contains(Element e) const {
    return e.i >= alpha && e.i < alpha + height && e.j >= beta &&
           e.j < beta + width;
  }
  /// Row-major cell index; e must lie inside the window.
  std::size_t index(Element e) const {
    return static_cast<std::size_t>((e.i - alpha) * width + (e.j - beta));
  }
  Element cell(std::size_t idx) const {
    auto const k = static_cast<std::int64_t>(idx);
    return {alpha + k / width, beta + k % width};
  }
  Window translated(std::int64_t da, std::int64_t db) const;
  /// The window of the adjoint (transposed) set.
  Window transposed() const { return {beta, alpha, width, height}; }

  friend bool operator==(Window const&, Window const&) = default;
};

/// A membership set over a window, stored as a row-major bitset.
/// Iteration and serialization order is row-major ascending.
class ElementSet {
 public:
  ElementSet() : ElementSet(Window{}) {}
  explicit ElementSet(Window w);
  ElementSet(Window w, std::vector<Element> const& members);

  Window const& window() const { return window_; }
  bool contains(Element e) const {
    return window_.contains(e) && test(window_.index(e));
  }
  bool test(std::size_t idx) const {
    return (bits_[idx >> 6] >> (idx & 63)) & 1u;
  }
  /// Inserts an element; throws std::domain_error if outside the window.
  void insert(Element e);
  void set(std::size_t idx) { bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63); }
  std::size_t size() const;
  bool empty() const;
  std::vector<Element> members() const;
  /// First member in row-major order; nullopt when empty.
  std::optional<Element> first() const;

  bool subset_of(ElementSet const& other) const;
  ElementSet translated(std::int64_t da, std::int64_t db) const;
  /// Transposes members and window: the image of the set under the adjoint.
  ElementSet adjointed() const;
  /// Intersection with a sub-window (membership outside `w` is dropped).
  ElementSet restricted(Window const& w) const;

  /// Grid rendering, one row per line.  `filled`/`hollow` default to the
  /// diagram style; pass "#"/"." for plain ASCII.
  std::string render(std::string_view filled = "●",
                     std::string_view hollow = "○") const;

  friend bool operator==(ElementSet const& a, ElementSet const& b) {
    return a.window_ == b.window_ && a.bits_ == b.bits_;
  }

 private:
  Window window_;
  std::vector<std::uint64_t> bits_;
};

struct SemiheapViolation {
  Element x, y, z;    // the violating triple
  Element result;     // triple(x, y, z), inside the window but not in the set
};

struct SemiheapCheck {
  bool ok = true;
  std::optional<SemiheapViolation> witness;
  explicit operator bool() const { return ok; }
};

/// True iff every triple product of members that lands inside the window is
/// itself a member (clip semantics: products leaving the window are ignored).
/// On failure reports the first violating triple in row-major member order.
SemiheapCheck is_window_semiheap(ElementSet const& s);

}  // namespace ebs
