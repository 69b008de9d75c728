#pragma once

#include <cstdint>
#include <vector>

#include "ebs/sets.hpp"

namespace ebs {

/// Reusable state for triple-product saturation over a fixed window shape.
///
/// Saturation works in two steps: intermediates u = x * y^adj live on an
/// extended (H+W-1)^2 grid anchored at the window corner, and finals u * z are
/// clipped to the window.  Both maps are translation-covariant in
/// window-relative coordinates, so one context serves every window of the
/// same shape.  The final-product table is precomputed when it fits a fixed
/// memory budget; otherwise products are computed on the fly.
class ClosureContext {
 public:
  ClosureContext(std::int64_t height, std::int64_t width);

  std::int64_t height() const { return height_; }
  std::int64_t width() const { return width_; }

  /// Least superset of the generators closed under the triple product, with
  /// results falling outside `workspace` discarded.  All generators must lie
  /// inside `workspace`, whose shape must match this context.
  ElementSet saturate(std::vector<Element> const& generators,
                      Window const& workspace) const;

 private:
  std::uint32_t inter(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t final_of(std::uint32_t u, std::uint32_t z) const;

  std::int64_t height_;
  std::int64_t width_;
  std::int64_t cells_;
  std::int64_t eside_;   // extended grid side: height + width - 1
  std::int64_t ecells_;
  std::vector<std::uint32_t> final_table_;  // ecells x cells, empty if over budget
};

/// One-shot closure; builds a context internally.
ElementSet closure(std::vector<Element> const& generators,
                   Window const& workspace);

struct PaddedClosure {
  Window workspace;
  ElementSet full;   // saturated set over the padded workspace
  ElementSet inner;  // restriction to the inner window
};

/// Saturates on a workspace extending `inner` to the right and downward by
/// pad_factor * max(inner dims); products never propagate left or up past the
/// generators' minima, so no padding is needed on those sides.
PaddedClosure padded_closure_full(std::vector<Element> const& generators,
                                  Window const& inner, std::int64_t pad_factor);
PaddedClosure padded_closure_full(std::vector<Element> const& generators,
                                  Window const& inner, std::int64_t pad_factor,
                                  ClosureContext const& context);

/// The spec'd operation: the padded saturation restricted to `inner`.
ElementSet padded_closure(std::vector<Element> const& generators,
                          Window const& inner, std::int64_t pad_factor);

/// Shape of the workspace used by padded closure (for pre-building contexts).
Window padded_workspace(Window const& inner, std::int64_t pad_factor);

}  // namespace ebs
