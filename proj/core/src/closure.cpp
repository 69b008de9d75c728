#include "ebs/closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace ebs {

namespace {
constexpr std::uint32_t kOut = 0xFFFFFFFFu;
constexpr std::int64_t kTableBudget = std::int64_t{1} << 24;  // entries

struct BitBuf {
  std::vector<std::uint64_t> words;
  explicit BitBuf(std::size_t n) : words((n + 63) / 64, 0) {}
  bool test_set(std::uint32_t idx) {
    auto& w = words[idx >> 6];
    std::uint64_t const m = std::uint64_t{1} << (idx & 63);
    if (w & m) return true;
    w |= m;
    return false;
  }
};
}  // namespace

ClosureContext::ClosureContext(std::int64_t height, std::int64_t width)
    : height_(height),
      width_(width),
      cells_(height * width),
      eside_(height + width - 1),
      ecells_(eside_ * eside_) {
  if (height <= 0 || width <= 0) {
    throw std::domain_error("ebs: closure context needs positive dimensions");
  }
  if (ecells_ <= kTableBudget / cells_) {
    final_table_.assign(static_cast<std::size_t>(ecells_ * cells_), kOut);
    for (std::int64_t u = 0; u < ecells_; ++u) {
      std::int64_t const ur = u / eside_, uc = u % eside_;
      auto* row = final_table_.data() + u * cells_;
      for (std::int64_t z = 0; z < cells_; ++z) {
        std::int64_t const zr = z / width_, zc = z % width_;
        std::int64_t const m = std::min(uc, zr);
        std::int64_t const fr = ur + zr - m;
        std::int64_t const fc = uc + zc - m;
        if (fr < height_ && fc < width_) {
          row[z] = static_cast<std::uint32_t>(fr * width_ + fc);
        }
      }
    }
  }
}

std::uint32_t ClosureContext::inter(std::uint32_t x, std::uint32_t y) const {
  std::int64_t const xr = x / width_, xc = x % width_;
  std::int64_t const yr = y / width_, yc = y % width_;
  std::int64_t const m = std::min(xc, yc);
  // x * adjoint(y) in window-relative coordinates; always on the extended grid.
  return static_cast<std::uint32_t>((xr + yc - m) * eside_ + (xc + yr - m));
}

std::uint32_t ClosureContext::final_of(std::uint32_t u, std::uint32_t z) const {
  if (!final_table_.empty()) {
    return final_table_[static_cast<std::size_t>(u) * cells_ + z];
  }
  std::int64_t const ur = u / eside_, uc = u % eside_;
  std::int64_t const zr = z / width_, zc = z % width_;
  std::int64_t const m = std::min(uc, zr);
  std::int64_t const fr = ur + zr - m;
  std::int64_t const fc = uc + zc - m;
  if (fr >= height_ || fc >= width_) return kOut;
  return static_cast<std::uint32_t>(fr * width_ + fc);
}

ElementSet ClosureContext::saturate(std::vector<Element> const& generators,
                                    Window const& workspace) const {
  if (workspace.height != height_ || workspace.width != width_) {
    throw std::domain_error("ebs: workspace shape does not match closure context");
  }
  ElementSet out(workspace);

  BitBuf in_s(static_cast<std::size_t>(cells_));
  BitBuf in_u(static_cast<std::size_t>(ecells_));
  std::vector<std::uint32_t> squeue;  // doubles as the member list
  std::vector<std::uint32_t> uqueue;  // doubles as the intermediate list
  squeue.reserve(static_cast<std::size_t>(cells_));

  for (Element const& g : generators) {
    if (!workspace.contains(g)) {
      throw std::domain_error("ebs: generator " + to_string(g) +
                              " lies outside the workspace");
    }
    auto const idx = static_cast<std::uint32_t>(workspace.index(g));
    if (!in_s.test_set(idx)) squeue.push_back(idx);
  }

  std::size_t sh = 0, uh = 0;
  while (sh < squeue.size() || uh < uqueue.size()) {
    if (sh < squeue.size()) {
      std::uint32_t const e = squeue[sh++];
      // New intermediates from e paired with every current member, both ways.
      std::size_t const nmem = squeue.size();
      for (std::size_t k = 0; k < nmem; ++k) {
        std::uint32_t const y = squeue[k];
        std::uint32_t const u1 = inter(e, y);
        if (!in_u.test_set(u1)) uqueue.push_back(u1);
        std::uint32_t const u2 = inter(y, e);
        if (!in_u.test_set(u2)) uqueue.push_back(u2);
      }
      // e as the third factor under every known intermediate.
      std::size_t const nint = uqueue.size();
      for (std::size_t k = 0; k < nint; ++k) {
        std::uint32_t const t = final_of(uqueue[k], e);
        if (t != kOut && !in_s.test_set(t)) squeue.push_back(t);
      }
      continue;
    }
    std::uint32_t const u = uqueue[uh++];
    std::size_t const nmem = squeue.size();
    for (std::size_t k = 0; k < nmem; ++k) {
      std::uint32_t const t = final_of(u, squeue[k]);
      if (t != kOut && !in_s.test_set(t)) squeue.push_back(t);
    }
  }

  std::sort(squeue.begin(), squeue.end());
  for (std::uint32_t const idx : squeue) out.set(idx);
  return out;
}

ElementSet closure(std::vector<Element> const& generators,
                   Window const& workspace) {
  return ClosureContext(workspace.height, workspace.width)
      .saturate(generators, workspace);
}

Window padded_workspace(Window const& inner, std::int64_t pad_factor) {
  if (pad_factor < 1) {
    throw std::domain_error("ebs: pad_factor must be positive");
  }
  std::int64_t const pad = pad_factor * std::max(inner.height, inner.width);
  return Window::make(inner.alpha, inner.beta, inner.height + pad,
                      inner.width + pad);
}

PaddedClosure padded_closure_full(std::vector<Element> const& generators,
                                  Window const& inner, std::int64_t pad_factor,
                                  ClosureContext const& context) {
  Window const ws = padded_workspace(inner, pad_factor);
  ElementSet full = context.saturate(generators, ws);
  ElementSet inner_set = full.restricted(inner);
  return {ws, std::move(full), std::move(inner_set)};
}

PaddedClosure padded_closure_full(std::vector<Element> const& generators,
                                  Window const& inner, std::int64_t pad_factor) {
  Window const ws = padded_workspace(inner, pad_factor);
  ClosureContext const ctx(ws.height, ws.width);
  return padded_closure_full(generators, inner, pad_factor, ctx);
}

ElementSet padded_closure(std::vector<Element> const& generators,
                          Window const& inner, std::int64_t pad_factor) {
  return padded_closure_full(generators, inner, pad_factor).inner;
}

}  // namespace ebs
