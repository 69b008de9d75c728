#include "ebs/sets.hpp"

#include <stdexcept>

namespace ebs {

namespace {
constexpr std::int64_t kMaxCells = std::int64_t{1} << 24;
}

Window Window::make(std::int64_t alpha, std::int64_t beta, std::int64_t height,
                    std::int64_t width) {
  if (height <= 0 || width <= 0) {
    throw std::domain_error("ebs: window dimensions must be positive");
  }
  if (height > kMaxCells / width) {
    throw std::domain_error("ebs: window too large");
  }
  checked_add(alpha, height);
  checked_add(beta, width);
  return {alpha, beta, height, width};
}

Window Window::translated(std::int64_t da, std::int64_t db) const {
  return Window::make(checked_add(alpha, da), checked_add(beta, db), height,
                      width);
}

ElementSet::ElementSet(Window w)
    : window_(Window::make(w.alpha, w.beta, w.height, w.width)),
      bits_((static_cast<std::size_t>(window_.cells()) + 63) / 64, 0) {}

ElementSet::ElementSet(Window w, std::vector<Element> const& members)
    : ElementSet(w) {
  for (Element const& e : members) insert(e);
}

void ElementSet::insert(Element e) {
  if (!window_.contains(e)) {
    throw std::domain_error("ebs: element " + to_string(e) +
                            " lies outside the window");
  }
  set(window_.index(e));
}

std::size_t ElementSet::size() const {
  std::size_t n = 0;
  for (auto const word : bits_) n += static_cast<std::size_t>(__builtin_popcountll(word));
  return n;
}

bool ElementSet::empty() const {
  for (auto const word : bits_) {
    if (word != 0) return false;
  }
  return true;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(size());
  auto const total = static_cast<std::size_t>(window_.cells());
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word != 0) {
      auto const bit = static_cast<std::size_t>(__builtin_ctzll(word));
      word &= word - 1;
      std::size_t const idx = (w << 6) + bit;
      if (idx < total) out.push_back(window_.cell(idx));
    }
  }
  return out;
}

std::optional<Element> ElementSet::first() const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] != 0) {
      return window_.cell((w << 6) + static_cast<std::size_t>(__builtin_ctzll(bits_[w])));
    }
  }
  return std::nullopt;
}

bool ElementSet::subset_of(ElementSet const& other) const {
  for (Element const& e : members()) {
    if (!other.contains(e)) return false;
  }
  return true;
}

ElementSet ElementSet::translated(std::int64_t da, std::int64_t db) const {
  ElementSet out(window_.translated(da, db));
  out.bits_ = bits_;
  return out;
}

ElementSet ElementSet::adjointed() const {
  ElementSet out(window_.transposed());
  for (Element const& e : members()) out.insert(adjoint(e));
  return out;
}

ElementSet ElementSet::restricted(Window const& w) const {
  ElementSet out(w);
  for (Element const& e : members()) {
    if (w.contains(e)) out.insert(e);
  }
  return out;
}

std::string ElementSet::render(std::string_view filled,
                               std::string_view hollow) const {
  std::string out;
  for (std::int64_t r = 0; r < window_.height; ++r) {
    for (std::int64_t c = 0; c < window_.width; ++c) {
      std::size_t const idx = static_cast<std::size_t>(r * window_.width + c);
      out += test(idx) ? filled : hollow;
    }
    out += '\n';
  }
  return out;
}

SemiheapCheck is_window_semiheap(ElementSet const& s) {
  auto const ms = s.members();
  for (Element const& x : ms) {
    for (Element const& y : ms) {
      for (Element const& z : ms) {
        Element const t = triple(x, y, z).value;
        if (s.window().contains(t) && !s.test(s.window().index(t))) {
          return {false, SemiheapViolation{x, y, z, t}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace ebs
