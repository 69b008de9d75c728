#include "ebs/element.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace ebs {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::range_error("ebs: integer overflow in index arithmetic");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::range_error("ebs: integer overflow in index arithmetic");
  }
  return r;
}

Element product(Element a, Element b) {
  std::int64_t const m = std::min(a.j, b.i);
  return {checked_sub(checked_add(a.i, b.i), m),
          checked_sub(checked_add(a.j, b.j), m)};
}

Element adjoint(Element a) { return {a.j, a.i}; }

bool is_idempotent(Element a) { return a.i == a.j; }

bool idempotent_le(Element a, Element b) {
  if (!is_idempotent(a) || !is_idempotent(b)) {
    throw std::domain_error("ebs: idempotent_le requires idempotent arguments");
  }
  return b.j <= a.i;
}

char const* to_string(TripleCase c) {
  switch (c) {
    case TripleCase::I: return "I";
    case TripleCase::II: return "II";
    case TripleCase::III: return "III";
    case TripleCase::IV: return "IV";
  }
  return "?";
}

TripleResult triple(Element a, Element b, Element c) {
  std::int64_t const i = a.i, j = a.j, p = b.i, q = b.j, r = c.i, s = c.j;
  if (q <= j) {
    // Pivot column of the first composition: p + j - q.
    std::int64_t const pivot = checked_add(p, checked_sub(j, q));
    if (r <= pivot) {
      return {{i, checked_add(s, checked_sub(pivot, r))}, TripleCase::I};
    }
    return {{checked_add(i, checked_sub(r, pivot)), s}, TripleCase::II};
  }
  std::int64_t const lift = checked_add(i, checked_sub(q, j));
  if (r >= p) {
    return {{checked_add(lift, checked_sub(r, p)), s}, TripleCase::III};
  }
  return {{lift, checked_add(s, checked_sub(p, r))}, TripleCase::IV};
}

Element triple_oracle(Element a, Element b, Element c) {
  return product(product(a, adjoint(b)), c);
}

Element translate(Element a, std::int64_t da, std::int64_t db) {
  return {checked_add(a.i, da), checked_add(a.j, db)};
}

std::vector<DerivedElement> derived_pair_neg(Element a, Element g) {
  if (g.i < a.i || g.j < a.j) {
    throw std::domain_error("ebs: derived_pair_neg requires g.i >= a.i, g.j >= a.j");
  }
  std::int64_t const h = checked_sub(g.i, a.i);  // gamma - alpha
  std::int64_t const b = checked_sub(g.j, a.j);  // delta - beta
  std::vector<DerivedElement> out;
  out.push_back({"x1", {checked_add(a.i, b), checked_add(a.j, h)}});
  out.push_back({"x2", {checked_add(a.i, b), g.j}});
  out.push_back({"x3", {g.i, checked_add(a.j, h)}});
  if (h <= b) {
    out.push_back({"x4", {g.i, checked_add(g.j, checked_sub(b, h))}});
  }
  if (h >= b) {
    out.push_back({"x5", {checked_add(g.i, checked_sub(h, b)), g.j}});
  }
  return out;
}

std::vector<DerivedElement> derived_pair_pos(Element a, Element g) {
  if (g.i < a.i || g.j > a.j) {
    throw std::domain_error("ebs: derived_pair_pos requires g.i >= a.i, g.j <= a.j");
  }
  std::int64_t const h = checked_sub(g.i, a.i);  // gamma - alpha
  std::int64_t const b = checked_sub(a.j, g.j);  // beta - delta
  return {
      {"x1", {a.i, checked_add(a.j, checked_add(h, b))}},
      {"x2", {checked_add(g.i, b), a.j}},
      {"x3", {g.i, checked_add(a.j, h)}},
      {"x4", {checked_add(g.i, checked_add(b, h)), g.j}},
  };
}

std::string to_string(Element a) {
  return "(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
}

namespace {

void skip_ws(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
}

bool consume(std::string_view& s, char c) {
  skip_ws(s);
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

std::optional<std::int64_t> parse_int(std::string_view& s) {
  skip_ws(s);
  std::size_t len = 0;
  if (len < s.size() && (s[len] == '+' || s[len] == '-')) ++len;
  while (len < s.size() && std::isdigit(static_cast<unsigned char>(s[len]))) ++len;
  std::int64_t value = 0;
  auto const [ptr, ec] = std::from_chars(s.data(), s.data() + len, value);
  if (ec != std::errc() || ptr != s.data() + len || len == 0) return std::nullopt;
  s.remove_prefix(len);
  return value;
}

}  // namespace

std::optional<Element> parse_element(std::string_view text) {
  if (!consume(text, '(')) return std::nullopt;
  auto const i = parse_int(text);
  if (!i || !consume(text, ',')) return std::nullopt;
  auto const j = parse_int(text);
  if (!j || !consume(text, ')')) return std::nullopt;
  skip_ws(text);
  if (!text.empty()) return std::nullopt;
  return Element{*i, *j};
}

}  // namespace ebs
