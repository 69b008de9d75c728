#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ebs {

/// An element a_{ij} of the extended bicyclic semigroup, identified with its
/// index pair (i, j) in Z^2.  i is the row index, j the column index.
struct Element {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(Element const&, Element const&) = default;
  friend auto operator<=>(Element const&, Element const&) = default;
};

/// Checked 64-bit addition/subtraction; throws std::range_error on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);

/// a_{ij} a_{pq} = a_{i+p-min(j,p), j+q-min(j,p)}.
Element product(Element a, Element b);

/// a_{ij}^* = a_{ji}.
Element adjoint(Element a);

/// True iff the element is one of the idempotents a_{ii}.
bool is_idempotent(Element a);

/// Idempotent order: a_{ii} <= a_{jj} iff j <= i.
/// Both arguments must be idempotent; throws std::domain_error otherwise.
bool idempotent_le(Element a, Element b);

/// Branches of the closed-form triple product a b^* c, in statement order.
enum class TripleCase : unsigned char { I, II, III, IV };

char const* to_string(TripleCase c);

struct TripleResult {
  Element value;
  TripleCase tag;
};

/// Closed-form triple product a b^* c.  The four branch conditions overlap on
/// ties; the lowest applicable tag is reported (the branch values agree).
TripleResult triple(Element a, Element b, Element c);

/// Reference route for triple(): product(product(a, adjoint(b)), c).
Element triple_oracle(Element a, Element b, Element c);

/// Translation (i, j) -> (i + da, j + db); a triple isomorphism.
Element translate(Element a, std::int64_t da, std::int64_t db);

struct DerivedElement {
  char const* label;  // "x1".."x5"
  Element value;
};

/// Elements forced into a subsemiheap containing a = a_{alpha,beta} and
/// g = a_{gamma,delta} with gamma >= alpha, delta >= beta (non-positive slope
/// pair).  x4 applies when gamma-alpha <= delta-beta, x5 when >=; on equality
/// both are returned (they coincide).  Throws std::domain_error if the
/// precondition fails.
std::vector<DerivedElement> derived_pair_neg(Element a, Element g);

/// Same for the positive-slope configuration gamma >= alpha, delta <= beta.
/// Always yields x1..x4.
std::vector<DerivedElement> derived_pair_pos(Element a, Element g);

/// Text form "(i,j)"; parse accepts optional whitespace around the tokens.
std::string to_string(Element a);
std::optional<Element> parse_element(std::string_view text);

}  // namespace ebs
