#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ebs/family.hpp"
#include "ebs/sets.hpp"

namespace ebs {

/// A supremum over an infinite set, observed through a finite window.
/// is_inf means the occupancy pattern demonstrably continues past the
/// window's reliable horizon; otherwise `value` is the exact supremum.
struct SupValue {
  bool is_inf = false;
  std::int64_t value = 0;

  static SupValue finite(std::int64_t v) { return {false, v}; }
  static SupValue inf() { return {true, 0}; }
  friend bool operator==(SupValue const&, SupValue const&) = default;
};

struct Parameters {
  std::int64_t alpha0 = 0;  // min row over the set
  std::int64_t beta0 = 0;   // min column over the set
  SupValue beta_bar;        // sup of columns occupied on row alpha0
  SupValue alpha_bar;       // sup of rows occupied on column beta0
  // sup of k with (alpha0+k, beta0+k) in the set; nullopt when the diagonal
  // through (alpha0, beta0) is empty (possible only for degenerate inputs).
  std::optional<SupValue> gamma_bar;

  friend bool operator==(Parameters const&, Parameters const&) = default;
};

/// Extracts (alpha0, beta0, beta_bar, alpha_bar, gamma_bar) from a windowed
/// set.  A supremum is INF when the witnessing member sits in the trailing
/// quarter of its line and the line's occupancy has a periodic tail through
/// the witness (see the horizon rule in the implementation).
/// Throws std::domain_error on an empty set.
Parameters compute_parameters(ElementSet const& s);

struct ClassificationReport {
  std::optional<Parameters> parameters;  // nullopt for the empty set
  std::string case_label;  // "empty" | "1.1.1" | "1.1.2" | "1.1.3" |
                           // "3.3.3-(12)" | "3.3.3-(13)" | "nonoccurring(...)"
  std::optional<Family> family;  // present iff it re-materializes to the input
  std::vector<Element> witness;  // offending cells for diagnostic outcomes

  bool occurring() const { return family.has_value() || case_label == "empty"; }
};

/// Assigns the case label from the parameters, recovers the matching family,
/// and verifies that the family re-materializes to the input set exactly.
/// Inputs that fit none of the occurring cases (window-clipped fragments,
/// junk sets) get a "nonoccurring(...)" label and a witness instead.
ClassificationReport classify(ElementSet const& s);

}  // namespace ebs
