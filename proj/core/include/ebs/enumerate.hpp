#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ebs/classify.hpp"
#include "ebs/closure.hpp"
#include "ebs/sets.hpp"

namespace ebs {

/// Fast window-semiheap test over windows of at most 25 cells, backed by a
/// precomputed triple-product table.  A subset is encoded as a bitmask in
/// row-major cell order.
class SubsetChecker {
 public:
  explicit SubsetChecker(Window const& w);

  Window const& window() const { return window_; }
  int cells() const { return cells_; }
  bool closed(std::uint32_t mask) const;
  ElementSet to_set(std::uint32_t mask) const;

 private:
  Window window_;
  int cells_;
  std::vector<std::uint32_t> pairmask_;  // per ordered pair: required members
  std::vector<std::uint8_t> triple_;     // result cell per triple, 0xFF outside
};

/// Iterates all subsets of the window and yields exactly the window-semiheaps
/// (including the empty set), in ascending subset order; returns the count.
/// Requires height*width <= 25; throws std::range_error otherwise.
/// `jobs` > 1 parallelizes the sweep; visiting order stays deterministic.
std::uint64_t enumerate_window_semiheaps(
    Window const& w, int jobs = 1,
    std::function<void(ElementSet const&)> const& visit = {});

struct CrossValidateReport {
  Window window;
  std::int64_t pad_factor = 0;
  std::uint64_t semiheap_count = 0;  // includes the empty set
  std::uint64_t checked = 0;         // nonempty window-semiheaps validated
  std::uint64_t exact = 0;           // S equals its padded closure on w
  std::uint64_t extended = 0;        // S is a proper subset of it
  std::uint64_t failures = 0;        // closure did not classify to a family
  std::uint64_t excluded_case_labels = 0;  // closures landing on a case the
                                           // classification theorem rules out
  std::vector<std::pair<std::string, std::uint64_t>> case_counts;
  std::vector<std::string> failure_examples;  // first few, rendered

  bool ok() const { return failures == 0 && excluded_case_labels == 0; }
};

/// Desk-scale check of the classification theorem: for every nonempty
/// window-semiheap S of w, saturate S on the padded workspace, classify the
/// saturated set, and require an exactly re-materializing family.
CrossValidateReport cross_validate(Window const& w, std::int64_t pad_factor,
                                   int jobs = 1);

}  // namespace ebs
