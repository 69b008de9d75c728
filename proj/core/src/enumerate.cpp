#include "ebs/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace ebs {

namespace {
constexpr std::uint8_t kOutside = 0xFF;
constexpr int kMaxCells = 25;

bool occurring_code(std::string const& code) {
  return code == "1.1.1" || code == "1.1.2" || code == "1.1.3" || code == "3.3.3";
}

std::string label_code(std::string const& label) {
  if (label.starts_with("nonoccurring(")) {
    return label.substr(13, label.size() - 14);
  }
  if (label.starts_with("3.3.3")) return "3.3.3";
  return label;
}
}  // namespace

SubsetChecker::SubsetChecker(Window const& w)
    : window_(w), cells_(static_cast<int>(w.cells())) {
  if (w.cells() > kMaxCells) {
    throw std::range_error("ebs: enumeration window exceeds the 25-cell bound");
  }
  auto const n = static_cast<std::size_t>(cells_);
  triple_.assign(n * n * n, kOutside);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Element const t = triple(w.cell(x), w.cell(y), w.cell(z)).value;
        if (w.contains(t)) {
          triple_[(x * n + y) * n + z] = static_cast<std::uint8_t>(w.index(t));
        }
      }
    }
  }
  // For each unordered pair, the members any containing semiheap must have:
  // all in-window triple products drawn from the two cells.
  pairmask_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::uint32_t mask = 0;
      std::size_t const pick[2] = {a, b};
      for (std::size_t const x : pick) {
        for (std::size_t const y : pick) {
          for (std::size_t const z : pick) {
            std::uint8_t const r = triple_[(x * cells_ + y) * cells_ + z];
            if (r != kOutside) mask |= std::uint32_t{1} << r;
          }
        }
      }
      pairmask_[a * n + b] = mask;
    }
  }
}

bool SubsetChecker::closed(std::uint32_t mask) const {
  int members[kMaxCells];
  int m = 0;
  std::uint32_t rest = mask;
  while (rest != 0) {
    members[m++] = __builtin_ctz(rest);
    rest &= rest - 1;
  }
  auto const n = static_cast<std::size_t>(cells_);
  for (int ai = 0; ai < m; ++ai) {
    for (int bi = ai; bi < m; ++bi) {
      if (pairmask_[static_cast<std::size_t>(members[ai]) * n + members[bi]] & ~mask) {
        return false;
      }
    }
  }
  if (m < 3) return true;
  for (int xi = 0; xi < m; ++xi) {
    for (int yi = 0; yi < m; ++yi) {
      if (yi == xi) continue;
      std::size_t const base =
          (static_cast<std::size_t>(members[xi]) * n + members[yi]) * n;
      for (int zi = 0; zi < m; ++zi) {
        if (zi == xi || zi == yi) continue;
        std::uint8_t const r = triple_[base + members[zi]];
        if (r != kOutside && !((mask >> r) & 1u)) return false;
      }
    }
  }
  return true;
}

ElementSet SubsetChecker::to_set(std::uint32_t mask) const {
  ElementSet out(window_);
  std::uint32_t rest = mask;
  while (rest != 0) {
    out.set(static_cast<std::size_t>(__builtin_ctz(rest)));
    rest &= rest - 1;
  }
  return out;
}

namespace {

// Runs fn over every window-semiheap mask, chunked over `jobs` threads.
// Per-chunk results are merged in chunk order, so outcomes are deterministic.
template <typename PerChunk, typename Merge>
void sweep_masks(SubsetChecker const& checker, int jobs, PerChunk per_chunk,
                 Merge merge) {
  std::uint64_t const total = std::uint64_t{1} << checker.cells();
  jobs = std::max(1, jobs);
  std::uint64_t const nchunks = std::min<std::uint64_t>(
      total, static_cast<std::uint64_t>(jobs) * 16);
  std::uint64_t const chunk = (total + nchunks - 1) / nchunks;
  using Result = decltype(per_chunk(std::uint64_t{0}, std::uint64_t{0}));
  std::vector<Result> results(static_cast<std::size_t>(nchunks));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::uint64_t const c = next.fetch_add(1);
      if (c >= nchunks) return;
      results[static_cast<std::size_t>(c)] =
          per_chunk(c * chunk, std::min(total, (c + 1) * chunk));
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& r : results) merge(r);
}

}  // namespace

std::uint64_t enumerate_window_semiheaps(
    Window const& w, int jobs,
    std::function<void(ElementSet const&)> const& visit) {
  SubsetChecker const checker(w);
  std::uint64_t count = 0;
  sweep_masks(
      checker, jobs,
      [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint32_t> hits;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          if (checker.closed(static_cast<std::uint32_t>(mask))) {
            hits.push_back(static_cast<std::uint32_t>(mask));
          }
        }
        return hits;
      },
      [&](std::vector<std::uint32_t> const& hits) {
        count += hits.size();
        if (visit) {
          for (std::uint32_t const mask : hits) visit(checker.to_set(mask));
        }
      });
  return count;
}

CrossValidateReport cross_validate(Window const& w, std::int64_t pad_factor,
                                   int jobs) {
  SubsetChecker const checker(w);
  Window const ws = padded_workspace(w, pad_factor);
  ClosureContext const ctx(ws.height, ws.width);

  struct ChunkResult {
    std::uint64_t semiheaps = 0, exact = 0, extended = 0, failures = 0,
                  excluded = 0;
    std::map<std::string, std::uint64_t> cases;
    std::vector<std::string> examples;
  };

  CrossValidateReport report;
  report.window = w;
  report.pad_factor = pad_factor;
  std::map<std::string, std::uint64_t> cases;

  sweep_masks(
      checker, jobs,
      [&](std::uint64_t lo, std::uint64_t hi) {
        ChunkResult r;
        for (std::uint64_t m = lo; m < hi; ++m) {
          auto const mask = static_cast<std::uint32_t>(m);
          if (!checker.closed(mask)) continue;
          ++r.semiheaps;
          if (mask == 0) continue;
          ElementSet const s = checker.to_set(mask);
          ElementSet const full = ctx.saturate(s.members(), ws);
          ClassificationReport const rep = classify(full);
          ++r.cases[rep.case_label];
          if (!occurring_code(label_code(rep.case_label))) ++r.excluded;
          if (!rep.family) {
            ++r.failures;
            if (r.examples.size() < 8) {
              std::string ex = "generators";
              for (Element const& e : s.members()) ex += " " + to_string(e);
              ex += " -> " + rep.case_label;
              r.examples.push_back(std::move(ex));
            }
            continue;
          }
          if (full.restricted(w) == s) {
            ++r.exact;
          } else {
            ++r.extended;
          }
        }
        return r;
      },
      [&](ChunkResult const& r) {
        report.semiheap_count += r.semiheaps;
        report.exact += r.exact;
        report.extended += r.extended;
        report.failures += r.failures;
        report.excluded_case_labels += r.excluded;
        for (auto const& [label, n] : r.cases) cases[label] += n;
        for (auto const& ex : r.examples) {
          if (report.failure_examples.size() < 8) {
            report.failure_examples.push_back(ex);
          }
        }
      });

  report.checked = report.semiheap_count == 0 ? 0 : report.semiheap_count - 1;
  report.case_counts.assign(cases.begin(), cases.end());
  return report;
}

}  // namespace ebs
