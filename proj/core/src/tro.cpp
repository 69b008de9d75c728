#include "ebs/tro.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "ebs/rng.hpp"

namespace ebs {

namespace {

constexpr double kContractionTol = 1e-6;
constexpr std::uint64_t kStartVectorSeed = 0x5DEECE66DULL;

double norm2(std::vector<std::complex<double>> const& v) {
  double s = 0.0;
  for (auto const& c : v) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace

SparseOperator rep_matrix(Element x, std::int64_t n) {
  BasisIndexer const ix{n};
  if (!ix.on_grid(x)) {
    throw std::range_error("ebs: element " + to_string(x) +
                           " lies outside the basis grid");
  }
  SparseOperator out{ix, {}};
  for (std::int64_t p = -n; p <= n; ++p) {
    if (p < x.j) continue;
    std::int64_t const target_row = x.i + p - x.j;
    if (target_row < -n || target_row > n) continue;
    for (std::int64_t q = -n; q <= n; ++q) {
      out.entries.emplace_back(
          static_cast<std::uint32_t>(ix.index({target_row, q})),
          static_cast<std::uint32_t>(ix.index({p, q})));
    }
  }
  return out;
}

void SparseMatrix::apply(std::complex<double> const* x,
                         std::complex<double>* y) const {
  std::fill(y, y + dim, std::complex<double>{});
  for (std::int64_t c = 0; c < dim; ++c) {
    auto const xc = x[c];
    for (std::uint32_t k = col_ptr[c]; k < col_ptr[c + 1]; ++k) {
      y[row_idx[k]] += values[k] * xc;
    }
  }
}

void SparseMatrix::apply_adjoint(std::complex<double> const* x,
                                 std::complex<double>* y) const {
  for (std::int64_t c = 0; c < dim; ++c) {
    std::complex<double> acc{};
    for (std::uint32_t k = col_ptr[c]; k < col_ptr[c + 1]; ++k) {
      acc += std::conj(values[k]) * x[row_idx[k]];
    }
    y[c] = acc;
  }
}

SparseMatrix assemble(OperatorCombo const& combo, std::int64_t n) {
  for (std::size_t a = 0; a < combo.terms.size(); ++a) {
    for (std::size_t b = a + 1; b < combo.terms.size(); ++b) {
      if (combo.terms[a].element == combo.terms[b].element) {
        throw std::domain_error("ebs: duplicate element " +
                                to_string(combo.terms[a].element) +
                                " in operator combination");
      }
    }
  }
  BasisIndexer const ix{n};
  struct Triplet {
    std::uint32_t source, target;
    std::complex<double> value;
  };
  std::vector<Triplet> triplets;
  for (OperatorTerm const& term : combo.terms) {
    SparseOperator const op = rep_matrix(term.element, n);
    for (auto const& [target, source] : op.entries) {
      triplets.push_back({source, target, term.coefficient});
    }
  }
  std::sort(triplets.begin(), triplets.end(), [](Triplet const& a, Triplet const& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });

  SparseMatrix m;
  m.dim = ix.dim();
  m.col_ptr.assign(static_cast<std::size_t>(m.dim) + 1, 0);
  std::size_t k = 0;
  for (std::int64_t c = 0; c < m.dim; ++c) {
    m.col_ptr[static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(m.row_idx.size());
    while (k < triplets.size() && triplets[k].source == static_cast<std::uint32_t>(c)) {
      std::complex<double> v = triplets[k].value;
      std::uint32_t const t = triplets[k].target;
      ++k;
      while (k < triplets.size() && triplets[k].source == static_cast<std::uint32_t>(c) &&
             triplets[k].target == t) {
        v += triplets[k].value;
        ++k;
      }
      if (v != std::complex<double>{}) {
        m.row_idx.push_back(t);
        m.values.push_back(v);
      }
    }
  }
  m.col_ptr[static_cast<std::size_t>(m.dim)] = static_cast<std::uint32_t>(m.row_idx.size());
  return m;
}

OpNormResult op_norm(SparseMatrix const& m, double tol, int max_iter) {
  if (m.zero()) return {0.0, 0, true};
  auto const dim = static_cast<std::size_t>(m.dim);
  std::vector<std::complex<double>> x(dim), y(dim), z(dim);
  SplitMix64 rng(kStartVectorSeed);
  for (auto& c : x) c = {2.0 * rng.unit() - 1.0, 2.0 * rng.unit() - 1.0};
  double nx = norm2(x);
  for (auto& c : x) c /= nx;

  double prev_sigma = 0.0, prev_delta = 0.0;
  int stall = 0;
  for (int it = 1; it <= max_iter; ++it) {
    m.apply(x.data(), y.data());
    double const sigma = norm2(y);  // x is unit, so this is the Rayleigh estimate
    if (sigma == 0.0) return {0.0, it, true};
    if (it >= 2) {
      double const delta = std::abs(sigma - prev_sigma);
      bool small = false;
      if (delta <= 8.0 * std::numeric_limits<double>::epsilon() * sigma) {
        small = true;  // machine floor, covers tied singular values
      } else if (prev_delta > 0.0) {
        double const rho = delta / prev_delta;
        if (rho < 0.9999) {
          double const remaining = delta * (1.0 + rho / (1.0 - rho));
          small = remaining <= tol * sigma;
        }
      }
      stall = small ? stall + 1 : 0;
      if (stall >= 2) return {sigma, it, true};
      prev_delta = delta;
    }
    prev_sigma = sigma;
    m.apply_adjoint(y.data(), z.data());
    double const nz = norm2(z);
    if (nz == 0.0) return {sigma, it, true};
    for (std::size_t c = 0; c < dim; ++c) x[c] = z[c] / nz;
  }
  return {prev_sigma, max_iter, false};
}

MembershipPredicate membership(Family const& f) {
  return [f](Element e) { return family_contains(f, e); };
}

MembershipPredicate membership(ElementSet const& s) {
  return [s](Element e) { return s.contains(e); };
}

OperatorCombo phi0(OperatorCombo const& combo, MembershipPredicate const& member) {
  OperatorCombo out;
  for (OperatorTerm const& t : combo.terms) {
    if (member(t.element)) out.terms.push_back(t);
  }
  return out;
}

namespace {

enum class StepKind { Mapped, MathKill, Truncated };

struct StepResult {
  StepKind kind;
  Element target;
};

StepResult apply_step(Element x, Element e, BasisIndexer const& ix) {
  if (e.i < x.j) return {StepKind::MathKill, {}};
  Element const t{x.i + e.i - x.j, e.j};
  if (!ix.on_grid(t)) return {StepKind::Truncated, {}};
  return {StepKind::Mapped, t};
}

}  // namespace

IsometryCheck verify_partial_isometry(Element x, std::int64_t n) {
  if (std::abs(x.i) > n / 2 || std::abs(x.j) > n / 2) {
    throw std::domain_error("ebs: element must lie in the grid interior");
  }
  BasisIndexer const ix{n};
  Element const xadj = adjoint(x);
  IsometryCheck out;
  for (std::int64_t idx = 0; idx < ix.dim(); ++idx) {
    Element const e = ix.label(static_cast<std::size_t>(idx));
    StepResult const s1 = apply_step(x, e, ix);
    if (s1.kind == StepKind::MathKill) continue;  // both sides are zero
    if (s1.kind == StepKind::Truncated) continue;  // not a safe column
    StepResult const s2 = apply_step(xadj, s1.target, ix);
    if (s2.kind == StepKind::Truncated) continue;
    StepResult const s3 = s2.kind == StepKind::Mapped
                              ? apply_step(x, s2.target, ix)
                              : StepResult{StepKind::MathKill, {}};
    if (s3.kind == StepKind::Truncated) continue;
    ++out.safe_columns;
    bool const match = s3.kind == StepKind::Mapped && s3.target == s1.target;
    if (!match) out.exact = false;
  }
  return out;
}

ContractionTrial contraction_trial(OperatorCombo const& combo,
                                   MembershipPredicate const& member,
                                   std::int64_t n) {
  ContractionTrial out;
  out.combo = combo;
  SparseMatrix const full = assemble(combo, n);
  SparseMatrix const kept = assemble(phi0(combo, member), n);
  OpNormResult const na = op_norm(full);
  OpNormResult const nb = op_norm(kept);
  out.a = na.value;
  out.b = nb.value;
  out.norms_converged = na.converged && nb.converged;
  out.pass = out.b <= out.a * (1.0 + kContractionTol);

  // Column-wise sum of |lambda_i|^2 over terms acting on that column: the
  // value the proof's orthogonality step would assign to a^2.
  BasisIndexer const ix{n};
  std::vector<double> colsum(static_cast<std::size_t>(ix.dim()), 0.0);
  for (OperatorTerm const& t : combo.terms) {
    double const w = std::norm(t.coefficient);
    for (std::int64_t p = std::max(t.element.j, -n); p <= n; ++p) {
      std::int64_t const tr = t.element.i + p - t.element.j;
      if (tr < -n || tr > n) continue;
      for (std::int64_t q = -n; q <= n; ++q) {
        colsum[ix.index({p, q})] += w;
      }
    }
  }
  double peak = 0.0;
  for (double const s : colsum) peak = std::max(peak, s);
  out.naive_a = std::sqrt(peak);
  out.naive_identity_holds =
      std::abs(out.naive_a - out.a) <=
      1e-6 * std::max({out.naive_a, out.a, 1e-12});
  return out;
}

ContractionReport verify_contraction(MembershipPredicate const& member,
                                     int trials, std::int64_t n,
                                     std::uint64_t seed, int jobs) {
  if (trials < 1) throw std::domain_error("ebs: trials must be >= 1");
  std::vector<ContractionTrial> results(static_cast<std::size_t>(trials));
  auto run_trial = [&](int t) {
    SplitMix64 rng(seed, static_cast<std::uint64_t>(t));
    std::int64_t const half = n / 2;
    auto const count = static_cast<int>(rng.range(1, 8));
    OperatorCombo combo;
    while (static_cast<int>(combo.terms.size()) < count) {
      Element const e{rng.range(-half, half), rng.range(-half, half)};
      bool dup = false;
      for (OperatorTerm const& term : combo.terms) {
        if (term.element == e) dup = true;
      }
      if (dup) continue;
      std::complex<double> const lambda{2.0 * rng.unit() - 1.0,
                                        2.0 * rng.unit() - 1.0};
      combo.terms.push_back({lambda, e});
    }
    results[static_cast<std::size_t>(t)] = contraction_trial(combo, member, n);
  };

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (;;) {
        int const t = next.fetch_add(1);
        if (t >= trials) return;
        run_trial(t);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ContractionReport report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    ContractionTrial const& r = results[static_cast<std::size_t>(t)];
    if (r.pass) {
      ++report.passes;
    } else {
      report.failures.push_back(r);
    }
    if (r.a > 0.0) report.max_ratio = std::max(report.max_ratio, r.b / r.a);
    if (!r.naive_identity_holds) report.naive_identity_deviations.push_back(t);
  }
  return report;
}

}  // namespace ebs
