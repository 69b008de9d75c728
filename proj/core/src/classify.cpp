#include "ebs/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ebs {

namespace {

// Occupancy of one line (row alpha0, column beta0, or the diagonal), indexed
// by offset from the anchor up to the window edge.
struct Line {
  std::vector<char> occ;
  std::vector<std::int64_t> pts;

  void build(std::int64_t extent) { occ.assign(static_cast<std::size_t>(extent), 0); }
  void mark(std::int64_t off) {
    occ[static_cast<std::size_t>(off)] = 1;
    pts.push_back(off);
  }
};

// Horizon rule: the supremum is INF when the witnessing member lies in the
// trailing ceil(L/4) guard band and the occupancy has a periodic tail --
// some period P and split s with occ P-periodic on [s, L), at least one full
// wrap pair verified, and at least two occupied offsets in the tail.  A lone
// point in the band is never evidence of continuation.
SupValue line_sup(Line const& line, std::int64_t base) {
  auto const L = static_cast<std::int64_t>(line.occ.size());
  std::int64_t const wit = line.pts.back();
  std::int64_t const guard = (L + 3) / 4;
  if (wit < L - guard) return SupValue::finite(base + wit);
  for (std::int64_t period = 1; period < L; ++period) {
    std::int64_t split = 0;
    for (std::int64_t k = L - period - 1; k >= 0; --k) {
      if (line.occ[static_cast<std::size_t>(k)] !=
          line.occ[static_cast<std::size_t>(k + period)]) {
        split = k + 1;
        break;
      }
    }
    if (split > L - period - 1 || split > wit) continue;
    int tail_pts = 0;
    for (std::int64_t k = split; k < L; ++k) {
      tail_pts += line.occ[static_cast<std::size_t>(k)];
    }
    if (tail_pts >= 2) return SupValue::inf();
  }
  return SupValue::finite(base + wit);
}

struct Scan {
  std::int64_t alpha0 = 0, beta0 = 0;
  Line row, col, diag;
  Parameters params;
};

Scan scan_set(ElementSet const& s) {
  if (s.empty()) throw std::domain_error("ebs: cannot classify an empty set");
  Window const& w = s.window();
  Scan out;
  out.alpha0 = w.alpha + w.height;
  out.beta0 = w.beta + w.width;
  auto const ms = s.members();
  for (Element const& e : ms) {
    out.alpha0 = std::min(out.alpha0, e.i);
    out.beta0 = std::min(out.beta0, e.j);
  }
  std::int64_t const row_extent = w.beta + w.width - out.beta0;
  std::int64_t const col_extent = w.alpha + w.height - out.alpha0;
  out.row.build(row_extent);
  out.col.build(col_extent);
  out.diag.build(std::min(row_extent, col_extent));
  for (Element const& e : ms) {
    if (e.i == out.alpha0) out.row.mark(e.j - out.beta0);
    if (e.j == out.beta0) out.col.mark(e.i - out.alpha0);
    if (e.i - out.alpha0 == e.j - out.beta0 &&
        e.i - out.alpha0 < static_cast<std::int64_t>(out.diag.occ.size())) {
      out.diag.mark(e.i - out.alpha0);
    }
  }
  std::sort(out.row.pts.begin(), out.row.pts.end());
  std::sort(out.col.pts.begin(), out.col.pts.end());
  std::sort(out.diag.pts.begin(), out.diag.pts.end());

  out.params.alpha0 = out.alpha0;
  out.params.beta0 = out.beta0;
  out.params.beta_bar = line_sup(out.row, out.beta0);
  out.params.alpha_bar = line_sup(out.col, out.alpha0);
  if (!out.diag.pts.empty()) {
    out.params.gamma_bar = line_sup(out.diag, 0);
  }
  return out;
}

std::string case_code(Parameters const& p) {
  auto const digit = [](SupValue const& v, std::int64_t floor) {
    if (v.is_inf) return '3';
    return v.value == floor ? '1' : '2';
  };
  std::string code;
  code += digit(p.beta_bar, p.beta0);
  code += '.';
  code += digit(p.alpha_bar, p.alpha0);
  code += '.';
  if (!p.gamma_bar) {
    code += '?';
  } else {
    code += digit(*p.gamma_bar, 0);
  }
  return code;
}

std::int64_t gap_gcd(std::vector<std::int64_t> const& pts) {
  std::int64_t g = 0;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    g = std::gcd(g, pts[k] - pts[k - 1]);
  }
  return g;
}

ClassificationReport fail(Parameters const& params, std::string const& code,
                          std::vector<Element> witness) {
  return {params, "nonoccurring(" + code + ")", std::nullopt, std::move(witness)};
}

// Recovery for case 1.1.3: infinite diagonal chain, possibly followed by a
// lattice (or a union of lattices) hanging off the first ample diagonal row.
std::optional<Family> recover_chain_lattice(ElementSet const& s, Scan const& sc) {
  bool const has_offdiag = s.size() != sc.diag.pts.size();
  std::vector<std::int64_t> chain(sc.diag.pts.begin(), sc.diag.pts.end());
  if (chain.empty() || chain.front() != 0) return std::nullopt;
  chain.erase(chain.begin());
  Element const anchor{sc.alpha0, sc.beta0};
  if (!has_offdiag) {
    return Family{DiagonalChain{anchor, chain, true}};
  }
  // First diagonal point whose row has members to its right.
  std::optional<std::int64_t> start;
  std::vector<std::int64_t> row_pts;
  for (std::int64_t const d : sc.diag.pts) {
    row_pts.clear();
    std::int64_t const extent =
        s.window().beta + s.window().width - (sc.beta0 + d);
    for (std::int64_t c = 0; c < extent; ++c) {
      if (s.contains({sc.alpha0 + d, sc.beta0 + d + c})) row_pts.push_back(c);
    }
    if (row_pts.size() > 1) {
      start = d;
      break;
    }
  }
  if (!start || *start == 0) return std::nullopt;
  std::int64_t const sigma = gap_gcd(row_pts);
  if (sigma < 1) return std::nullopt;
  std::vector<std::int64_t> front_chain, anchors;
  for (std::int64_t const d : sc.diag.pts) {
    if (d > 0 && d < *start) front_chain.push_back(d);
    if (d >= *start && d < *start + sigma) anchors.push_back(d);
  }
  if (anchors.size() == 1) {
    return Family{ChainPlusLattice{anchor, front_chain, *start, sigma}};
  }
  return Family{ChainPlusLatticeUnion{anchor, front_chain, anchors, sigma}};
}

}  // namespace

Parameters compute_parameters(ElementSet const& s) { return scan_set(s).params; }

ClassificationReport classify(ElementSet const& s) {
  if (s.empty()) return {std::nullopt, "empty", std::nullopt, {}};
  Scan const sc = scan_set(s);
  Parameters const& p = sc.params;
  std::string const code = case_code(p);
  Element const anchor{sc.alpha0, sc.beta0};

  std::optional<Family> family;
  std::string label = code;
  if (code == "1.1.1") {
    family = Singleton{anchor};
  } else if (code == "1.1.2") {
    if (!sc.diag.pts.empty() && sc.diag.pts.front() == 0) {
      std::vector<std::int64_t> offsets(sc.diag.pts.begin() + 1, sc.diag.pts.end());
      family = DiagonalChain{anchor, offsets, false};
    }
  } else if (code == "1.1.3") {
    family = recover_chain_lattice(s, sc);
  } else if (code == "3.3.3") {
    // Period from the gaps on row alpha0, cross-checked against column beta0.
    std::int64_t const p_row = gap_gcd(sc.row.pts);
    std::int64_t const p_col = gap_gcd(sc.col.pts);
    if (p_row >= 1 && p_row == p_col && !sc.diag.pts.empty() &&
        sc.diag.pts.front() == 0) {
      std::vector<std::int64_t> q;
      for (std::int64_t const d : sc.diag.pts) {
        if (d < p_row) q.push_back(d);
      }
      if (q.size() == 1) {
        family = Lattice{anchor, p_row};
        label = "3.3.3-(13)";
      } else {
        family = LatticeUnion{anchor, p_row, q};
        label = "3.3.3-(12)";
      }
    }
  }

  if (!family) {
    // Witness: the extremal members that force the failing parameter digits.
    std::vector<Element> wit;
    if (!p.beta_bar.is_inf && p.beta_bar.value != p.beta0) {
      wit.push_back({p.alpha0, p.beta_bar.value});
    }
    if (!p.alpha_bar.is_inf && p.alpha_bar.value != p.alpha0) {
      wit.push_back({p.alpha_bar.value, p.beta0});
    }
    if (wit.empty() && !sc.diag.pts.empty()) {
      wit.push_back({p.alpha0 + sc.diag.pts.back(), p.beta0 + sc.diag.pts.back()});
    }
    return fail(p, code, std::move(wit));
  }

  ElementSet const rebuilt = family_materialize(*family, s.window());
  if (!(rebuilt == s)) {
    // First cell of the symmetric difference, in row-major order.
    std::vector<Element> wit;
    auto const total = static_cast<std::size_t>(s.window().cells());
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (s.test(idx) != rebuilt.test(idx)) {
        wit.push_back(s.window().cell(idx));
        break;
      }
    }
    return fail(p, code, std::move(wit));
  }
  return {p, label, family, {}};
}

}  // namespace ebs
