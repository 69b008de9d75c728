#include "ebs/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace ebs {

namespace {

bool ascending(std::vector<std::int64_t> const& v) {
  return std::is_sorted(v.begin(), v.end()) &&
         std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::string join(std::vector<std::int64_t> const& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out;
}

}  // namespace

std::string family_tag(Family const& f) {
  struct Visitor {
    std::string operator()(Singleton const&) const { return "Singleton"; }
    std::string operator()(DiagonalChain const&) const { return "DiagonalChain"; }
    std::string operator()(ChainPlusLattice const&) const { return "ChainPlusLattice"; }
    std::string operator()(ChainPlusLatticeUnion const&) const { return "ChainPlusLatticeUnion"; }
    std::string operator()(Lattice const&) const { return "Lattice"; }
    std::string operator()(LatticeUnion const&) const { return "LatticeUnion"; }
    std::string operator()(DiagonalSubset const&) const { return "DiagonalSubset"; }
    std::string operator()(CornerIdeal const&) const { return "CornerIdeal"; }
  };
  return std::visit(Visitor{}, f);
}

std::string family_summary(Family const& f) {
  struct Visitor {
    std::string operator()(Singleton const& s) const {
      return "Singleton " + to_string(s.p);
    }
    std::string operator()(DiagonalChain const& c) const {
      return "DiagonalChain at " + to_string(c.anchor) + " offsets [" +
             join(c.offsets) + "]" + (c.infinite ? " (continuing)" : "");
    }
    std::string operator()(ChainPlusLattice const& c) const {
      return "ChainPlusLattice at " + to_string(c.anchor) + " chain [" +
             join(c.chain) + "] start " + std::to_string(c.start) + " sigma " +
             std::to_string(c.sigma);
    }
    std::string operator()(ChainPlusLatticeUnion const& c) const {
      return "ChainPlusLatticeUnion at " + to_string(c.anchor) + " chain [" +
             join(c.chain) + "] anchors [" + join(c.anchors) + "] sigma " +
             std::to_string(c.sigma);
    }
    std::string operator()(Lattice const& l) const {
      return "Lattice p=" + std::to_string(l.period) + " at " + to_string(l.anchor);
    }
    std::string operator()(LatticeUnion const& l) const {
      return "LatticeUnion p=" + std::to_string(l.period) + " q=[" +
             join(l.offsets) + "] at " + to_string(l.anchor);
    }
    std::string operator()(DiagonalSubset const& d) const {
      return "DiagonalSubset at " + to_string(d.anchor) + " J=[" +
             join(d.offsets) + "]";
    }
    std::string operator()(CornerIdeal const& c) const {
      return "CornerIdeal i=" + std::to_string(c.i) + " j=" + std::to_string(c.j);
    }
  };
  return std::visit(Visitor{}, f);
}

void family_validate(Family const& f) {
  struct Visitor {
    void fail(std::string const& why) const {
      throw std::domain_error("ebs: invalid family: " + why);
    }
    void operator()(Singleton const&) const {}
    void operator()(DiagonalChain const& c) const {
      if (!ascending(c.offsets)) fail("chain offsets must be strictly ascending");
      if (!c.offsets.empty() && c.offsets.front() < 1) fail("chain offsets must be positive");
    }
    void operator()(ChainPlusLattice const& c) const {
      if (c.sigma < 1) fail("sigma must be positive");
      if (c.start < 1) fail("lattice start must be positive");
      if (!ascending(c.chain)) fail("chain offsets must be strictly ascending");
      if (!c.chain.empty() && (c.chain.front() < 1 || c.chain.back() >= c.start)) {
        fail("chain offsets must lie in [1, start)");
      }
    }
    void operator()(ChainPlusLatticeUnion const& c) const {
      if (c.sigma < 1) fail("sigma must be positive");
      if (c.anchors.empty()) fail("lattice anchor list must be nonempty");
      if (!ascending(c.anchors) || c.anchors.front() < 1) {
        fail("lattice anchors must be strictly ascending and positive");
      }
      if (!ascending(c.chain)) fail("chain offsets must be strictly ascending");
      if (!c.chain.empty() && (c.chain.front() < 1 || c.chain.back() >= c.anchors.front())) {
        fail("chain offsets must lie below the first lattice anchor");
      }
    }
    void operator()(Lattice const& l) const {
      if (l.period < 1) fail("lattice period must be positive");
    }
    void operator()(LatticeUnion const& l) const {
      if (l.period < 1) fail("lattice period must be positive");
      if (l.offsets.empty()) fail("diagonal offset list must be nonempty");
      if (!ascending(l.offsets) || l.offsets.front() < 0 ||
          l.offsets.back() >= l.period) {
        fail("diagonal offsets must be ascending within [0, period)");
      }
    }
    void operator()(DiagonalSubset const& d) const {
      if (!ascending(d.offsets)) fail("J must be strictly ascending");
      if (!d.offsets.empty() && d.offsets.front() < 0) fail("J must be non-negative");
    }
    void operator()(CornerIdeal const&) const {}
  };
  std::visit(Visitor{}, f);
}

bool family_contains(Family const& f, Element e) {
  struct Visitor {
    Element e;
    bool operator()(Singleton const& s) const { return e == s.p; }
    bool operator()(DiagonalChain const& c) const {
      if (e == c.anchor) return true;
      std::int64_t const r = e.i - c.anchor.i;
      if (r != e.j - c.anchor.j) return false;
      return std::binary_search(c.offsets.begin(), c.offsets.end(), r);
    }
    bool operator()(ChainPlusLattice const& c) const {
      if (e == c.anchor) return true;
      std::int64_t const r = e.i - c.anchor.i;
      std::int64_t const q = e.j - c.anchor.j;
      if (r == q && std::binary_search(c.chain.begin(), c.chain.end(), r)) return true;
      return r >= c.start && q >= c.start && (r - c.start) % c.sigma == 0 &&
             (q - c.start) % c.sigma == 0;
    }
    bool operator()(ChainPlusLatticeUnion const& c) const {
      if (e == c.anchor) return true;
      std::int64_t const r = e.i - c.anchor.i;
      std::int64_t const q = e.j - c.anchor.j;
      if (r == q && std::binary_search(c.chain.begin(), c.chain.end(), r)) return true;
      for (std::int64_t const t : c.anchors) {
        if (r >= t && q >= t && (r - t) % c.sigma == 0 && (q - t) % c.sigma == 0) {
          return true;
        }
      }
      return false;
    }
    bool operator()(Lattice const& l) const {
      std::int64_t const r = e.i - l.anchor.i;
      std::int64_t const q = e.j - l.anchor.j;
      return r >= 0 && q >= 0 && r % l.period == 0 && q % l.period == 0;
    }
    bool operator()(LatticeUnion const& l) const {
      std::int64_t const r = e.i - l.anchor.i;
      std::int64_t const q = e.j - l.anchor.j;
      if (r < 0 || q < 0 || r % l.period != q % l.period) return false;
      return std::binary_search(l.offsets.begin(), l.offsets.end(), r % l.period);
    }
    bool operator()(DiagonalSubset const& d) const {
      std::int64_t const r = e.i - d.anchor.i;
      if (r != e.j - d.anchor.j) return false;
      return std::binary_search(d.offsets.begin(), d.offsets.end(), r);
    }
    bool operator()(CornerIdeal const& c) const { return e.i >= c.i && e.j >= c.j; }
  };
  return std::visit(Visitor{e}, f);
}

ElementSet family_materialize(Family const& f, Window const& w) {
  family_validate(f);
  ElementSet out(w);
  auto const total = static_cast<std::size_t>(w.cells());
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (family_contains(f, w.cell(idx))) out.set(idx);
  }
  return out;
}

Family family_canonical(Family const& f) {
  family_validate(f);
  struct Visitor {
    Family operator()(Singleton const& s) const { return s; }
    Family operator()(DiagonalChain const& c) const {
      if (c.offsets.empty()) return Singleton{c.anchor};
      return c;
    }
    Family operator()(ChainPlusLattice const& c) const { return c; }
    Family operator()(ChainPlusLatticeUnion const& c) const {
      // Anchors sharing a residue mod sigma generate nested lattices; keep
      // the least anchor of each residue class.
      std::vector<std::int64_t> kept;
      for (std::int64_t const t : c.anchors) {
        bool subsumed = false;
        for (std::int64_t const u : kept) {
          if ((t - u) % c.sigma == 0) subsumed = true;
        }
        if (!subsumed) kept.push_back(t);
      }
      if (kept.size() == 1) {
        return ChainPlusLattice{c.anchor, c.chain, kept.front(), c.sigma};
      }
      return ChainPlusLatticeUnion{c.anchor, c.chain, kept, c.sigma};
    }
    Family operator()(Lattice const& l) const { return l; }
    Family operator()(LatticeUnion const& l) const {
      std::vector<std::int64_t> q = l.offsets;
      Element anchor = l.anchor;
      if (q.front() != 0) {
        std::int64_t const shift = q.front();
        anchor = translate(anchor, shift, shift);
        for (auto& v : q) v -= shift;
      }
      if (q.size() == 1) return Lattice{anchor, l.period};
      return LatticeUnion{anchor, l.period, q};
    }
    Family operator()(DiagonalSubset const& d) const {
      if (d.offsets.empty()) return d;  // the empty set has no smaller form
      std::int64_t const shift = d.offsets.front();
      Element const anchor = translate(d.anchor, shift, shift);
      std::vector<std::int64_t> rest;
      for (std::size_t k = 1; k < d.offsets.size(); ++k) {
        rest.push_back(d.offsets[k] - shift);
      }
      if (rest.empty()) return Singleton{anchor};
      return DiagonalChain{anchor, rest, false};
    }
    Family operator()(CornerIdeal const& c) const {
      return Lattice{Element{c.i, c.j}, 1};
    }
  };
  return std::visit(Visitor{}, f);
}

}  // namespace ebs
