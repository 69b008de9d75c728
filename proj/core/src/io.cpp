#include "ebs/io.hpp"

namespace ebs {

using nlohmann::json;

void to_json(json& j, Element const& e) { j = json::array({e.i, e.j}); }

void from_json(json const& j, Element& e) {
  if (!j.is_array() || j.size() != 2) {
    throw json::type_error::create(302, "element must be a two-element array", &j);
  }
  e.i = j[0].get<std::int64_t>();
  e.j = j[1].get<std::int64_t>();
}

void to_json(json& j, Window const& w) {
  j = {{"alpha", w.alpha}, {"beta", w.beta}, {"height", w.height}, {"width", w.width}};
}

void from_json(json const& j, Window& w) {
  w = Window::make(j.at("alpha").get<std::int64_t>(),
                   j.at("beta").get<std::int64_t>(),
                   j.at("height").get<std::int64_t>(),
                   j.at("width").get<std::int64_t>());
}

void to_json(json& j, ElementSet const& s) {
  j = {{"window", s.window()}, {"members", s.members()}};
}

void from_json(json const& j, ElementSet& s) {
  s = ElementSet(j.at("window").get<Window>(),
                 j.at("members").get<std::vector<Element>>());
}

void to_json(json& j, Family const& f) {
  struct Visitor {
    json& j;
    void operator()(Singleton const& s) const { j["p"] = s.p; }
    void operator()(DiagonalChain const& c) const {
      j["anchor"] = c.anchor;
      j["offsets"] = c.offsets;
      j["infinite"] = c.infinite;
    }
    void operator()(ChainPlusLattice const& c) const {
      j["anchor"] = c.anchor;
      j["chain"] = c.chain;
      j["start"] = c.start;
      j["sigma"] = c.sigma;
    }
    void operator()(ChainPlusLatticeUnion const& c) const {
      j["anchor"] = c.anchor;
      j["chain"] = c.chain;
      j["anchors"] = c.anchors;
      j["sigma"] = c.sigma;
    }
    void operator()(Lattice const& l) const {
      j["anchor"] = l.anchor;
      j["period"] = l.period;
    }
    void operator()(LatticeUnion const& l) const {
      j["anchor"] = l.anchor;
      j["period"] = l.period;
      j["offsets"] = l.offsets;
    }
    void operator()(DiagonalSubset const& d) const {
      j["anchor"] = d.anchor;
      j["J"] = d.offsets;
    }
    void operator()(CornerIdeal const& c) const {
      j["i"] = c.i;
      j["j"] = c.j;
    }
  };
  j = json{{"tag", family_tag(f)}};
  std::visit(Visitor{j}, f);
}

void from_json(json const& j, Family& f) {
  std::string const tag = j.at("tag").get<std::string>();
  if (tag == "Singleton") {
    f = Singleton{j.at("p").get<Element>()};
  } else if (tag == "DiagonalChain") {
    f = DiagonalChain{j.at("anchor").get<Element>(),
                      j.at("offsets").get<std::vector<std::int64_t>>(),
                      j.value("infinite", false)};
  } else if (tag == "ChainPlusLattice") {
    f = ChainPlusLattice{j.at("anchor").get<Element>(),
                         j.value("chain", std::vector<std::int64_t>{}),
                         j.at("start").get<std::int64_t>(),
                         j.at("sigma").get<std::int64_t>()};
  } else if (tag == "ChainPlusLatticeUnion") {
    f = ChainPlusLatticeUnion{j.at("anchor").get<Element>(),
                              j.value("chain", std::vector<std::int64_t>{}),
                              j.at("anchors").get<std::vector<std::int64_t>>(),
                              j.at("sigma").get<std::int64_t>()};
  } else if (tag == "Lattice") {
    f = Lattice{j.at("anchor").get<Element>(), j.at("period").get<std::int64_t>()};
  } else if (tag == "LatticeUnion") {
    f = LatticeUnion{j.at("anchor").get<Element>(),
                     j.at("period").get<std::int64_t>(),
                     j.at("offsets").get<std::vector<std::int64_t>>()};
  } else if (tag == "DiagonalSubset") {
    f = DiagonalSubset{j.at("anchor").get<Element>(),
                       j.at("J").get<std::vector<std::int64_t>>()};
  } else if (tag == "CornerIdeal") {
    f = CornerIdeal{j.at("i").get<std::int64_t>(), j.at("j").get<std::int64_t>()};
  } else {
    throw json::type_error::create(302, "unknown family tag: " + tag, &j);
  }
  family_validate(f);
}

void to_json(json& j, SupValue const& v) {
  if (v.is_inf) {
    j = "INF";
  } else {
    j = v.value;
  }
}

void from_json(json const& j, SupValue& v) {
  if (j.is_string() && j.get<std::string>() == "INF") {
    v = SupValue::inf();
  } else {
    v = SupValue::finite(j.get<std::int64_t>());
  }
}

void to_json(json& j, Parameters const& p) {
  j = {{"alpha0", p.alpha0},
       {"beta0", p.beta0},
       {"beta_bar", p.beta_bar},
       {"alpha_bar", p.alpha_bar}};
  if (p.gamma_bar) {
    j["gamma_bar"] = *p.gamma_bar;
  } else {
    j["gamma_bar"] = nullptr;
  }
}

void from_json(json const& j, Parameters& p) {
  p.alpha0 = j.at("alpha0").get<std::int64_t>();
  p.beta0 = j.at("beta0").get<std::int64_t>();
  p.beta_bar = j.at("beta_bar").get<SupValue>();
  p.alpha_bar = j.at("alpha_bar").get<SupValue>();
  auto const& g = j.at("gamma_bar");
  p.gamma_bar = g.is_null() ? std::nullopt : std::optional(g.get<SupValue>());
}

void to_json(json& j, ClassificationReport const& r) {
  j = json{{"case", r.case_label}};
  j["parameters"] = r.parameters ? json(*r.parameters) : json(nullptr);
  j["family"] = r.family ? json(*r.family) : json(nullptr);
  j["witness"] = r.witness.empty() ? json(nullptr) : json(r.witness);
}

void from_json(json const& j, ClassificationReport& r) {
  r.case_label = j.at("case").get<std::string>();
  auto const& p = j.at("parameters");
  r.parameters = p.is_null() ? std::nullopt : std::optional(p.get<Parameters>());
  auto const& f = j.at("family");
  r.family = f.is_null() ? std::nullopt : std::optional(f.get<Family>());
  auto const& w = j.at("witness");
  r.witness = w.is_null() ? std::vector<Element>{} : w.get<std::vector<Element>>();
}

void to_json(json& j, CrossValidateReport const& r) {
  j = {{"window", r.window},
       {"pad_factor", r.pad_factor},
       {"semiheap_count", r.semiheap_count},
       {"checked", r.checked},
       {"exact", r.exact},
       {"extended", r.extended},
       {"failures", r.failures},
       {"excluded_case_labels", r.excluded_case_labels}};
  json cases = json::object();
  for (auto const& [label, n] : r.case_counts) cases[label] = n;
  j["cases"] = cases;
  j["failure_examples"] = r.failure_examples;
}

void to_json(json& j, OperatorCombo const& c) {
  j = json::array();
  for (OperatorTerm const& t : c.terms) {
    j.push_back({{"re", t.coefficient.real()},
                 {"im", t.coefficient.imag()},
                 {"element", t.element}});
  }
}

void from_json(json const& j, OperatorCombo& c) {
  c.terms.clear();
  for (auto const& t : j) {
    c.terms.push_back({{t.at("re").get<double>(), t.at("im").get<double>()},
                       t.at("element").get<Element>()});
  }
}

void to_json(json& j, ContractionReport const& r) {
  j = {{"trials", r.trials}, {"passes", r.passes}, {"max_ratio", r.max_ratio}};
  json failures = json::array();
  for (ContractionTrial const& f : r.failures) {
    failures.push_back({{"combo", f.combo}, {"a", f.a}, {"b", f.b}});
  }
  j["failures"] = failures;
  j["naive_identity_deviations"] = r.naive_identity_deviations;
}

void to_json(json& j, IsometryCheck const& c) {
  j = {{"safe_columns", c.safe_columns}, {"exact", c.exact}};
}

}  // namespace ebs
