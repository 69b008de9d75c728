#pragma once

#include <json.hpp>

#include "ebs/classify.hpp"
#include "ebs/enumerate.hpp"
#include "ebs/family.hpp"
#include "ebs/sets.hpp"
#include "ebs/tro.hpp"

// JSON wire formats.  Elements are two-element integer arrays [i, j];
// families are tagged objects; suprema serialize as "INF" or an integer.

namespace ebs {

void to_json(nlohmann::json& j, Element const& e);
void from_json(nlohmann::json const& j, Element& e);

void to_json(nlohmann::json& j, Window const& w);
void from_json(nlohmann::json const& j, Window& w);

void to_json(nlohmann::json& j, ElementSet const& s);
void from_json(nlohmann::json const& j, ElementSet& s);

void to_json(nlohmann::json& j, Family const& f);
void from_json(nlohmann::json const& j, Family& f);

void to_json(nlohmann::json& j, SupValue const& v);
void from_json(nlohmann::json const& j, SupValue& v);

void to_json(nlohmann::json& j, Parameters const& p);
void from_json(nlohmann::json const& j, Parameters& p);

void to_json(nlohmann::json& j, ClassificationReport const& r);
void from_json(nlohmann::json const& j, ClassificationReport& r);

void to_json(nlohmann::json& j, CrossValidateReport const& r);

void to_json(nlohmann::json& j, OperatorCombo const& c);
void from_json(nlohmann::json const& j, OperatorCombo& c);

void to_json(nlohmann::json& j, ContractionReport const& r);

void to_json(nlohmann::json& j, IsometryCheck const& c);

}  // namespace ebs
