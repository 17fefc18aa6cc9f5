#pragma once

#include <json.hpp>

#include "homcert/cochains.hpp"
#include "homcert/css.hpp"
#include "homcert/manifold.hpp"

namespace homcert {

using Json = nlohmann::ordered_json;

Json descriptor_json(const GroupDescriptor& g);
Json class_json(const ClassHandle& h);

/// {dimension, basis, values: [[label, [ints...]], ...]}; zero values are
/// omitted from the support list.
Json cochain_json(const Cochain& c, const std::vector<std::string>& labels);
Cochain cochain_from_json(const Json& j, const std::vector<std::string>& labels);

Json sc_verdict_json(const SCVerdictResult& v);
Json manifold_report_json(const SimplicialComplex& K, const ManifoldReport& report);
Json css_report_json(const SimplicialComplex& K, const CssReport& report);

}  // namespace homcert
