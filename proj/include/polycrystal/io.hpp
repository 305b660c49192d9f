#pragma once

#include <string>

#include "polycrystal/realization.hpp"

namespace polycrystal {

// {"truncated", "support_bound", "zero_beyond", "forms": [{"const", "coeffs": {"k": v}, "lambda": {"i": v}}]}
std::string formset_to_json(const FormSet& fs);
FormSet formset_from_json(const std::string& text);

// {"cartan", "iota", "lambda", "complete", "depth_used", "count",
//  "elements": [{"k": x_k}], "by_weight": {"m_1,...,m_n": count}}
std::string realization_to_json(const RealizationResult& r);
RealizationResult realization_from_json(const std::string& text);

// {"pass", "conclusive", "violations": [{"form", "position"}]}
std::string positivity_to_json(const PositivityReport& r);
PositivityReport positivity_from_json(const std::string& text);

// {"ample", "conclusive", "witness": form | null}
std::string ample_to_json(const AmpleReport& r);
AmpleReport ample_from_json(const std::string& text);

}  // namespace polycrystal
