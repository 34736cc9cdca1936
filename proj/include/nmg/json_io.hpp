#pragma once

#include "json.hpp"
#include "nmg/fourier.hpp"
#include "nmg/hom.hpp"
#include "nmg/verify.hpp"

namespace nmg {

using json = nlohmann::ordered_json;

// Published schemas ----------------------------------------------------------
// AlgebraElement: {"group": "<expr>", "terms": [{"elem": <literal>, "re": f, "im": f}, ...]}
// Weight:         {"group": "<expr>", "values": {"<literal>": f, ...}}
//                 or {"group": "Z", "formula": "exp:<b>"|"absexp:<b>"}
// Homomorphism:   {"domain": "<expr>", "codomain": "<expr>",
//                  "images": {"<gen literal>": <terms array>, ...}}

json element_to_json(const AlgebraElement& f);
AlgebraElement element_from_json(const json& j, int group_cap = kDefaultGroupCap,
                                 double eps = kDefaultEps);

json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j, int group_cap = kDefaultGroupCap);

json hom_to_json(const AlgebraHomomorphism& phi);
AlgebraHomomorphism hom_from_json(const json& j, int group_cap = kDefaultGroupCap,
                                  double eps = kDefaultEps);

// Report serialization -------------------------------------------------------

json subgroup_to_json(const Subgroup& k);
json character_to_json(const Character& c);
json idempotent_to_json(const NormOneIdempotent& it);
json nm_classification_to_json(const NMClassification& cls);
json factorization_to_json(const Factorization& fac);
json nm_report_to_json(const NmHomReport& rep);
json standard_iso_report_to_json(const StandardIsoReport& rep);
json iso_theorem_report_to_json(const IsoTheoremReport& rep);
json check_results_to_json(const std::vector<CheckResult>& results);

// 6-significant-digit a+bi rendering for text mode.
std::string format_complex(cplx v);
std::string format_element(const AlgebraElement& f);

}  // namespace nmg
