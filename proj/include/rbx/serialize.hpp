#ifndef RBX_SERIALIZE_HPP
#define RBX_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "rbx/identity_engine.hpp"
#include "rbx/mzv_calculus.hpp"
#include "rbx/numeric_eval.hpp"

namespace rbx
{

using Json = nlohmann::json;

// Compact dump with sorted keys; floating-point numbers as %.17g, non-finite
// ones as null.
std::string canonical_dump(const Json &j);

Json composition_json(const Composition &c);
Composition composition_from_json(const Json &j);

// {"terms":[{"coef":"-1/4","monomial":[[4]]}, ...],"source":"..."}
Json relation_json(const Relation &r);
Relation relation_from_json(const Json &j);

// [{"coef":"2","composition":[2,2]}, ...]
Json combo_json(const ZetaCombo &z);
ZetaCombo combo_from_json(const Json &j);

// [{"coef":"1 - q","word":["q[2]","q[3]"]}, ...]
Json lincomb_json(const LinComb &c);
LinComb lincomb_from_json(const Json &j);

Json eval_json(const EvalResult &r, const EvalConfig &cfg);
Json report_json(const IdentityReport &r);

} // namespace rbx

#endif
