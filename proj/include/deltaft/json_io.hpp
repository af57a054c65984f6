#pragma once

#include <string>

#include "json.hpp"

#include "deltaft/braid.hpp"
#include "deltaft/certificate.hpp"
#include "deltaft/combing.hpp"
#include "deltaft/delta.hpp"
#include "deltaft/invariants.hpp"
#include "deltaft/lab.hpp"
#include "deltaft/laurent.hpp"

namespace deltaft {

/// Keys keep insertion order so output is stable and readable.
using Json = nlohmann::ordered_json;

/// Every reader throws ParseError on malformed or mistyped input.
Json parse_json_text(const std::string& text);

Json to_json(const CombedForm& form);
CombedForm combed_form_from_json(const Json& j);

Json to_json(const DeltaInsertion& move);
DeltaInsertion delta_insertion_from_json(const Json& j, int strands);

Json to_json(const DeltaScript& script);
DeltaScript delta_script_from_json(const Json& j);

Json to_json(const MarkedBraid& marked);
MarkedBraid marked_braid_from_json(const Json& j);

Json to_json(const AltSumReport& report);

/// var is "A" or "t"; `unit` 2 means exponents count half powers. Half
/// powers are flagged only when an odd half exponent actually occurs.
Json polynomial_to_json(const LaurentPoly& p, const std::string& var, int unit = 1);
Json to_json(const SeriesExpansion& s);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const GammaCertificate& cert);
GammaCertificate gamma_certificate_from_json(const Json& j);

Json to_json(const DerivedCertificate& cert);
DerivedCertificate derived_certificate_from_json(const Json& j);

Json to_json(const IdealProduct& ip);
IdealProduct ideal_product_from_json(const Json& j);

Json to_json(const std::vector<SignedTerm>& terms);

Json to_json(const SlideState& s);
SlideState slide_state_from_json(const Json& j);

Json to_json(const TheoremReport& report);

}  // namespace deltaft
