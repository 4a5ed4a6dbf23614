// Stable JSON and text renderings of certificate reports.
#pragma once

#include <string>

#include <json.hpp>

#include "wilker/certify.hpp"

namespace wilker {

using Json = nlohmann::ordered_json;

/// [[ [pi_exp, "p/q"], ... ] per x-power], lowest power first.
Json poly_to_json(const Poly& p);
Json certificate_to_json(const PositivityCertificate& cert);

/// Field order is fixed; elapsed time is left out so output is byte-stable.
Json report_to_json(const CertificateReport& report);
std::string report_to_text(const CertificateReport& report);

/// Name of the bounding function ("m", "n", "p", "q").
std::string_view bound_function_name(TheoremId id);

}  // namespace wilker
