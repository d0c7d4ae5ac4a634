#pragma once

#include <json.hpp>

#include "fourierknot/braid.hpp"
#include "fourierknot/diagram.hpp"
#include "fourierknot/fourier.hpp"
#include "fourierknot/plat.hpp"
#include "fourierknot/rosette.hpp"

// JSON interchange formats. Braid words inside documents use the signed
// integer text form ("1 2 -1").

namespace fk {

using Json = nlohmann::ordered_json;

Json to_json(const Permutation& perm);

Json to_json(const RosetteBraid& rosette);
RosetteBraid rosette_from_json(const Json& j);

Json to_json(const ConjugationCertificate& cert);
ConjugationCertificate certificate_from_json(const Json& j);

Json to_json(const Plat& plat);
Plat plat_from_json(const Json& j);

Json to_json(const HildenMove& move);

Json to_json(const CheckerboardDiagram& diagram);
CheckerboardDiagram checkerboard_from_json(const Json& j);

Json to_json(const PDCode& pd);
PDCode pd_from_json(const Json& j);

Json to_json(const LaurentPoly& poly, const std::string& var = "A");

Json to_json(const FourierSeries& series);
FourierSeries series_from_json(const Json& j);
Json to_json(const FourierKnot& knot);
FourierKnot fourier_knot_from_json(const Json& j);

Json to_json(const CrossingRecord& crossing);
Json to_json(const ShadowReport& shadow);

/// Parses text and rewraps nlohmann errors as ErrorKind::Parse.
Json parse_json_text(const std::string& text, const std::string& stage);

}  // namespace fk
