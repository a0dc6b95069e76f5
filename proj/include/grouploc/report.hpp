#pragma once
// JSON report builders. ordered_json everywhere so field order (and therefore byte
// output) is deterministic; big integers are serialized as decimal strings.
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grouploc/equations.hpp"
#include "grouploc/homology.hpp"
#include "grouploc/laurent.hpp"
#include "grouploc/magnus.hpp"
#include "grouploc/presentation.hpp"
#include "grouploc/ring.hpp"

namespace grouploc {

using Json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& data);

Json ring_json(const CoefficientRing& r);
Json invariants_json(const RModuleInvariants& inv);
Json verdict_json(const Verdict& v);
Json presentation_json(const Presentation& p);
Json hom_json(const GroupHom& h);
Json h1_iso_json(const H1IsoReport& rep);
Json cert_json(const TwoConnCertificate& c);
Json tower_json(const ClosureTower& t);
Json stallings_json(const StallingsReport& rep);

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // (name, fnv1a of content)
  Json results;
  std::vector<std::string> warnings;
};
Json run_report_json(const RunReport& r);  // appends exact_arithmetic: true

}  // namespace grouploc
