#include "grouploc/report.hpp"

#include <cstdint>
#include <sstream>

namespace grouploc {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

Json ring_json(const CoefficientRing& r) {
  Json j;
  j["name"] = r.name;
  j["all_primes_inverted"] = r.all;
  Json inv = Json::array();
  for (const auto& p : r.inverted) inv.push_back(to_string(p));
  j["inverted"] = std::move(inv);
  return j;
}

Json invariants_json(const RModuleInvariants& inv) {
  Json j;
  j["free_rank"] = inv.free_rank;
  Json t = Json::array();
  for (const auto& d : inv.torsion) t.push_back(to_string(d));
  j["torsion"] = std::move(t);
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["verdict"] = v.str();
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json presentation_json(const Presentation& p) {
  Json j;
  j["name"] = p.name;
  j["generators"] = p.gens;
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(word_to_string(r, p.gens));
  j["relators"] = std::move(rels);
  return j;
}

Json hom_json(const GroupHom& h) {
  Json j;
  j["source"] = h.source.name;
  j["target"] = h.target.name;
  Json imgs = Json::object();
  for (std::size_t i = 0; i < h.images.size(); ++i)
    imgs[h.source.gens[i]] = word_to_string(h.images[i], h.target.gens);
  j["images"] = std::move(imgs);
  j["status"] = h.status.str();
  j["provenance"] = provenance_name(h.provenance);
  Json exps = Json::array();
  for (const auto& e : h.provenance_exponents) exps.push_back(to_string(e));
  j["provenance_exponents"] = std::move(exps);
  return j;
}

Json h1_iso_json(const H1IsoReport& rep) {
  Json j;
  j["status"] = rep.verdict == IsoVerdict::ISO ? "ISO" : "NOT_ISO";
  j["well_defined"] = rep.well_defined;
  if (rep.well_defined) {
    j["kernel"] = invariants_json(rep.kernel);
    j["cokernel"] = invariants_json(rep.cokernel);
  }
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

Json cert_json(const TwoConnCertificate& c) {
  Json j;
  j["ring"] = c.ring.name;
  j["h1"] = h1_iso_json(c.h1);
  j["h2"] = c.h2 == H2Status::SurjectiveByConstruction ? "SURJECTIVE_BY_CONSTRUCTION"
                                                       : "UNKNOWN";
  j["reason"] = provenance_name(c.reason);
  if (!c.detail.empty()) j["detail"] = c.detail;
  j["two_connected"] = c.two_connected_over_R();
  return j;
}

Json tower_json(const ClosureTower& t) {
  Json j;
  j["ring"] = t.ring.name;
  j["depth"] = t.levels.empty() ? 0 : t.levels.size() - 1;
  Json levels = Json::array();
  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    Json l;
    l["index"] = i;
    l["presentation"] = presentation_json(t.levels[i]);
    l["h1_integral"] = invariants_json(h1_with_R(t.levels[i], make_ring({})));
    l["h1_localized"] = invariants_json(h1_with_R(t.levels[i], t.ring));
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  Json steps = Json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    Json s;
    s["from"] = i;
    s["to"] = i + 1;
    s["hom"] = hom_json(t.steps[i].hom);
    s["certificate"] = cert_json(t.steps[i].cert);
    s["adjoined_systems"] = t.steps[i].adjoined;
    s["killed_invisible"] = t.steps[i].killed;
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["log"] = t.log;
  return j;
}

Json stallings_json(const StallingsReport& rep) {
  Json j;
  j["injective"] = rep.injective;
  j["class_bound"] = rep.q;
  j["source_dims"] = rep.source_dims;
  j["target_dims"] = rep.target_dims;
  j["image_ranks"] = rep.image_ranks;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

Json run_report_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  Json inputs = Json::object();
  for (const auto& [name, hash] : r.inputs) inputs[name] = hash;
  j["inputs"] = std::move(inputs);
  j["results"] = r.results;
  j["warnings"] = r.warnings;
  j["exact_arithmetic"] = true;
  return j;
}

}  // namespace grouploc
