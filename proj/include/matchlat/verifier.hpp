#pragma once

#include <string>
#include <vector>

#include "matchlat/io.hpp"
#include "matchlat/polytope.hpp"

namespace matchlat {

enum class PropertyStatus { pass, fail, skipped };
std::string to_string(PropertyStatus status);

/// Outcome of one catalog property on one graph. A property whose hypothesis
/// does not hold for the graph passes with `applicable` false. A fail always
/// carries the violating cuts or matchings in `certificate`.
struct PropertyReport {
  std::string property;
  std::string graph;
  PropertyStatus status = PropertyStatus::pass;
  bool applicable = true;
  Json certificate = Json::object();
};

/// Catalog identifiers in reporting order: P-DIM, P-UNCROSS, P-BVNCONTRACT,
/// P-BRICKCOUNT, P-NEARBRICK, P-BARRIER, P-FDILIFT, P-EQUIV, P-TRIPLE,
/// P-LEMMA, P-LEMMA-COUNT, P-2X.
const std::vector<std::string>& property_ids();

/// Every quantifier runs over the full finite range (all canonical odd shores,
/// all matchings); nothing is sampled. Graphs above options.max_vertices yield
/// a skipped report. Throws PreconditionViolated("unknown_property") or
/// PreconditionViolated("not_matching_covered").
PropertyReport verify_property(const GraphFile& g, const std::string& property, ScanOptions options = {});

/// All catalog properties, sharing the enumeration work between them.
std::vector<PropertyReport> verify_all(const GraphFile& g, ScanOptions options = {});

Json report_json(const PropertyReport& report);

}  // namespace matchlat
