#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "firmcat/causal.hpp"
#include "firmcat/hilbfield.hpp"
#include "firmcat/lattice.hpp"
#include "firmcat/protocol.hpp"
#include "firmcat/subunits.hpp"

namespace firmcat::io {

using Json = nlohmann::ordered_json;

Json load_file(const std::string& path);

/// { "elements": [...], "leq": [[x,y],...], "top": x, "closure": {x: Cx} }
lattice::MeetSemilattice parse_semilattice(const Json& j);
lattice::ClosureOperator parse_closure(const Json& j);  // requires "closure"

/// { "points": [...], "chron": [[s,t],...], "causal": [[s,t],...] | "auto" }
causal::CausalSite parse_site(const Json& j);

/// Matrices are nested arrays of [re, im] pairs.
hilb::Mat parse_matrix(const Json& j);

/// A category file: base points, objects by dims, named morphisms, and a
/// list of subunits.
/// {
///   "points": [...],
///   "objects": { name: {point: dim, ...}, ... },
///   "morphisms": { name: { "dom": name, "cod": name,
///                          "mat": {point: [[[re,im],...],...], ...} } },
///   "subunits": [ { "carrier": [points], "scalars": {point: [re,im]} } ]
/// }
struct CategoryFile {
  hilb::BasePtr base;
  std::map<std::string, hilb::HField> objects;
  std::map<std::string, hilb::HMorphism> morphisms;
  std::vector<subunits::Subunit> subunits;
};
CategoryFile parse_category(const Json& j);

/// { "site": <site object or path>, "r": [...], "s": [...], "t": [...],
///   "qdim": int, "eta": "dual"|"normalized"|{point: matrix}, "eps": same }
/// A site given as a string is loaded relative to base_dir.
protocol::Scenario parse_scenario(const Json& j, const std::string& base_dir = ".");

}  // namespace firmcat::io
