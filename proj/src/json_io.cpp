#include "firmcat/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace firmcat::io {

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("cannot parse " + path + ": " + e.what());
  }
  return j;
}

namespace {

std::vector<std::pair<std::string, std::string>> parse_pairs(const Json& j,
                                                             const std::string& key) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!j.contains(key)) return out;
  for (const auto& pair : j.at(key)) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("\"" + key + "\" entries must be [x, y] pairs");
    out.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
  }
  return out;
}

std::vector<std::string> parse_names(const Json& j, const std::string& key) {
  std::vector<std::string> out;
  for (const auto& v : j.at(key)) out.push_back(v.get<std::string>());
  return out;
}

hilb::Complex parse_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex entries must be [re, im] pairs");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

lattice::MeetSemilattice parse_semilattice(const Json& j) {
  return lattice::MeetSemilattice(parse_names(j, "elements"), parse_pairs(j, "leq"),
                                  j.at("top").get<std::string>());
}

lattice::ClosureOperator parse_closure(const Json& j) {
  auto carrier = std::make_shared<lattice::MeetSemilattice>(parse_semilattice(j));
  if (!j.contains("closure")) throw std::invalid_argument("file has no \"closure\" map");
  lattice::ClosureOperator c;
  c.map.assign(carrier->size(), -1);
  for (const auto& [from, to] : j.at("closure").items())
    c.map.at(static_cast<std::size_t>(carrier->id_of(from))) =
        carrier->id_of(to.get<std::string>());
  for (std::size_t i = 0; i < c.map.size(); ++i)
    if (c.map[i] < 0)
      throw std::invalid_argument("closure map is not total: missing " +
                                  carrier->name(static_cast<lattice::ElementId>(i)));
  c.carrier = std::move(carrier);
  return c;
}

causal::CausalSite parse_site(const Json& j) {
  std::vector<std::string> points = parse_names(j, "points");
  auto chron = parse_pairs(j, "chron");
  if (j.contains("causal") && j.at("causal").is_string()) {
    if (j.at("causal").get<std::string>() != "auto")
      throw std::invalid_argument("\"causal\" must be a pair list or \"auto\"");
    return causal::CausalSite::with_auto_causal(std::move(points), chron);
  }
  return causal::CausalSite(std::move(points), chron, parse_pairs(j, "causal"));
}

hilb::Mat parse_matrix(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = 0;
  if (rows > 0) cols = static_cast<Eigen::Index>(j.at(0).size());
  hilb::Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j.at(static_cast<std::size_t>(i)).size()) != cols)
      throw std::invalid_argument("matrix rows have uneven length");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = parse_complex(j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k)));
  }
  return m;
}

CategoryFile parse_category(const Json& j) {
  CategoryFile file;
  file.base = hilb::make_base(parse_names(j, "points"));
  const auto& points = file.base->points;

  if (j.contains("objects")) {
    for (const auto& [name, dims] : j.at("objects").items()) {
      std::vector<Eigen::Index> d(points.size(), 0);
      for (const auto& [point, dim] : dims.items())
        d.at(static_cast<std::size_t>(file.base->id_of(point))) = dim.get<Eigen::Index>();
      file.objects.emplace(name, hilb::HField{file.base, std::move(d)});
    }
  }

  if (j.contains("morphisms")) {
    for (const auto& [name, mor] : j.at("morphisms").items()) {
      const auto& dom = file.objects.at(mor.at("dom").get<std::string>());
      const auto& cod = file.objects.at(mor.at("cod").get<std::string>());
      std::vector<hilb::Mat> fibers;
      for (std::size_t t = 0; t < points.size(); ++t) {
        const auto& mats = mor.at("mat");
        if (mats.contains(points[t]))
          fibers.push_back(parse_matrix(mats.at(points[t])));
        else
          fibers.push_back(hilb::Mat::Zero(cod.dim(t), dom.dim(t)));
      }
      file.morphisms.emplace(name, hilb::make_morphism(dom, cod, std::move(fibers)));
    }
  }

  if (j.contains("subunits")) {
    for (const auto& su : j.at("subunits")) {
      subunits::Subunit u = subunits::canonical_subunit(
          file.base, subunits::carrier_of_names(file.base, parse_names(su, "carrier")));
      if (su.contains("scalars"))
        for (const auto& [point, value] : su.at("scalars").items())
          u.scalars.at(static_cast<std::size_t>(file.base->id_of(point))) = parse_complex(value);
      file.subunits.push_back(std::move(u));
    }
  }
  return file;
}

protocol::Scenario parse_scenario(const Json& j, const std::string& base_dir) {
  Json site_json;
  if (j.at("site").is_string()) {
    const std::filesystem::path p =
        std::filesystem::path(base_dir) / j.at("site").get<std::string>();
    site_json = load_file(p.string());
  } else {
    site_json = j.at("site");
  }
  protocol::Scenario scn{parse_site(site_json)};
  scn.r = scn.site.mask_of(parse_names(j, "r"));
  scn.s = scn.site.mask_of(parse_names(j, "s"));
  scn.t = scn.site.mask_of(parse_names(j, "t"));
  scn.qdim = j.value("qdim", 2);

  auto parse_mode = [&](const std::string& key, protocol::PairMode& mode,
                        std::map<std::string, hilb::Mat>& custom) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (s == "dual")
        mode = protocol::PairMode::Dual;
      else if (s == "normalized")
        mode = protocol::PairMode::Normalized;
      else
        throw std::invalid_argument("\"" + key + "\" must be dual, normalized, or matrices");
    } else {
      mode = protocol::PairMode::Custom;
      for (const auto& [point, mat] : v.items()) custom[point] = parse_matrix(mat);
    }
  };
  parse_mode("eta", scn.eta_mode, scn.eta_custom);
  parse_mode("eps", scn.eps_mode, scn.eps_custom);
  return scn;
}

}  // namespace firmcat::io
