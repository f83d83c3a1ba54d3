#include "firmcat/causal.hpp"

#include <stdexcept>

namespace firmcat::causal {

namespace {

Mask bit(int p) { return Mask{1} << p; }

std::vector<Mask> rows_from_pairs(const CausalSite& site, std::size_t n,
                                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Mask> rows(n, 0);
  for (const auto& [s, t] : pairs)
    rows[static_cast<std::size_t>(site.id_of(s))] |= bit(site.id_of(t));
  return rows;
}

}  // namespace

CausalSite::CausalSite(std::vector<std::string> points,
                       const std::vector<std::pair<std::string, std::string>>& chron,
                       const std::vector<std::pair<std::string, std::string>>& causal)
    : points_(std::move(points)) {
  if (points_.size() > 64) throw std::invalid_argument("causal sites limited to 64 points");
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j])
        throw std::invalid_argument("duplicate point id: " + points_[i]);
  chron_ = rows_from_pairs(*this, points_.size(), chron);
  causal_ = rows_from_pairs(*this, points_.size(), causal);
}

CausalSite CausalSite::with_auto_causal(
    std::vector<std::string> points,
    const std::vector<std::pair<std::string, std::string>>& chron) {
  CausalSite site(std::move(points), chron, {});
  for (std::size_t s = 0; s < site.size(); ++s)
    site.causal_[s] = site.chron_[s] | bit(static_cast<int>(s));
  return site;
}

int CausalSite::id_of(const std::string& name) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown point id: " + name);
}

bool CausalSite::chron(int s, int t) const {
  return (chron_.at(static_cast<std::size_t>(s)) & bit(t)) != 0;
}

bool CausalSite::causal(int s, int t) const {
  return (causal_.at(static_cast<std::size_t>(s)) & bit(t)) != 0;
}

Mask CausalSite::all_points() const {
  return points_.empty() ? 0 : (points_.size() == 64 ? ~Mask{0} : bit(static_cast<int>(points_.size())) - 1);
}

Mask CausalSite::mask_of(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& n : names) m |= bit(id_of(n));
  return m;
}

std::vector<std::string> CausalSite::names_of(Mask m) const {
  std::vector<std::string> out;
  for (std::size_t p = 0; p < points_.size(); ++p)
    if (m & bit(static_cast<int>(p))) out.push_back(points_[p]);
  return out;
}

LawReport validate_site(const CausalSite& site, bool strict) {
  LawReport r;
  r.suite = "site-axioms";
  r.cases_run = site.size();
  r.note_law("chron irreflexive");
  r.note_law("chron transitive");
  r.note_law("causal reflexive");
  r.note_law("causal transitive");
  r.note_law("chron within causal");
  if (strict) {
    r.note_law("push-up");
    r.note_law("push-down");
  }
  const int n = static_cast<int>(site.size());
  for (int s = 0; s < n; ++s) {
    if (site.chron(s, s)) r.record("chron irreflexive", false, site.name(s));
    if (!site.causal(s, s)) r.record("causal reflexive", false, site.name(s));
    if ((site.chron_row(s) & ~site.causal_row(s)) != 0)
      r.record("chron within causal", false, site.name(s));
    for (int t = 0; t < n; ++t) {
      if (site.chron(s, t) && (site.chron_row(t) & ~site.chron_row(s)) != 0)
        r.record("chron transitive", false, site.name(s) + " ≪ " + site.name(t));
      if (site.causal(s, t) && (site.causal_row(t) & ~site.causal_row(s)) != 0)
        r.record("causal transitive", false, site.name(s) + " ≺ " + site.name(t));
      if (strict) {
        if (site.chron(s, t) && (site.causal_row(t) & ~site.chron_row(s)) != 0)
          r.record("push-up", false, site.name(s) + " ≪ " + site.name(t) + " ≺ u");
        if (site.causal(s, t) && (site.chron_row(t) & ~site.chron_row(s)) != 0)
          r.record("push-down", false, site.name(s) + " ≺ " + site.name(t) + " ≪ u");
      }
    }
  }
  return r;
}

Mask chron_future(const CausalSite& site, Mask s) {
  Mask out = 0;
  for (int p = 0; p < static_cast<int>(site.size()); ++p)
    if (s & bit(p)) out |= site.chron_row(p);
  return out;
}

Mask chron_past(const CausalSite& site, Mask s) {
  Mask out = 0;
  for (int p = 0; p < static_cast<int>(site.size()); ++p)
    if (site.chron_row(p) & s) out |= bit(p);
  return out;
}

Mask causal_future(const CausalSite& site, Mask s) {
  Mask out = 0;
  for (int p = 0; p < static_cast<int>(site.size()); ++p)
    if (s & bit(p)) out |= site.causal_row(p);
  return out;
}

Mask causal_past(const CausalSite& site, Mask s) {
  Mask out = 0;
  for (int p = 0; p < static_cast<int>(site.size()); ++p)
    if (site.causal_row(p) & s) out |= bit(p);
  return out;
}

Mask future_closure_set(const CausalSite& site, Mask s) { return s | chron_future(site, s); }

Mask past_closure_set(const CausalSite& site, Mask s) { return s | chron_past(site, s); }

bool is_future_closed(const CausalSite& site, Mask s) {
  return future_closure_set(site, s) == s;
}

bool is_past_closed(const CausalSite& site, Mask s) {
  return past_closure_set(site, s) == s;
}

namespace {

lattice::ClosureOperator closure_on_powerset(const CausalSite& site,
                                             Mask (*apply)(const CausalSite&, Mask)) {
  LawReport axioms = validate_site(site, false);
  if (!axioms.passed())
    throw std::invalid_argument("site fails axiom \"" + axioms.failures.front().law +
                                "\" at " + axioms.failures.front().witness);
  auto carrier =
      std::make_shared<lattice::MeetSemilattice>(lattice::MeetSemilattice::powerset(site.points()));
  lattice::ClosureOperator c;
  c.carrier = carrier;
  const std::size_t count = std::size_t{1} << site.size();
  c.map.reserve(count);
  // Powerset elements are ordered by subset bitmask, so the region mask is
  // the element id.
  for (Mask m = 0; m < count; ++m)
    c.map.push_back(static_cast<lattice::ElementId>(apply(site, m)));
  return c;
}

}  // namespace

lattice::ClosureOperator future_closure(const CausalSite& site) {
  return closure_on_powerset(site, &future_closure_set);
}

lattice::ClosureOperator past_closure(const CausalSite& site) {
  return closure_on_powerset(site, &past_closure_set);
}

ComplementReport complement(const CausalSite& site, Mask f, Direction dir) {
  const bool future = dir == Direction::Future;
  if (f & ~site.all_points()) throw std::invalid_argument("region not within the site");
  if (future ? !is_future_closed(site, f) : !is_past_closed(site, f))
    throw std::invalid_argument("region is not closed for the requested direction");

  ComplementReport rep;
  rep.complement = site.all_points() & ~f;
  rep.disjoint = (rep.complement & f) == 0;
  rep.covers = (rep.complement | f) == site.all_points();
  rep.closed = future ? is_past_closed(site, rep.complement)
                      : is_future_closed(site, rep.complement);
  if (site.size() <= 12) {
    rep.uniqueness_checked = true;
    std::size_t matches = 0;
    const Mask limit = site.all_points();
    for (Mask p = 0;; ++p) {
      const bool closed = future ? is_past_closed(site, p) : is_future_closed(site, p);
      if (closed && (p & f) == 0 && (p | f) == limit) ++matches;
      if (p == limit) break;
    }
    rep.unique = matches == 1;
  }
  return rep;
}

CausalSite random_site(Rng& rng, int points, double edge_prob) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Mask> edges(static_cast<std::size_t>(points), 0);
  for (int s = 0; s < points; ++s)
    for (int t = s + 1; t < points; ++t)
      if (rng.chance(edge_prob)) edges[static_cast<std::size_t>(s)] |= bit(t);
  // transitive closure, in reverse topological order
  for (int s = points - 1; s >= 0; --s) {
    Mask reach = edges[static_cast<std::size_t>(s)];
    for (int t = s + 1; t < points; ++t)
      if (reach & bit(t)) reach |= edges[static_cast<std::size_t>(t)];
    edges[static_cast<std::size_t>(s)] = reach;
  }
  std::vector<std::pair<std::string, std::string>> chron;
  for (int s = 0; s < points; ++s)
    for (int t = 0; t < points; ++t)
      if (edges[static_cast<std::size_t>(s)] & bit(t))
        chron.emplace_back(names[static_cast<std::size_t>(s)], names[static_cast<std::size_t>(t)]);
  return CausalSite::with_auto_causal(std::move(names), chron);
}

}  // namespace firmcat::causal
