#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "firmcat/lattice.hpp"
#include "firmcat/report.hpp"
#include "firmcat/rng.hpp"

namespace firmcat::causal {

/// Regions of a site are bitmasks over its points (sites are capped at 64
/// points; the suites use far fewer).
using Mask = std::uint64_t;

/// A finite causal site: points with a chronological relation ≪ (expected
/// strict and transitive) and a causal relation ≺ (expected reflexive and
/// transitive, containing ≪). Relations are stored exactly as supplied;
/// validate_site reports which axioms hold.
class CausalSite {
 public:
  CausalSite(std::vector<std::string> points,
             const std::vector<std::pair<std::string, std::string>>& chron,
             const std::vector<std::pair<std::string, std::string>>& causal);

  /// Derives ≺ as the reflexive closure of ≪ (the "auto" file mode).
  static CausalSite with_auto_causal(
      std::vector<std::string> points,
      const std::vector<std::pair<std::string, std::string>>& chron);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& name(int p) const { return points_.at(static_cast<std::size_t>(p)); }
  int id_of(const std::string& name) const;

  bool chron(int s, int t) const;   // s ≪ t
  bool causal(int s, int t) const;  // s ≺ t
  Mask chron_row(int s) const { return chron_[static_cast<std::size_t>(s)]; }
  Mask causal_row(int s) const { return causal_[static_cast<std::size_t>(s)]; }

  Mask all_points() const;
  Mask mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(Mask m) const;

 private:
  std::vector<std::string> points_;
  std::vector<Mask> chron_;   // chron_[s] = { t | s ≪ t }
  std::vector<Mask> causal_;  // causal_[s] = { t | s ≺ t }
};

/// Site axioms: ≪ irreflexive and transitive, ≺ reflexive and transitive,
/// ≪ ⊆ ≺. With `strict`, also the push-up laws s ≪ t ≺ u ⟹ s ≪ u and
/// s ≺ t ≪ u ⟹ s ≪ u.
LawReport validate_site(const CausalSite& site, bool strict = false);

Mask chron_future(const CausalSite& site, Mask s);  // I+(S)
Mask chron_past(const CausalSite& site, Mask s);    // I-(S)
Mask causal_future(const CausalSite& site, Mask s); // J+(S)
Mask causal_past(const CausalSite& site, Mask s);   // J-(S)

/// C+(S) = S ∪ I+(S) and its past mirror; the closure operators evaluated on
/// one region.
Mask future_closure_set(const CausalSite& site, Mask s);
Mask past_closure_set(const CausalSite& site, Mask s);

bool is_future_closed(const CausalSite& site, Mask s);
bool is_past_closed(const CausalSite& site, Mask s);

/// The closure operator C± as a lattice::ClosureOperator on the powerset
/// semilattice of the points. Requires the site to pass validate_site
/// (non-strict); construction throws otherwise.
lattice::ClosureOperator future_closure(const CausalSite& site);
lattice::ClosureOperator past_closure(const CausalSite& site);

enum class Direction { Future, Past };

struct ComplementReport {
  Mask complement = 0;
  bool disjoint = false;
  bool covers = false;
  bool closed = false;
  bool unique = false;          // by brute force over all closed sets
  bool uniqueness_checked = false;  // only for sites with <= 12 points
};

/// For a C+-closed F (direction Future), the unique C−-closed region disjoint
/// from F whose union with F is everything; mirrored for Past. Throws if F is
/// not closed for the given direction.
ComplementReport complement(const CausalSite& site, Mask f, Direction dir);

/// Random DAG site: order the points, keep each forward edge with the given
/// probability, then transitively close ≪ and take ≺ = reflexive closure.
CausalSite random_site(Rng& rng, int points, double edge_prob = 0.4);

}  // namespace firmcat::causal
