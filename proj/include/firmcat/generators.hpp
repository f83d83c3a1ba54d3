#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "firmcat/hilbfield.hpp"
#include "firmcat/lattice.hpp"
#include "firmcat/rng.hpp"
#include "firmcat/subunits.hpp"

namespace firmcat::gen {

std::vector<std::string> point_names(int n);

hilb::BasePtr random_base(Rng& rng, int min_points, int max_points);

/// Random dims in [0, max_dim]; zero_prob biases fibers to dimension zero.
hilb::HField random_field(Rng& rng, const hilb::BasePtr& base, Eigen::Index max_dim,
                          double zero_prob = 0.2);

/// Random fibers with entries in the unit square. With ensure_visible, every
/// fiber that is not deliberately zeroed gets operator norm comfortably above
/// the support threshold, so carrier-level assertions are exact.
hilb::HMorphism random_morphism(Rng& rng, const hilb::HField& dom, const hilb::HField& cod,
                                double zero_fiber_prob = 0.0, bool ensure_visible = true);

subunits::Subunit random_subunit(Rng& rng, const hilb::BasePtr& base, bool canonical = true,
                                 double point_prob = 0.5);

/// Random subunit whose carrier is contained in u's.
subunits::Subunit random_subunit_below(Rng& rng, const subunits::Subunit& u,
                                       bool canonical = true);

/// Random object local for u (dims vanish off the carrier).
hilb::HField random_local_field(Rng& rng, const subunits::Subunit& u, Eigen::Index max_dim);

/// Split mono/epi pair (m: E → F, e: F → E) with e ∘ m = id_E; E has random
/// dims bounded by F's.
std::pair<hilb::HMorphism, hilb::HMorphism> random_retract(Rng& rng, const hilb::HField& f);

/// Random meet-semilattice: a random family of subsets of a small universe
/// closed under intersection, with the universe as top.
lattice::MeetSemilattice random_semilattice(Rng& rng, int universe, int seeds);

/// Random closure operator from a random Moore family (meet-closed subset of
/// the carrier containing top): C(s) = least family member above s.
lattice::ClosureOperator random_closure(Rng& rng,
                                        std::shared_ptr<const lattice::MeetSemilattice> carrier);

}  // namespace firmcat::gen
