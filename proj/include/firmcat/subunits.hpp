#pragma once

#include <boost/dynamic_bitset.hpp>
#include <stdexcept>
#include <vector>

#include "firmcat/hilbfield.hpp"
#include "firmcat/report.hpp"
#include "firmcat/rng.hpp"

namespace firmcat::subunits {

using Carrier = boost::dynamic_bitset<>;

/// Canonical data of an idempotent subunit: an arbitrary subset of the
/// discrete base plus a nonzero scalar per carrier point. The induced mono
/// s: S ↣ I has S of dimension one on the carrier, zero off it.
struct Subunit {
  hilb::BasePtr base;
  Carrier carrier;
  std::vector<hilb::Complex> scalars;  // indexed by point; ignored off carrier

  bool canonical() const;
  hilb::HField object() const;    // S
  hilb::HMorphism mono() const;   // s : S ↣ I
  std::vector<std::string> carrier_names() const;
};

Subunit canonical_subunit(const hilb::BasePtr& base, Carrier carrier);
Subunit full_subunit(const hilb::BasePtr& base);
Subunit empty_subunit(const hilb::BasePtr& base);
Carrier carrier_of_names(const hilb::BasePtr& base, const std::vector<std::string>& names);

struct NotMonoError : std::runtime_error {
  NotMonoError() : std::runtime_error("morphism into the unit is not monic") {}
};
struct NotIdempotentError : std::runtime_error {
  NotIdempotentError() : std::runtime_error("monic subunit is not idempotent") {}
};

/// Accepts a morphism with codomain I and returns its subunit data. Throws
/// NotMonoError if some fiber is not injective (which covers every failure in
/// this model) and NotIdempotentError if s ⊗ id_S were somehow not iso.
Subunit recognize_subunit(const hilb::HMorphism& s, double tol = hilb::kDefaultTol);

/// λ_I ∘ (s ⊗ t): carriers intersect, scalars multiply pointwise.
Subunit subunit_meet(const Subunit& u, const Subunit& v);

/// u ≤ v. Computed both as the carrier subset test and as the isomorphism
/// test of id_S ⊗ t; the two must agree (logic error otherwise).
bool subunit_leq(const Subunit& u, const Subunit& v, double tol = hilb::kDefaultTol);

/// The unique f with s' = s ∘ f for subunits on the same carrier; an iso.
hilb::HMorphism mediating_iso(const Subunit& s, const Subunit& s_prime,
                              double tol = hilb::kDefaultTol);

/// Does f factor through ρ_F ∘ (id_F ⊗ s)? Fast path: every fiber off the
/// carrier vanishes. Generic path: fiberwise least-squares factorization.
bool has_support_in_fast(const hilb::HMorphism& f, const Subunit& s,
                         double tol = hilb::kDefaultTol);
bool has_support_in_factor(const hilb::HMorphism& f, const Subunit& s,
                           double tol = hilb::kDefaultTol);

/// Both paths, which must agree; throws std::logic_error if they ever differ.
bool has_support_in(const hilb::HMorphism& f, const Subunit& s,
                    double tol = hilb::kDefaultTol);

/// The least subunit f factors through: carrier = fibers with operator norm
/// above tol, scalars ≡ 1.
Subunit support(const hilb::HMorphism& f, double tol = hilb::kDefaultTol);

/// Firmness over a base: s ⊗ id_T monic for every ordered pair of subunit
/// carriers (scalars alternate between canonical and random witnesses), plus
/// s ⊗ id_E monic for random objects with dims up to dims_bound.
LawReport firmness_report(const hilb::BasePtr& base, Eigen::Index dims_bound, Rng& rng,
                          double tol = hilb::kDefaultTol);

/// The locality equivalences for an object E and subunit u:
/// (a) id_E ⊗ s iso, (b) some iso E⊗S ≅ E (by dims), (d) id_E has support in
/// u — evaluated independently and checked pairwise equal.
LawReport locality_report(const hilb::HField& e, const Subunit& u,
                          double tol = hilb::kDefaultTol);

}  // namespace firmcat::subunits
