#pragma once

#include <map>
#include <string>
#include <vector>

#include "firmcat/causal.hpp"
#include "firmcat/hilbfield.hpp"
#include "firmcat/runner.hpp"
#include "firmcat/subunits.hpp"

namespace firmcat::protocol {

enum class PairMode { Dual, Normalized, Custom };

/// A teleportation scenario: a causal site, the pair-creation lab r, Alice's
/// and Bob's labs s and t, the qudit dimension of A = A' = B, and which
/// entangled state / measurement effect to use. Custom matrices are keyed by
/// point name.
struct Scenario {
  causal::CausalSite site;
  causal::Mask r = 0;
  causal::Mask s = 0;
  causal::Mask t = 0;
  Eigen::Index qdim = 2;
  PairMode eta_mode = PairMode::Dual;
  PairMode eps_mode = PairMode::Dual;
  std::map<std::string, hilb::Mat> eta_custom;
  std::map<std::string, hilb::Mat> eps_custom;
};

/// The protocol morphism together with the context needed to verify it. The
/// working base keeps only the points of C+(r); both labs' futures become
/// subunits over it.
struct BuiltProtocol {
  hilb::BasePtr base;                // points of C+(r), site order
  subunits::Subunit future_s;        // C+(s)
  subunits::Subunit future_t;        // C+(t)
  hilb::HMorphism composite;         // A ⊗ C+(s) ⊗ C+(t) → B ⊗ C+(t)
  double expected_scale = 1.0;       // restricted iso is expected_scale · id
};

/// Assembles (ε ⊗ id_{B⊗C+(t)}) ∘ (id_A ⊗ η′) over the reduced base. Throws
/// if the site fails its axioms, if a lab is not contained in C+(r), or if
/// custom matrices have the wrong shape.
BuiltProtocol build_protocol(const Scenario& scn);

struct TeleportReport {
  std::vector<std::string> support_carrier;
  std::vector<std::string> expected_carrier;  // C+(s) ∩ C+(t)
  bool support_contained = false;
  bool empty_intersection = false;
  bool restricted_is_iso = false;
  double deviation = 0.0;  // restricted composite vs expected_scale · id
  bool verdict = false;    // support_contained and deviation ≤ tol
};

TeleportReport verify_teleportation(const Scenario& scn, double tol = hilb::kDefaultTol);

/// Random-scenario sweep of the support containment claim (and the known-iso
/// claim in dual mode); drives the "teleport" part of the acceptance gate.
LawReport teleport_suite(std::size_t samples, std::uint64_t seed, double tol,
                         ExecMode mode = ExecMode::Parallel);

}  // namespace firmcat::protocol
