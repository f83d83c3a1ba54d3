#pragma once

#include <optional>

#include "firmcat/hilbfield.hpp"
#include "firmcat/report.hpp"
#include "firmcat/runner.hpp"
#include "firmcat/subunits.hpp"

namespace firmcat::restriction {

/// Restriction to a subunit: E ↦ E ⊗ S and f ↦ f ⊗ id_S. Dims vanish off the
/// carrier; the restricted object is always local for u.
hilb::HField restrict_object(const hilb::HField& e, const subunits::Subunit& u);
hilb::HMorphism restrict_morphism(const hilb::HMorphism& f, const subunits::Subunit& u);

/// Counit of the coreflection: ρ_F ∘ (id_F ⊗ s) : F⊗S → F.
hilb::HMorphism counit(const hilb::HField& f, const subunits::Subunit& u);

/// The adjunction bijection C(E,F) ≅ C|_s(E, F⊗S) for E local:
/// forward(f) = (f ⊗ id_S) ∘ (id_E ⊗ s)^{-1} ∘ ρ_E^{-1}, backward is
/// postcomposition with the counit of F (passed explicitly, since F⊗S does
/// not remember F's dims off the carrier). Forward throws if E is not local.
hilb::HMorphism adjunction_forward(const hilb::HMorphism& f, const subunits::Subunit& u,
                                   double tol = hilb::kDefaultTol);
hilb::HMorphism adjunction_backward(const hilb::HMorphism& g, const hilb::HField& f,
                                    const subunits::Subunit& u);

/// Graded-monad structure maps. Under the strict Kronecker convention the
/// unit ρ_E^{-1} : E → E⊗I and the multiplication α_{E,S,T} :
/// (E⊗S)⊗T → E⊗(S⊗T) are identity matrices; they are built explicitly so law
/// suites evaluate real matrix equalities.
hilb::HMorphism graded_unit(const hilb::HField& e);
hilb::HMorphism graded_mult(const hilb::HField& e, const subunits::Subunit& u,
                            const subunits::Subunit& v);

/// Hom-sets of the grading category (subunit monos NOT identified up to
/// subobject equivalence): there is an arrow s → t exactly when
/// carrier(s) ⊆ carrier(t), and then it is the unique f with t ∘ f = s.
bool grade_hom_exists(const subunits::Subunit& s, const subunits::Subunit& t);
std::optional<hilb::HMorphism> grade_hom(const subunits::Subunit& s,
                                         const subunits::Subunit& t);

/// Law suites (driven by the CLI and the acceptance gate).
LawReport coreflection_report(std::size_t samples, std::uint64_t seed, double tol,
                              ExecMode mode = ExecMode::Parallel);
LawReport graded_monad_report(std::size_t samples, std::uint64_t seed, double tol,
                              ExecMode mode = ExecMode::Parallel);

/// Localisation at a fixed subunit u, sampled over random objects, morphisms
/// and test functors restrict(−, v) with v ≤ u.
LawReport localisation_report(const subunits::Subunit& u, std::size_t samples,
                              std::uint64_t seed, double tol,
                              ExecMode mode = ExecMode::Parallel);

}  // namespace firmcat::restriction
