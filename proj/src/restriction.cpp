#include "firmcat/restriction.hpp"

#include <string>

#include "firmcat/generators.hpp"

namespace firmcat::restriction {

using hilb::HField;
using hilb::HMorphism;
using hilb::Mat;
using subunits::Subunit;
using subunits::subunit_meet;

HField restrict_object(const HField& e, const Subunit& u) {
  return hilb::tensor_ob(e, u.object());
}

HMorphism restrict_morphism(const HMorphism& f, const Subunit& u) {
  return hilb::tensor_mor(f, hilb::identity(u.object()));
}

HMorphism counit(const HField& f, const Subunit& u) {
  if (!hilb::same_base(f.base, u.base)) throw std::invalid_argument("base space mismatch");
  // ρ_F ∘ (id_F ⊗ s): fiberwise the subunit scalar times the identity on the
  // carrier, the empty map off it.
  HField dom = restrict_object(f, u);
  std::vector<Mat> fibers;
  fibers.reserve(f.points());
  for (std::size_t t = 0; t < f.points(); ++t) {
    if (u.carrier.test(t))
      fibers.push_back(u.scalars[t] * Mat::Identity(f.dim(t), f.dim(t)));
    else
      fibers.push_back(Mat(f.dim(t), 0));
  }
  return hilb::make_morphism(std::move(dom), f, std::move(fibers));
}

HMorphism adjunction_forward(const HMorphism& f, const Subunit& u, double tol) {
  const HField& e = f.dom;
  HMorphism e_tensor_s = hilb::tensor_mor(hilb::identity(e), u.mono());
  if (!hilb::is_iso(e_tensor_s, tol))
    throw std::invalid_argument("adjunction_forward requires the domain to be local");
  // (f ⊗ id_S) ∘ (id_E ⊗ s)^{-1} ∘ ρ_E^{-1}; the unitor is an identity matrix.
  return hilb::compose(restrict_morphism(f, u), hilb::invert(e_tensor_s, tol));
}

HMorphism adjunction_backward(const HMorphism& g, const HField& f, const Subunit& u) {
  if (!(g.cod == restrict_object(f, u)))
    throw std::invalid_argument("adjunction_backward: codomain is not F⊗S");
  return hilb::compose(counit(f, u), g);
}

HMorphism graded_unit(const HField& e) {
  // ρ_E^{-1} : E → E⊗I — an identity matrix under strictification.
  HField ei = hilb::tensor_ob(e, hilb::unit_field(e.base));
  std::vector<Mat> fibers;
  fibers.reserve(e.points());
  for (std::size_t t = 0; t < e.points(); ++t)
    fibers.push_back(Mat::Identity(e.dim(t), e.dim(t)));
  return hilb::make_morphism(e, std::move(ei), std::move(fibers));
}

HMorphism graded_mult(const HField& e, const Subunit& u, const Subunit& v) {
  // α_{E,S,T} : (E⊗S)⊗T → E⊗(S⊗T) — identity under the row-major convention.
  HField dom = hilb::tensor_ob(restrict_object(e, u), v.object());
  HField cod = hilb::tensor_ob(e, hilb::tensor_ob(u.object(), v.object()));
  std::vector<Mat> fibers;
  fibers.reserve(e.points());
  for (std::size_t t = 0; t < dom.points(); ++t)
    fibers.push_back(Mat::Identity(dom.dim(t), dom.dim(t)));
  return hilb::make_morphism(std::move(dom), std::move(cod), std::move(fibers));
}

bool grade_hom_exists(const Subunit& s, const Subunit& t) {
  if (!hilb::same_base(s.base, t.base)) throw std::invalid_argument("base space mismatch");
  return s.carrier.is_subset_of(t.carrier);
}

std::optional<HMorphism> grade_hom(const Subunit& s, const Subunit& t) {
  if (!grade_hom_exists(s, t)) return std::nullopt;
  // the unique f with t ∘ f = s: divide the scalars on s's carrier
  std::vector<Mat> fibers;
  fibers.reserve(s.base->points.size());
  for (std::size_t p = 0; p < s.base->points.size(); ++p) {
    if (s.carrier.test(p)) {
      Mat m(1, 1);
      m(0, 0) = s.scalars[p] / t.scalars[p];
      fibers.push_back(std::move(m));
    } else {
      fibers.push_back(Mat(t.carrier.test(p) ? 1 : 0, 0));
    }
  }
  return hilb::make_morphism(s.object(), t.object(), std::move(fibers));
}

LawReport coreflection_report(std::size_t samples, std::uint64_t seed, double tol,
                              ExecMode mode) {
  LawReport r = run_cases(
      "coreflection", samples, seed, mode, [&](std::size_t, Rng& rng, CaseRecorder& rec) {
        hilb::BasePtr base = gen::random_base(rng, 1, 4);
        Subunit u = gen::random_subunit(rng, base, rng.chance(0.5));
        HField f0 = gen::random_field(rng, base, 3);
        HField e = gen::random_local_field(rng, u, 3);
        HMorphism f = gen::random_morphism(rng, e, f0);

        // round trips of the hom-set bijection
        HMorphism fwd = adjunction_forward(f, u, tol);
        rec.within("backward-forward", hilb::deviation(adjunction_backward(fwd, f0, u), f),
                   tol);
        HMorphism g = gen::random_morphism(rng, e, restrict_object(f0, u));
        rec.within("forward-backward",
                   hilb::deviation(adjunction_forward(adjunction_backward(g, f0, u), u, tol), g),
                   tol);

        // triangle identities
        HMorphism unit_e = adjunction_forward(hilb::identity(e), u, tol);
        rec.within("triangle-counit-unit",
                   hilb::deviation(hilb::compose(counit(e, u), unit_e), hilb::identity(e)),
                   tol);
        HField fs = restrict_object(f0, u);
        HMorphism unit_fs = adjunction_forward(hilb::identity(fs), u, tol);
        rec.within("triangle-restrict-counit",
                   hilb::deviation(hilb::compose(restrict_morphism(counit(f0, u), u), unit_fs),
                                   hilb::identity(fs)),
                   tol);

        // counit naturality: ε_F ∘ (h ⊗ id_S) = h ∘ ε_E
        HField f1 = gen::random_field(rng, base, 3);
        HMorphism h = gen::random_morphism(rng, f0, f1);
        rec.within("counit-natural",
                   hilb::deviation(hilb::compose(counit(f1, u), restrict_morphism(h, u)),
                                   hilb::compose(h, counit(f0, u))),
                   tol);

        // restriction is functorial and monoidal
        HField f2 = gen::random_field(rng, base, 3);
        HMorphism k = gen::random_morphism(rng, f1, f2);
        rec.within("restrict-functorial",
                   hilb::deviation(restrict_morphism(hilb::compose(k, h), u),
                                   hilb::compose(restrict_morphism(k, u), restrict_morphism(h, u))),
                   tol);
        // monoidality: (f⊗g)⊗id_S agrees with (f⊗id_S)⊗(g⊗id_S); with a
        // dim ≤ 1 subunit object the mediating permutation is the identity,
        // and the fiber dims coincide pointwise
        HMorphism h3 = gen::random_morphism(rng, f1, f2);
        rec.within("restrict-monoidal",
                   hilb::deviation(restrict_morphism(hilb::tensor_mor(h, h3), u),
                                   hilb::tensor_mor(restrict_morphism(h, u),
                                                    restrict_morphism(h3, u))),
                   tol);

        // restricted objects are local, and restriction is idempotent on dims
        HField rf = restrict_object(f0, u);
        rec.require("restricted-local",
                    hilb::is_iso(hilb::tensor_mor(hilb::identity(rf), u.mono()), tol));
        rec.require("restrict-idempotent-dims", restrict_object(rf, u).dims == rf.dims);
      });
  r.laws = {"backward-forward", "forward-backward", "triangle-counit-unit",
            "triangle-restrict-counit", "counit-natural", "restrict-functorial",
            "restrict-monoidal", "restricted-local", "restrict-idempotent-dims"};
  return r;
}

LawReport graded_monad_report(std::size_t samples, std::uint64_t seed, double tol,
                              ExecMode mode) {
  LawReport r = run_cases(
      "graded-monad", samples, seed, mode, [&](std::size_t, Rng& rng, CaseRecorder& rec) {
        hilb::BasePtr base = gen::random_base(rng, 1, 3);
        // non-canonical scalar witnesses are the point of the grading category
        Subunit gr = gen::random_subunit(rng, base, rng.chance(0.3));
        Subunit gs = gen::random_subunit(rng, base, rng.chance(0.3));
        Subunit gt = gen::random_subunit(rng, base, rng.chance(0.3));
        HField e = gen::random_field(rng, base, 3);

        // associativity square at E
        HMorphism mu_rs_at_e = graded_mult(e, gr, gs);
        HMorphism mu_rs_then_t =
            hilb::compose(graded_mult(e, subunit_meet(gr, gs), gt),
                          hilb::tensor_mor(mu_rs_at_e, hilb::identity(gt.object())));
        Subunit rs = subunit_meet(gr, gs);
        Subunit st = subunit_meet(gs, gt);
        auto alpha = grade_hom(subunit_meet(rs, gt), subunit_meet(gr, st));
        rec.require("grade-alpha-exists", alpha.has_value());
        HMorphism left = hilb::compose(hilb::tensor_mor(hilb::identity(e), *alpha), mu_rs_then_t);
        HMorphism right = hilb::compose(graded_mult(e, gr, st),
                                        graded_mult(restrict_object(e, gr), gs, gt));
        // the two composites land in E⊗(S_r⊗(S_s⊗S_t)) with equal dims
        rec.within("associativity-square", hilb::deviation(left, right), tol);

        // unit triangles at E
        Subunit one = subunits::full_subunit(base);
        HMorphism eta_ts = graded_unit(restrict_object(e, gs));
        HMorphism lam_path = hilb::compose(graded_mult(e, gs, one), eta_ts);
        auto rho_arrow = grade_hom(subunit_meet(gs, one), gs);
        rec.require("grade-rho-exists", rho_arrow.has_value());
        HMorphism lam_total = hilb::compose(hilb::tensor_mor(hilb::identity(e), *rho_arrow), lam_path);
        rec.within("unit-triangle-right", hilb::deviation(lam_total, hilb::identity(restrict_object(e, gs))),
                   tol);

        HMorphism eta_then_ts = restrict_morphism(graded_unit(e), gs);
        HMorphism mu_1s = graded_mult(e, one, gs);
        auto lam_arrow = grade_hom(subunit_meet(one, gs), gs);
        rec.require("grade-lambda-exists", lam_arrow.has_value());
        HMorphism unit_total = hilb::compose(
            hilb::tensor_mor(hilb::identity(e), *lam_arrow), hilb::compose(mu_1s, eta_then_ts));
        rec.within("unit-triangle-left",
                   hilb::deviation(unit_total, hilb::identity(restrict_object(e, gs))), tol);

        // functoriality of the grade assignment: T(f) = id ⊗ f is natural
        Subunit sub = gen::random_subunit_below(rng, gt, rng.chance(0.5));
        auto f_arrow = grade_hom(sub, gt);
        rec.require("grade-hom-exists", f_arrow.has_value());
        if (f_arrow) {
          HField e2 = gen::random_field(rng, base, 3);
          HMorphism h = gen::random_morphism(rng, e, e2);
          HMorphism lhs = hilb::compose(hilb::tensor_mor(hilb::identity(e2), *f_arrow),
                                        hilb::tensor_mor(h, hilb::identity(sub.object())));
          HMorphism rhs = hilb::compose(hilb::tensor_mor(h, hilb::identity(gt.object())),
                                        hilb::tensor_mor(hilb::identity(e), *f_arrow));
          rec.within("grade-naturality", hilb::deviation(lhs, rhs), tol);
        }

        // μ is natural in E
        HField e3 = gen::random_field(rng, base, 3);
        HMorphism h2 = gen::random_morphism(rng, e, e3);
        HMorphism nat_lhs = hilb::compose(
            graded_mult(e3, gr, gs),
            hilb::tensor_mor(restrict_morphism(h2, gr), hilb::identity(gs.object())));
        HMorphism nat_rhs = hilb::compose(
            hilb::tensor_mor(h2, hilb::identity(subunit_meet(gr, gs).object())),
            graded_mult(e, gr, gs));
        rec.within("mult-natural", hilb::deviation(nat_lhs, nat_rhs), tol);

        // grading category hom-sets: at most one arrow, exactly when carriers nest
        Subunit s1 = gen::random_subunit(rng, base, false);
        Subunit t1 = gen::random_subunit(rng, base, false);
        auto arrow = grade_hom(s1, t1);
        rec.require("grade-hom-iff-subset",
                    arrow.has_value() == s1.carrier.is_subset_of(t1.carrier));
        if (arrow)
          rec.within("grade-hom-section", hilb::deviation(hilb::compose(t1.mono(), *arrow), s1.mono()),
                     tol);
      });
  r.laws = {"associativity-square", "unit-triangle-left", "unit-triangle-right",
            "grade-naturality",     "mult-natural",       "grade-hom-iff-subset",
            "grade-hom-section"};
  return r;
}

LawReport localisation_report(const Subunit& u, std::size_t samples, std::uint64_t seed,
                              double tol, ExecMode mode) {
  LawReport r = run_cases(
      "localisation", samples, seed, mode, [&](std::size_t, Rng& rng, CaseRecorder& rec) {
        const hilb::BasePtr& base = u.base;
        HField e = gen::random_field(rng, base, 3);

        // (i) Q = restrict(−,u) inverts every id_E ⊗ s
        HMorphism sigma = hilb::tensor_mor(hilb::identity(e), u.mono());
        rec.require("Q-inverts-sigma", hilb::is_iso(restrict_morphism(sigma, u), tol));

        // (ii) for test functors R = restrict(−,v), v ≤ u:
        //      η_E = R(ρ_E) ∘ R(id_E ⊗ s) is a natural isomorphism
        Subunit v = gen::random_subunit_below(rng, u, rng.chance(0.5));
        HMorphism eta_e = restrict_morphism(sigma, v);  // ρ is identity under strictness
        rec.require("eta-component-iso", hilb::is_iso(eta_e, tol));
        HField e2 = gen::random_field(rng, base, 3);
        HMorphism f = gen::random_morphism(rng, e, e2);
        HMorphism eta_e2 = restrict_morphism(hilb::tensor_mor(hilb::identity(e2), u.mono()), v);
        HMorphism lhs = hilb::compose(eta_e2, restrict_morphism(restrict_morphism(f, u), v));
        HMorphism rhs = hilb::compose(restrict_morphism(f, v), eta_e);
        rec.within("eta-natural", hilb::deviation(lhs, rhs), tol);

        // (iii) faithfulness witness: a local-domain morphism is recovered
        //       from its image under Q, so distinct morphisms stay distinct
        HField el = gen::random_local_field(rng, u, 3);
        HMorphism g = gen::random_morphism(rng, el, e2);
        HMorphism recovered = adjunction_backward(adjunction_forward(g, u, tol), e2, u);
        rec.within("Q-injective-on-local", hilb::deviation(recovered, g), tol);
        HMorphism g2 = gen::random_morphism(rng, el, e2);
        const double gap = hilb::deviation(g, g2);
        if (gap > 10 * tol)
          rec.require("distinct-stay-distinct",
                      hilb::deviation(restrict_morphism(g, u), restrict_morphism(g2, u)) > tol);
      });
  r.laws = {"Q-inverts-sigma", "eta-component-iso", "eta-natural", "Q-injective-on-local",
            "distinct-stay-distinct"};
  return r;
}

}  // namespace firmcat::restriction
