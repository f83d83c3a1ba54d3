#include "firmcat/subunits.hpp"

#include <string>

namespace firmcat::subunits {

using hilb::Complex;
using hilb::HField;
using hilb::HMorphism;
using hilb::Mat;

bool Subunit::canonical() const {
  for (std::size_t t = 0; t < carrier.size(); ++t)
    if (carrier.test(t) && scalars[t] != Complex{1.0, 0.0}) return false;
  return true;
}

HField Subunit::object() const {
  std::vector<Eigen::Index> dims(base->points.size());
  for (std::size_t t = 0; t < dims.size(); ++t) dims[t] = carrier.test(t) ? 1 : 0;
  return HField{base, std::move(dims)};
}

HMorphism Subunit::mono() const {
  HField s = object();
  HField i = hilb::unit_field(base);
  std::vector<Mat> fibers;
  fibers.reserve(base->points.size());
  for (std::size_t t = 0; t < base->points.size(); ++t) {
    if (carrier.test(t)) {
      Mat m(1, 1);
      m(0, 0) = scalars[t];
      fibers.push_back(std::move(m));
    } else {
      fibers.push_back(Mat(1, 0));
    }
  }
  return HMorphism{std::move(s), std::move(i), std::move(fibers)};
}

std::vector<std::string> Subunit::carrier_names() const {
  std::vector<std::string> out;
  for (std::size_t t = 0; t < carrier.size(); ++t)
    if (carrier.test(t)) out.push_back(base->points[t]);
  return out;
}

Subunit canonical_subunit(const hilb::BasePtr& base, Carrier carrier) {
  if (carrier.size() != base->points.size())
    throw std::invalid_argument("carrier size does not match the base");
  return Subunit{base, std::move(carrier),
                 std::vector<Complex>(base->points.size(), Complex{1.0, 0.0})};
}

Subunit full_subunit(const hilb::BasePtr& base) {
  Carrier c(base->points.size());
  c.set();
  return canonical_subunit(base, std::move(c));
}

Subunit empty_subunit(const hilb::BasePtr& base) {
  return canonical_subunit(base, Carrier(base->points.size()));
}

Carrier carrier_of_names(const hilb::BasePtr& base, const std::vector<std::string>& names) {
  Carrier c(base->points.size());
  for (const auto& n : names) c.set(static_cast<std::size_t>(base->id_of(n)));
  return c;
}

Subunit recognize_subunit(const HMorphism& s, double tol) {
  if (!(s.cod == hilb::unit_field(s.cod.base)))
    throw std::invalid_argument("codomain is not the tensor unit");
  if (!hilb::is_mono(s, tol)) throw NotMonoError{};
  Subunit u{s.dom.base, Carrier(s.dom.points()), std::vector<Complex>(s.dom.points(), Complex{1.0, 0.0})};
  for (std::size_t t = 0; t < s.dom.points(); ++t) {
    if (s.dom.dim(t) == 1) {
      u.carrier.set(t);
      u.scalars[t] = s.fiber(t)(0, 0);
    } else if (s.dom.dim(t) != 0) {
      // unreachable once monic: a fiber of dimension > 1 cannot inject into C
      throw NotMonoError{};
    }
  }
  if (!hilb::is_iso(hilb::tensor_mor(s, hilb::identity(u.object())), tol))
    throw NotIdempotentError{};
  return u;
}

Subunit subunit_meet(const Subunit& u, const Subunit& v) {
  if (!hilb::same_base(u.base, v.base)) throw std::invalid_argument("base space mismatch");
  Subunit w{u.base, u.carrier & v.carrier, std::vector<Complex>(u.scalars.size(), Complex{1.0, 0.0})};
  for (std::size_t t = 0; t < w.scalars.size(); ++t)
    if (w.carrier.test(t)) w.scalars[t] = u.scalars[t] * v.scalars[t];
  return w;
}

bool subunit_leq(const Subunit& u, const Subunit& v, double tol) {
  if (!hilb::same_base(u.base, v.base)) throw std::invalid_argument("base space mismatch");
  const bool subset = u.carrier.is_subset_of(v.carrier);
  const bool iso =
      hilb::is_iso(hilb::tensor_mor(hilb::identity(u.object()), v.mono()), tol);
  if (subset != iso)
    throw std::logic_error("subunit order: subset test and iso test disagree");
  return subset;
}

HMorphism mediating_iso(const Subunit& s, const Subunit& s_prime, double tol) {
  if (!hilb::same_base(s.base, s_prime.base)) throw std::invalid_argument("base space mismatch");
  if (s.carrier != s_prime.carrier)
    throw std::invalid_argument("mediating iso requires equal carriers");
  std::vector<Mat> fibers;
  fibers.reserve(s.base->points.size());
  for (std::size_t t = 0; t < s.base->points.size(); ++t) {
    if (s.carrier.test(t)) {
      Mat m(1, 1);
      m(0, 0) = s_prime.scalars[t] / s.scalars[t];
      fibers.push_back(std::move(m));
    } else {
      fibers.push_back(Mat(0, 0));
    }
  }
  HMorphism f{s_prime.object(), s.object(), std::move(fibers)};
  if (!hilb::is_iso(f, tol)) throw std::domain_error("mediating morphism is not an iso");
  return f;
}

bool has_support_in_fast(const HMorphism& f, const Subunit& s, double tol) {
  if (!hilb::same_base(f.dom.base, s.base)) throw std::invalid_argument("base space mismatch");
  for (std::size_t t = 0; t < f.fibers.size(); ++t)
    if (!s.carrier.test(t) && hilb::operator_norm(f.fiber(t)) > tol) return false;
  return true;
}

bool has_support_in_factor(const HMorphism& f, const Subunit& s, double tol) {
  if (!hilb::same_base(f.dom.base, s.base)) throw std::invalid_argument("base space mismatch");
  // Factor f through c = ρ_F ∘ (id_F ⊗ s) : F⊗S → F, one least-squares solve
  // per fiber; support means every residual stays below tol.
  for (std::size_t t = 0; t < f.fibers.size(); ++t) {
    const Eigen::Index df = f.cod.dim(t);
    const Eigen::Index ds = s.carrier.test(t) ? 1 : 0;
    Mat c = Mat::Zero(df, df * ds);
    if (ds == 1) c = s.scalars[t] * Mat::Identity(df, df);
    if (c.cols() == 0) {
      if (hilb::operator_norm(f.fiber(t)) > tol) return false;
      continue;
    }
    if (f.fiber(t).cols() == 0) continue;
    const Mat g = c.completeOrthogonalDecomposition().solve(f.fiber(t));
    const Mat residual = c * g - f.fiber(t);
    if (residual.size() > 0 && residual.cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

bool has_support_in(const HMorphism& f, const Subunit& s, double tol) {
  const bool fast = has_support_in_fast(f, s, tol);
  const bool factor = has_support_in_factor(f, s, tol);
  if (fast != factor)
    throw std::logic_error("support: fast path and factorization path disagree");
  return fast;
}

Subunit support(const HMorphism& f, double tol) {
  Carrier c(f.dom.points());
  for (std::size_t t = 0; t < f.fibers.size(); ++t)
    if (hilb::operator_norm(f.fiber(t)) > tol) c.set(t);
  return canonical_subunit(f.dom.base, std::move(c));
}

namespace {

Subunit subunit_from_mask(const hilb::BasePtr& base, unsigned mask, Rng* rng) {
  Carrier c(base->points.size());
  for (std::size_t t = 0; t < base->points.size(); ++t)
    if (mask & (1u << t)) c.set(t);
  Subunit u = canonical_subunit(base, std::move(c));
  if (rng)
    for (std::size_t t = 0; t < u.scalars.size(); ++t)
      if (u.carrier.test(t)) u.scalars[t] = rng->nonzero_scalar();
  return u;
}

std::string carrier_label(const Subunit& u) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : u.carrier_names()) {
    if (!first) out += ",";
    out += n;
    first = false;
  }
  return out + "}";
}

}  // namespace

LawReport firmness_report(const hilb::BasePtr& base, Eigen::Index dims_bound, Rng& rng,
                          double tol) {
  if (base->points.size() > 8)
    throw std::invalid_argument("firmness enumeration limited to 8 points");
  LawReport r;
  r.suite = "firmness";
  r.note_law("subunit-pair-monic");
  if (dims_bound > 0) r.note_law("object-firm");
  const unsigned carriers = 1u << base->points.size();
  for (unsigned a = 0; a < carriers; ++a) {
    for (unsigned b = 0; b < carriers; ++b) {
      // Alternate canonical and random-scalar witnesses across the grid.
      const bool scramble = ((a + b) % 2) == 1;
      Subunit u = subunit_from_mask(base, a, scramble ? &rng : nullptr);
      Subunit v = subunit_from_mask(base, b, scramble ? &rng : nullptr);
      ++r.cases_run;
      const bool monic =
          hilb::is_mono(hilb::tensor_mor(u.mono(), hilb::identity(v.object())), tol);
      r.record("subunit-pair-monic", monic,
               carrier_label(u) + " ⊗ id_" + carrier_label(v), 0.0, r.cases_run - 1);
    }
    if (dims_bound > 0) {
      Subunit u = subunit_from_mask(base, a, nullptr);
      std::vector<Eigen::Index> dims(base->points.size());
      for (auto& d : dims) d = static_cast<Eigen::Index>(rng.uniform(static_cast<std::uint64_t>(dims_bound) + 1));
      HField e{base, std::move(dims)};
      ++r.cases_run;
      const bool monic = hilb::is_mono(hilb::tensor_mor(u.mono(), hilb::identity(e)), tol);
      r.record("object-firm", monic, carrier_label(u), 0.0, r.cases_run - 1);
    }
  }
  return r;
}

LawReport locality_report(const HField& e, const Subunit& u, double tol) {
  if (!hilb::same_base(e.base, u.base)) throw std::invalid_argument("base space mismatch");
  LawReport r;
  r.suite = "locality";
  r.cases_run = 1;
  r.note_law("(a) iff (b)");
  r.note_law("(a) iff (d)");
  const bool a = hilb::is_iso(hilb::tensor_mor(hilb::identity(e), u.mono()), tol);
  const HField es = hilb::tensor_ob(e, u.object());
  const bool b = es.dims == e.dims;
  const bool d = has_support_in(hilb::identity(e), u, tol);
  const std::string values = carrier_label(u) + ": a=" + (a ? "1" : "0") +
                             " b=" + (b ? "1" : "0") + " d=" + (d ? "1" : "0");
  r.record("(a) iff (b)", a == b, values);
  r.record("(a) iff (d)", a == d, values);
  return r;
}

}  // namespace firmcat::subunits
