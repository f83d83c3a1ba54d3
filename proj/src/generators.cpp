#include "firmcat/generators.hpp"

#include <stdexcept>

namespace firmcat::gen {

using hilb::HField;
using hilb::HMorphism;
using hilb::Mat;

std::vector<std::string> point_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

hilb::BasePtr random_base(Rng& rng, int min_points, int max_points) {
  const int n = static_cast<int>(rng.range(min_points, max_points));
  return hilb::make_base(point_names(n));
}

HField random_field(Rng& rng, const hilb::BasePtr& base, Eigen::Index max_dim,
                    double zero_prob) {
  std::vector<Eigen::Index> dims(base->points.size());
  for (auto& d : dims) {
    d = (max_dim == 0 || rng.chance(zero_prob))
            ? 0
            : static_cast<Eigen::Index>(rng.range(1, static_cast<std::int64_t>(max_dim)));
  }
  return HField{base, std::move(dims)};
}

HMorphism random_morphism(Rng& rng, const HField& dom, const HField& cod,
                          double zero_fiber_prob, bool ensure_visible) {
  std::vector<Mat> fibers;
  fibers.reserve(dom.points());
  for (std::size_t t = 0; t < dom.points(); ++t) {
    Mat m = Mat::Zero(cod.dim(t), dom.dim(t));
    if (!rng.chance(zero_fiber_prob)) {
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.entry();
      if (ensure_visible && m.size() > 0 && hilb::operator_norm(m) < 0.5) m(0, 0) += 2.0;
    }
    fibers.push_back(std::move(m));
  }
  return hilb::make_morphism(dom, cod, std::move(fibers));
}

subunits::Subunit random_subunit(Rng& rng, const hilb::BasePtr& base, bool canonical,
                                 double point_prob) {
  subunits::Carrier c(base->points.size());
  for (std::size_t t = 0; t < c.size(); ++t)
    if (rng.chance(point_prob)) c.set(t);
  subunits::Subunit u = subunits::canonical_subunit(base, std::move(c));
  if (!canonical)
    for (std::size_t t = 0; t < u.scalars.size(); ++t)
      if (u.carrier.test(t)) u.scalars[t] = rng.nonzero_scalar();
  return u;
}

subunits::Subunit random_subunit_below(Rng& rng, const subunits::Subunit& u, bool canonical) {
  subunits::Carrier c(u.carrier.size());
  for (std::size_t t = 0; t < c.size(); ++t)
    if (u.carrier.test(t) && rng.chance(0.6)) c.set(t);
  subunits::Subunit v = subunits::canonical_subunit(u.base, std::move(c));
  if (!canonical)
    for (std::size_t t = 0; t < v.scalars.size(); ++t)
      if (v.carrier.test(t)) v.scalars[t] = rng.nonzero_scalar();
  return v;
}

HField random_local_field(Rng& rng, const subunits::Subunit& u, Eigen::Index max_dim) {
  HField e = random_field(rng, u.base, max_dim, 0.1);
  for (std::size_t t = 0; t < e.dims.size(); ++t)
    if (!u.carrier.test(t)) e.dims[t] = 0;
  return e;
}

std::pair<HMorphism, HMorphism> random_retract(Rng& rng, const HField& f) {
  std::vector<Eigen::Index> dims(f.points());
  for (std::size_t t = 0; t < dims.size(); ++t)
    dims[t] = f.dim(t) == 0 ? 0 : static_cast<Eigen::Index>(rng.range(0, f.dim(t)));
  HField e{f.base, std::move(dims)};
  std::vector<Mat> mono(f.points()), epi(f.points());
  for (std::size_t t = 0; t < f.points(); ++t) {
    const Eigen::Index rows = f.dim(t);
    const Eigen::Index cols = e.dim(t);
    if (cols == 0) {
      mono[t] = Mat(rows, 0);
      epi[t] = Mat(0, rows);
      continue;
    }
    // Q-factor columns are orthonormal, so the mono has full column rank and
    // its adjoint is already the retraction.
    Mat g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = rng.entry();
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ() * Mat::Identity(rows, cols);
    mono[t] = q;
    epi[t] = q.adjoint();
  }
  return {hilb::make_morphism(e, f, std::move(mono)), hilb::make_morphism(f, e, std::move(epi))};
}

lattice::MeetSemilattice random_semilattice(Rng& rng, int universe, int seeds) {
  if (universe > 10) throw std::invalid_argument("universe too large");
  const unsigned top = (1u << universe) - 1;
  std::vector<unsigned> family{top};
  for (int i = 0; i < seeds; ++i)
    family.push_back(static_cast<unsigned>(rng.uniform(top + 1)));
  // close under intersection
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const unsigned m = family[i] & family[j];
      bool known = false;
      for (unsigned x : family) known |= (x == m);
      if (!known) family.push_back(m);
    }
  std::vector<std::string> names;
  names.reserve(family.size());
  for (unsigned m : family) names.push_back("s" + std::to_string(m));
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      if ((family[i] & family[j]) == family[i]) leq.emplace_back(names[i], names[j]);
  return lattice::MeetSemilattice(std::move(names), leq, "s" + std::to_string(top));
}

lattice::ClosureOperator random_closure(Rng& rng,
                                        std::shared_ptr<const lattice::MeetSemilattice> carrier) {
  const auto n = static_cast<lattice::ElementId>(carrier->size());
  std::vector<bool> moore(static_cast<std::size_t>(n), false);
  moore[static_cast<std::size_t>(carrier->top())] = true;
  for (lattice::ElementId x = 0; x < n; ++x)
    if (rng.chance(0.4)) moore[static_cast<std::size_t>(x)] = true;
  // close the family under meet
  for (bool changed = true; changed;) {
    changed = false;
    for (lattice::ElementId x = 0; x < n; ++x)
      for (lattice::ElementId y = 0; y < n; ++y)
        if (moore[static_cast<std::size_t>(x)] && moore[static_cast<std::size_t>(y)]) {
          const lattice::ElementId m = carrier->meet(x, y);
          if (!moore[static_cast<std::size_t>(m)]) {
            moore[static_cast<std::size_t>(m)] = true;
            changed = true;
          }
        }
  }
  lattice::ClosureOperator c;
  c.carrier = std::move(carrier);
  c.map.resize(static_cast<std::size_t>(n));
  for (lattice::ElementId s = 0; s < n; ++s) {
    // C(s) = meet of all Moore members above s; top is always a member.
    lattice::ElementId image = c.carrier->top();
    for (lattice::ElementId m = 0; m < n; ++m)
      if (moore[static_cast<std::size_t>(m)] && c.carrier->leq(s, m))
        image = c.carrier->meet(image, m);
    c.map[static_cast<std::size_t>(s)] = image;
  }
  return c;
}

}  // namespace firmcat::gen
