#include "firmcat/hilbfield.hpp"

#include <stdexcept>
#include <utility>

namespace firmcat::hilb {

int BaseSpace::id_of(const std::string& name) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown base point: " + name);
}

BasePtr make_base(std::vector<std::string> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("duplicate base point: " + points[i]);
  return std::make_shared<const BaseSpace>(BaseSpace{std::move(points)});
}

bool same_base(const BasePtr& a, const BasePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void require_same_base(const BasePtr& a, const BasePtr& b) {
  if (!same_base(a, b)) throw std::invalid_argument("base space mismatch");
}

HField field_with_dims(const BasePtr& base, Eigen::Index d) {
  if (!base) throw std::invalid_argument("null base space");
  if (d < 0) throw std::invalid_argument("negative fiber dimension");
  return HField{base, std::vector<Eigen::Index>(base->points.size(), d)};
}

}  // namespace

HMorphism make_morphism(HField dom, HField cod, std::vector<Mat> fibers) {
  require_same_base(dom.base, cod.base);
  if (fibers.size() != dom.points())
    throw std::invalid_argument("fiber count does not match the base");
  for (std::size_t t = 0; t < fibers.size(); ++t) {
    if (fibers[t].rows() != cod.dim(t) || fibers[t].cols() != dom.dim(t))
      throw std::invalid_argument("fiber shape mismatch at point " + dom.base->points[t]);
  }
  return HMorphism{std::move(dom), std::move(cod), std::move(fibers)};
}

HField unit_field(const BasePtr& base) { return field_with_dims(base, 1); }
HField zero_field(const BasePtr& base) { return field_with_dims(base, 0); }
HField constant_field(const BasePtr& base, Eigen::Index d) { return field_with_dims(base, d); }

HMorphism identity(const HField& e) {
  std::vector<Mat> fibers;
  fibers.reserve(e.points());
  for (std::size_t t = 0; t < e.points(); ++t)
    fibers.push_back(Mat::Identity(e.dim(t), e.dim(t)));
  return HMorphism{e, e, std::move(fibers)};
}

HMorphism zero_morphism(const HField& e, const HField& f) {
  require_same_base(e.base, f.base);
  std::vector<Mat> fibers;
  fibers.reserve(e.points());
  for (std::size_t t = 0; t < e.points(); ++t)
    fibers.push_back(Mat::Zero(f.dim(t), e.dim(t)));
  return HMorphism{e, f, std::move(fibers)};
}

HMorphism scale(Complex c, const HMorphism& f) {
  std::vector<Mat> fibers;
  fibers.reserve(f.fibers.size());
  for (const auto& m : f.fibers) fibers.push_back(c * m);
  return HMorphism{f.dom, f.cod, std::move(fibers)};
}

HMorphism compose(const HMorphism& g, const HMorphism& f) {
  if (!(f.cod == g.dom)) throw std::invalid_argument("composition shape mismatch");
  std::vector<Mat> fibers;
  fibers.reserve(f.fibers.size());
  for (std::size_t t = 0; t < f.fibers.size(); ++t)
    fibers.push_back(g.fiber(t) * f.fiber(t));
  return HMorphism{f.dom, g.cod, std::move(fibers)};
}

HField tensor_ob(const HField& e, const HField& f) {
  require_same_base(e.base, f.base);
  std::vector<Eigen::Index> dims;
  dims.reserve(e.points());
  for (std::size_t t = 0; t < e.points(); ++t) dims.push_back(e.dim(t) * f.dim(t));
  return HField{e.base, std::move(dims)};
}

Mat kron(const Mat& a, const Mat& b) {
  Mat c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return c;
}

HMorphism tensor_mor(const HMorphism& f, const HMorphism& g) {
  require_same_base(f.dom.base, g.dom.base);
  std::vector<Mat> fibers;
  fibers.reserve(f.fibers.size());
  for (std::size_t t = 0; t < f.fibers.size(); ++t)
    fibers.push_back(kron(f.fiber(t), g.fiber(t)));
  return HMorphism{tensor_ob(f.dom, g.dom), tensor_ob(f.cod, g.cod), std::move(fibers)};
}

HMorphism braiding(const HField& e, const HField& f) {
  require_same_base(e.base, f.base);
  std::vector<Mat> fibers;
  fibers.reserve(e.points());
  for (std::size_t t = 0; t < e.points(); ++t) {
    const Eigen::Index de = e.dim(t);
    const Eigen::Index df = f.dim(t);
    Mat p = Mat::Zero(de * df, de * df);
    for (Eigen::Index i = 0; i < de; ++i)
      for (Eigen::Index j = 0; j < df; ++j) p(j * de + i, i * df + j) = 1.0;
    fibers.push_back(std::move(p));
  }
  return HMorphism{tensor_ob(e, f), tensor_ob(f, e), std::move(fibers)};
}

namespace {

Eigen::Index rank_of(const Mat& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::ColPivHouseholderQR<Mat> qr(m);
  qr.setThreshold(tol);
  return qr.rank();
}

}  // namespace

bool is_mono(const HMorphism& f, double tol) {
  for (const auto& m : f.fibers)
    if (rank_of(m, tol) != m.cols()) return false;
  return true;
}

bool is_iso(const HMorphism& f, double tol) {
  for (const auto& m : f.fibers) {
    if (m.rows() != m.cols()) return false;
    if (rank_of(m, tol) != m.rows()) return false;
  }
  return true;
}

HMorphism invert(const HMorphism& f, double tol) {
  if (!is_iso(f, tol)) throw std::invalid_argument("morphism is not an isomorphism");
  std::vector<Mat> fibers;
  fibers.reserve(f.fibers.size());
  for (const auto& m : f.fibers)
    fibers.push_back(m.rows() == 0 ? Mat(0, 0) : Mat(m.partialPivLu().inverse()));
  return HMorphism{f.cod, f.dom, std::move(fibers)};
}

HMorphism dual_unit(const BasePtr& base, Eigen::Index d) {
  HField i = unit_field(base);
  HField dd = constant_field(base, d * d);
  std::vector<Mat> fibers;
  fibers.reserve(base->points.size());
  for (std::size_t t = 0; t < base->points.size(); ++t) {
    Mat eta = Mat::Zero(d * d, 1);
    for (Eigen::Index k = 0; k < d; ++k) eta(k * d + k, 0) = 1.0;
    fibers.push_back(std::move(eta));
  }
  return HMorphism{std::move(i), std::move(dd), std::move(fibers)};
}

HMorphism dual_counit(const BasePtr& base, Eigen::Index d) {
  HField dd = constant_field(base, d * d);
  HField i = unit_field(base);
  std::vector<Mat> fibers;
  fibers.reserve(base->points.size());
  for (std::size_t t = 0; t < base->points.size(); ++t) {
    Mat eps = Mat::Zero(1, d * d);
    for (Eigen::Index k = 0; k < d; ++k) eps(0, k * d + k) = 1.0;
    fibers.push_back(std::move(eps));
  }
  return HMorphism{std::move(dd), std::move(i), std::move(fibers)};
}

double operator_norm(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

double deviation(const HMorphism& f, const HMorphism& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw std::invalid_argument("deviation between morphisms of different shape");
  double dev = 0.0;
  for (std::size_t t = 0; t < f.fibers.size(); ++t) {
    const Mat diff = f.fiber(t) - g.fiber(t);
    if (diff.size() > 0) dev = std::max(dev, diff.cwiseAbs().maxCoeff());
  }
  return dev;
}

double deviation_from_identity(const HMorphism& f) {
  if (!(f.dom.dims == f.cod.dims))
    throw std::invalid_argument("identity comparison needs equal dims");
  double dev = 0.0;
  for (const auto& m : f.fibers) {
    if (m.size() == 0) continue;
    const Mat diff = m - Mat::Identity(m.rows(), m.cols());
    dev = std::max(dev, diff.cwiseAbs().maxCoeff());
  }
  return dev;
}

}  // namespace firmcat::hilb
