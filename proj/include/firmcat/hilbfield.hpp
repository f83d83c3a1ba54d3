#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace firmcat::hilb {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;

/// Relative threshold for rank/iso/equality decisions throughout the float
/// model, and the absolute threshold for support.
inline constexpr double kDefaultTol = 1e-9;

/// Finite discrete base space. Shared by objects and morphisms; equality is
/// by point list so independently loaded bases compare equal.
struct BaseSpace {
  std::vector<std::string> points;

  int id_of(const std::string& name) const;
  friend bool operator==(const BaseSpace&, const BaseSpace&) = default;
};

using BasePtr = std::shared_ptr<const BaseSpace>;

BasePtr make_base(std::vector<std::string> points);
bool same_base(const BasePtr& a, const BasePtr& b);

/// An object: one finite-dimensional complex space per base point, recorded
/// by dimension. Zero-dimensional fibers are first-class.
struct HField {
  BasePtr base;
  std::vector<Eigen::Index> dims;

  Eigen::Index dim(std::size_t t) const { return dims.at(t); }
  std::size_t points() const { return dims.size(); }
  friend bool operator==(const HField& a, const HField& b) {
    return same_base(a.base, b.base) && a.dims == b.dims;
  }
};

/// A morphism: one cod.dim(t) × dom.dim(t) complex matrix per point.
struct HMorphism {
  HField dom;
  HField cod;
  std::vector<Mat> fibers;

  const Mat& fiber(std::size_t t) const { return fibers.at(t); }
};

/// Validates fiber shapes against dom/cod dims; throws on mismatch.
HMorphism make_morphism(HField dom, HField cod, std::vector<Mat> fibers);

HField unit_field(const BasePtr& base);                     // I: dim ≡ 1
HField zero_field(const BasePtr& base);                     // 0: dim ≡ 0
HField constant_field(const BasePtr& base, Eigen::Index d); // dim ≡ d

HMorphism identity(const HField& e);
HMorphism zero_morphism(const HField& e, const HField& f);
HMorphism scale(Complex c, const HMorphism& f);

/// g ∘ f, pointwise matrix product. Shapes must agree.
HMorphism compose(const HMorphism& g, const HMorphism& f);

/// Tensor on objects: dims multiply pointwise. Same base required.
HField tensor_ob(const HField& e, const HField& f);

/// Kronecker product with the fixed row-major convention
/// C(i1·r2+i2, j1·c2+j2) = A(i1,j1)·B(i2,j2). All coherence isomorphisms in
/// this model are identities under this convention.
Mat kron(const Mat& a, const Mat& b);

/// Tensor on morphisms: fiberwise Kronecker product.
HMorphism tensor_mor(const HMorphism& f, const HMorphism& g);

/// The symmetry E⊗F → F⊗E, fiberwise the factor-swap permutation matrix.
HMorphism braiding(const HField& e, const HField& f);

/// Full column rank at every fiber (pivoted QR with relative threshold tol).
bool is_mono(const HMorphism& f, double tol = kDefaultTol);

/// Square and invertible at every fiber.
bool is_iso(const HMorphism& f, double tol = kDefaultTol);

/// Pointwise inverse; throws if is_iso fails.
HMorphism invert(const HMorphism& f, double tol = kDefaultTol);

/// Dual pair for the constant field of dimension d: unit η: I → D⊗D with
/// η_t = Σ_i e_i⊗e_i and counit ε: D⊗D → I with ε_t = Σ_i e_i*⊗e_i*
/// (unnormalized, so the snake composites are exactly the identity).
HMorphism dual_unit(const BasePtr& base, Eigen::Index d);
HMorphism dual_counit(const BasePtr& base, Eigen::Index d);

/// Largest singular value; 0 for empty matrices.
double operator_norm(const Mat& m);

/// max_t ‖f_t − g_t‖_∞ entrywise; throws on shape mismatch.
double deviation(const HMorphism& f, const HMorphism& g);

/// Deviation of f from the identity (dom and cod dims must agree).
double deviation_from_identity(const HMorphism& f);

}  // namespace firmcat::hilb
