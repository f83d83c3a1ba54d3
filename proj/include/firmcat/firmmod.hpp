#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "firmcat/report.hpp"
#include "firmcat/runner.hpp"

namespace firmcat::firmmod {

using Rational = boost::multiprecision::cpp_rational;

/// Dense rational matrix; all arithmetic in this module is exact.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMat operator*(const RatMat& other) const;
  friend bool operator==(const RatMat&, const RatMat&) = default;

  /// Row-major Kronecker product, same convention as the float model.
  RatMat kron(const RatMat& other) const;

  /// Exact rank by Gaussian elimination.
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// A nondegenerate firm idempotent ideal of R = Q × ... × Q (the finite
/// truncation of an infinite direct sum of unital rings): the families
/// supported on a subset of the components.
struct IdempotentIdeal {
  int components = 0;
  std::uint32_t support = 0;

  bool contains(int i) const { return (support >> i) & 1u; }
};

/// An object of FMod_R: a rational vector space per component.
struct FModObject {
  std::vector<int> dims;

  int components() const { return static_cast<int>(dims.size()); }
  friend bool operator==(const FModObject&, const FModObject&) = default;
};

struct FModMorphism {
  FModObject dom;
  FModObject cod;
  std::vector<RatMat> mats;

  friend bool operator==(const FModMorphism&, const FModMorphism&) = default;
};

FModMorphism fm_identity(const FModObject& e);
FModMorphism fm_compose(const FModMorphism& g, const FModMorphism& f);
FModObject fm_tensor(const FModObject& e, const FModObject& f);
FModMorphism fm_tensor(const FModMorphism& f, const FModMorphism& g);

/// Exact checks behind the ideal enumeration.
bool ideal_idempotent(const IdempotentIdeal& s);    // S·S = S
bool ideal_firm(const IdempotentIdeal& s);          // S ⊗ R → S bijective
bool ideal_nondegenerate(const IdempotentIdeal& s); // nothing killed by all of R

/// All subunit monos into R up to subobject equivalence, by brute force over
/// component-supported submodule shapes; exactly the power set of the
/// components. n is capped at 5.
std::vector<IdempotentIdeal> enumerate_subunits(int n);

/// Restriction endofunctor on FMod_R: zero the components off S.
FModObject restrict_to_ideal(const FModObject& e, const IdempotentIdeal& s);
FModMorphism restrict_to_ideal(const FModMorphism& f, const IdempotentIdeal& s);

/// The equivalence FMod_R|_S ≃ FMod_S: down reindexes a local object onto
/// S's own components, induce extends an FMod_S object back by zero.
FModObject to_ideal_module(const FModObject& e, const IdempotentIdeal& s);
FModMorphism to_ideal_module(const FModMorphism& f, const IdempotentIdeal& s);
FModObject induce_from(const FModObject& f_over_s, const IdempotentIdeal& s);
FModMorphism induce_from(const FModMorphism& g_over_s, const IdempotentIdeal& s);

/// Round-trip natural isomorphisms, functoriality and monoidality of the
/// equivalence, all as exact equalities.
LawReport equivalence_report(int n, std::size_t samples, std::uint64_t seed,
                             ExecMode mode = ExecMode::Parallel);

/// The subunit calculus of FMod_R: meets are support intersections and every
/// subunit pair stays monic after tensoring (exact ranks).
LawReport firm_ring_report(int n, std::size_t samples, std::uint64_t seed,
                           ExecMode mode = ExecMode::Parallel);

}  // namespace firmcat::firmmod
