#pragma once

#include <boost/dynamic_bitset.hpp>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "firmcat/report.hpp"

namespace firmcat::lattice {

using ElementId = int;
using Bits = boost::dynamic_bitset<>;

/// Finite meet-semilattice given by an explicit order relation. The relation
/// is stored exactly as supplied — meet is computed by scanning lower bounds,
/// and check() reports whether the data actually is a semilattice. The named
/// constructors below always build valid ones.
class MeetSemilattice {
 public:
  MeetSemilattice(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                  const std::string& top);

  /// All subsets of `points` ordered by inclusion. Element names look like
  /// "{a,b}"; element order is by subset bitmask. Guarded at 12 points.
  static MeetSemilattice powerset(const std::vector<std::string>& points);

  /// Total order 0 < 1 < ... < n-1 with elements named "0".."n-1".
  static MeetSemilattice chain(int n);

  /// Divisors of n ordered by divisibility (meet = gcd).
  static MeetSemilattice divisors(int n);

  std::size_t size() const { return names_.size(); }
  ElementId top() const { return top_; }
  const std::string& name(ElementId x) const { return names_.at(static_cast<std::size_t>(x)); }
  ElementId id_of(const std::string& name) const;  // unknown name -> invalid_argument
  bool contains(ElementId x) const { return x >= 0 && static_cast<std::size_t>(x) < size(); }

  bool leq(ElementId x, ElementId y) const;

  /// Greatest lower bound, found by scanning the common lower bounds.
  /// Precondition: the relation passes check(). Unknown ids throw.
  ElementId meet(ElementId x, ElementId y) const;

  /// Reflexivity, antisymmetry, transitivity, existence of binary meets, and
  /// top being the greatest element, each PASS or a concrete witness.
  LawReport check() const;

  /// Element ids of the down-set {s | s <= r}, ascending.
  std::vector<ElementId> down_set(ElementId r) const;

  /// The down-set {s | s <= r} as a semilattice of its own; names are kept.
  MeetSemilattice sub_semilattice(const std::vector<ElementId>& keep,
                                  ElementId new_top) const;

 private:
  MeetSemilattice() = default;
  void build_index();
  void require_element(ElementId x) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<Bits> below_;  // below_[x] = { z | z <= x }
  ElementId top_ = 0;
};

/// Monotone, inflationary, idempotent self-map on a semilattice. The carrier
/// is shared; values are immutable once built.
struct ClosureOperator {
  std::shared_ptr<const MeetSemilattice> carrier;
  std::vector<ElementId> map;

  ElementId apply(ElementId x) const;
};

/// Checks the three closure axioms, reporting PASS or a witness pair per axiom.
LawReport check_closure(const ClosureOperator& c);

/// The restricted operator D(s) = C(s) ∧ r on the down-set of r.
ClosureOperator restrict_closure(const ClosureOperator& c, ElementId r);

/// A future/past pair of closure operators on one carrier.
struct CausalStructurePair {
  ClosureOperator future;
  ClosureOperator past;
};

LawReport check_causal_pair(const CausalStructurePair& p);

/// The free firm symmetric monoidal category on a semilattice: objects are
/// the elements, there is one arrow x -> y exactly when x <= y, tensor is
/// meet and the unit is top. Every arrow is monic.
class ThinCategory {
 public:
  explicit ThinCategory(std::shared_ptr<const MeetSemilattice> base)
      : base_(std::move(base)) {}

  const MeetSemilattice& base() const { return *base_; }
  std::shared_ptr<const MeetSemilattice> base_ptr() const { return base_; }

  bool hom(ElementId x, ElementId y) const { return base_->leq(x, y); }
  std::size_t arrow_count() const;
  ElementId tensor(ElementId x, ElementId y) const { return base_->meet(x, y); }
  ElementId unit() const { return base_->top(); }

  /// Composition of x -> y and y -> z; throws if either arrow is missing.
  void compose(ElementId x, ElementId y, ElementId z) const;

 private:
  std::shared_ptr<const MeetSemilattice> base_;
};

ThinCategory thin_from_semilattice(const MeetSemilattice& l);

/// Recovers the semilattice of subunits of a thin category: monos into the
/// unit, ordered by factorization, with idempotence x ∧ x = x verified along
/// the way. Round-trips thin_from_semilattice up to identical names.
MeetSemilattice subunits_of_thin(const ThinCategory& t);

}  // namespace firmcat::lattice
