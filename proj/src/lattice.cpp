#include "firmcat/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace firmcat::lattice {

namespace {

std::string subset_name(const std::vector<std::string>& points, unsigned mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (mask & (1u << i)) {
      if (!first) out += ",";
      out += points[i];
      first = false;
    }
  }
  out += "}";
  return out;
}

}  // namespace

MeetSemilattice::MeetSemilattice(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs,
    const std::string& top)
    : names_(std::move(elements)) {
  build_index();
  below_.assign(names_.size(), Bits(names_.size()));
  for (const auto& [x, y] : leq_pairs) {
    const ElementId xi = id_of(x);
    const ElementId yi = id_of(y);
    below_[static_cast<std::size_t>(yi)].set(static_cast<std::size_t>(xi));
  }
  top_ = id_of(top);
}

void MeetSemilattice::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<ElementId>(i)).second)
      throw std::invalid_argument("duplicate element id: " + names_[i]);
  }
}

MeetSemilattice MeetSemilattice::powerset(const std::vector<std::string>& points) {
  if (points.size() > 12)
    throw std::invalid_argument("powerset semilattice limited to 12 points");
  const unsigned n = static_cast<unsigned>(points.size());
  const unsigned count = 1u << n;
  MeetSemilattice l;
  l.names_.reserve(count);
  for (unsigned m = 0; m < count; ++m) l.names_.push_back(subset_name(points, m));
  l.build_index();
  l.below_.assign(count, Bits(count));
  for (unsigned a = 0; a < count; ++a)
    for (unsigned b = 0; b < count; ++b)
      if ((a & b) == a) l.below_[b].set(a);  // a ⊆ b
  l.top_ = static_cast<ElementId>(count - 1);
  return l;
}

MeetSemilattice MeetSemilattice::chain(int n) {
  if (n <= 0) throw std::invalid_argument("chain needs at least one element");
  MeetSemilattice l;
  for (int i = 0; i < n; ++i) l.names_.push_back(std::to_string(i));
  l.build_index();
  l.below_.assign(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) l.below_[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
  l.top_ = n - 1;
  return l;
}

MeetSemilattice MeetSemilattice::divisors(int n) {
  if (n <= 0) throw std::invalid_argument("divisors of a positive integer only");
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  MeetSemilattice l;
  for (int d : divs) l.names_.push_back(std::to_string(d));
  l.build_index();
  l.below_.assign(divs.size(), Bits(divs.size()));
  for (std::size_t a = 0; a < divs.size(); ++a)
    for (std::size_t b = 0; b < divs.size(); ++b)
      if (divs[b] % divs[a] == 0) l.below_[b].set(a);
  l.top_ = static_cast<ElementId>(divs.size() - 1);
  return l;
}

ElementId MeetSemilattice::id_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown element id: " + name);
  return it->second;
}

void MeetSemilattice::require_element(ElementId x) const {
  if (!contains(x)) throw std::invalid_argument("element id out of range");
}

bool MeetSemilattice::leq(ElementId x, ElementId y) const {
  require_element(x);
  require_element(y);
  return below_[static_cast<std::size_t>(y)].test(static_cast<std::size_t>(x));
}

ElementId MeetSemilattice::meet(ElementId x, ElementId y) const {
  require_element(x);
  require_element(y);
  const Bits lower = below_[static_cast<std::size_t>(x)] & below_[static_cast<std::size_t>(y)];
  // Scan high to low: in mask-ordered powersets the bound is found first try.
  for (std::size_t g = lower.size(); g-- > 0;) {
    if (lower.test(g) && lower.is_subset_of(below_[g])) return static_cast<ElementId>(g);
  }
  throw std::domain_error("pair has no greatest lower bound: " + name(x) + ", " + name(y));
}

LawReport MeetSemilattice::check() const {
  LawReport r;
  r.suite = "semilattice-axioms";
  r.cases_run = size();
  r.note_law("reflexive");
  r.note_law("antisymmetric");
  r.note_law("transitive");
  r.note_law("meets-exist");
  r.note_law("top-greatest");
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!below_[x].test(x)) {
      r.record("reflexive", false, name(static_cast<ElementId>(x)));
    }
    if (!below_[static_cast<std::size_t>(top_)].test(x)) {
      r.record("top-greatest", false, name(static_cast<ElementId>(x)));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && below_[y].test(x) && below_[x].test(y)) {
        r.record("antisymmetric", false,
                 name(static_cast<ElementId>(x)) + " <= " + name(static_cast<ElementId>(y)) +
                     " <= " + name(static_cast<ElementId>(x)));
        // one witness per pair suffices
        if (r.failures.size() > 16) return r;
      }
      // transitivity: x <= y implies below(x) ⊆ below(y)
      if (below_[y].test(x) && !below_[x].is_subset_of(below_[y])) {
        r.record("transitive", false,
                 "below(" + name(static_cast<ElementId>(x)) + ") ⊄ below(" +
                     name(static_cast<ElementId>(y)) + ")");
        if (r.failures.size() > 16) return r;
      }
    }
  }
  for (std::size_t x = 0; x < n && r.failures.empty(); ++x) {
    for (std::size_t y = x; y < n; ++y) {
      const Bits lower = below_[x] & below_[y];
      bool found = false;
      for (std::size_t g = 0; g < n && !found; ++g)
        if (lower.test(g) && lower.is_subset_of(below_[g])) found = true;
      if (!found) {
        r.record("meets-exist", false,
                 name(static_cast<ElementId>(x)) + " ∧ " + name(static_cast<ElementId>(y)));
        if (r.failures.size() > 16) return r;
      }
    }
  }
  return r;
}

std::vector<ElementId> MeetSemilattice::down_set(ElementId r) const {
  require_element(r);
  std::vector<ElementId> out;
  const Bits& b = below_[static_cast<std::size_t>(r)];
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.test(i)) out.push_back(static_cast<ElementId>(i));
  return out;
}

MeetSemilattice MeetSemilattice::sub_semilattice(const std::vector<ElementId>& keep,
                                                 ElementId new_top) const {
  MeetSemilattice l;
  std::vector<ElementId> local(size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    require_element(keep[i]);
    local[static_cast<std::size_t>(keep[i])] = static_cast<ElementId>(i);
    l.names_.push_back(name(keep[i]));
  }
  l.build_index();
  l.below_.assign(keep.size(), Bits(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (leq(keep[a], keep[b])) l.below_[b].set(a);
  if (local[static_cast<std::size_t>(new_top)] < 0)
    throw std::invalid_argument("new top not among kept elements");
  l.top_ = local[static_cast<std::size_t>(new_top)];
  return l;
}

ElementId ClosureOperator::apply(ElementId x) const {
  if (!carrier->contains(x)) throw std::invalid_argument("element id out of range");
  return map.at(static_cast<std::size_t>(x));
}

LawReport check_closure(const ClosureOperator& c) {
  LawReport r;
  r.suite = "closure-axioms";
  const auto& l = *c.carrier;
  r.cases_run = l.size();
  r.note_law("monotone");
  r.note_law("inflationary");
  r.note_law("idempotent");
  if (c.map.size() != l.size()) {
    r.record("monotone", false, "map is not total on the carrier");
    return r;
  }
  for (std::size_t s = 0; s < l.size(); ++s) {
    const ElementId cs = c.map[s];
    if (!l.contains(cs)) {
      r.record("monotone", false, "image out of range at " + l.name(static_cast<ElementId>(s)));
      return r;
    }
    if (!l.leq(static_cast<ElementId>(s), cs))
      r.record("inflationary", false,
               l.name(static_cast<ElementId>(s)) + " ≰ " + l.name(cs));
    const ElementId ccs = c.map[static_cast<std::size_t>(cs)];
    if (ccs != cs)
      r.record("idempotent", false,
               "C(C(" + l.name(static_cast<ElementId>(s)) + ")) = " + l.name(ccs) +
                   " ≠ " + l.name(cs));
  }
  for (std::size_t s = 0; s < l.size(); ++s)
    for (std::size_t t = 0; t < l.size(); ++t)
      if (l.leq(static_cast<ElementId>(s), static_cast<ElementId>(t)) &&
          !l.leq(c.map[s], c.map[t]))
        r.record("monotone", false,
                 l.name(static_cast<ElementId>(s)) + " ≤ " + l.name(static_cast<ElementId>(t)) +
                     " but C-images are not");
  return r;
}

ClosureOperator restrict_closure(const ClosureOperator& c, ElementId r) {
  const auto& l = *c.carrier;
  if (!l.contains(r)) throw std::invalid_argument("element id out of range");
  const std::vector<ElementId> keep = l.down_set(r);
  auto sub = std::make_shared<MeetSemilattice>(l.sub_semilattice(keep, r));
  std::vector<ElementId> local(l.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i)
    local[static_cast<std::size_t>(keep[i])] = static_cast<ElementId>(i);
  ClosureOperator d;
  d.carrier = sub;
  d.map.reserve(keep.size());
  for (ElementId s : keep) {
    const ElementId ds = l.meet(c.apply(s), r);  // D(s) = C(s) ∧ r, lands in the down-set
    d.map.push_back(local[static_cast<std::size_t>(ds)]);
  }
  return d;
}

LawReport check_causal_pair(const CausalStructurePair& p) {
  LawReport fut = check_closure(p.future);
  LawReport pas = check_closure(p.past);
  LawReport r;
  r.suite = "causal-pair";
  r.cases_run = fut.cases_run + pas.cases_run;
  for (const auto& law : fut.laws) r.note_law("future-" + law);
  for (const auto& law : pas.laws) r.note_law("past-" + law);
  for (auto f : fut.failures) {
    f.law = "future-" + f.law;
    r.failures.push_back(std::move(f));
  }
  for (auto f : pas.failures) {
    f.law = "past-" + f.law;
    r.failures.push_back(std::move(f));
  }
  return r;
}

std::size_t ThinCategory::arrow_count() const {
  std::size_t count = 0;
  const auto n = static_cast<ElementId>(base_->size());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (base_->leq(x, y)) ++count;
  return count;
}

void ThinCategory::compose(ElementId x, ElementId y, ElementId z) const {
  if (!hom(x, y) || !hom(y, z)) throw std::invalid_argument("no such arrows to compose");
  if (!hom(x, z)) throw std::domain_error("composite arrow missing: order not transitive");
}

ThinCategory thin_from_semilattice(const MeetSemilattice& l) {
  return ThinCategory(std::make_shared<MeetSemilattice>(l));
}

MeetSemilattice subunits_of_thin(const ThinCategory& t) {
  const auto& l = t.base();
  const auto n = static_cast<ElementId>(l.size());
  // Monos into the unit: every object has exactly one arrow to the top and
  // all arrows in a thin category are monic, so every object is a subunit.
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq_pairs;
  for (ElementId x = 0; x < n; ++x) {
    if (!t.hom(x, t.unit()))
      throw std::domain_error("object with no mono into the unit: " + l.name(x));
    if (t.tensor(x, x) != x)
      throw std::domain_error("non-idempotent subunit candidate: " + l.name(x));
    elements.push_back(l.name(x));
  }
  // Subunit order is factorization through: x ≤ y iff the arrow x -> y exists.
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (t.hom(x, y)) leq_pairs.emplace_back(l.name(x), l.name(y));
  return MeetSemilattice(std::move(elements), leq_pairs, l.name(t.unit()));
}

}  // namespace firmcat::lattice
