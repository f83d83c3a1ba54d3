#include "firmcat/firmmod.hpp"

#include <stdexcept>
#include <string>

#include "firmcat/rng.hpp"

namespace firmcat::firmmod {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("rational matrix shape mismatch");
  RatMat out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += at(i, k) * other.at(k, j);
    }
  return out;
}

RatMat RatMat::kron(const RatMat& other) const {
  RatMat out(rows_ * other.rows_, cols_ * other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) == 0) continue;
      for (std::size_t k = 0; k < other.rows_; ++k)
        for (std::size_t l = 0; l < other.cols_; ++l)
          out.at(i * other.rows_ + k, j * other.cols_ + l) = at(i, j) * other.at(k, l);
    }
  return out;
}

std::size_t RatMat::rank() const {
  std::vector<Rational> work = a_;
  auto entry = [&](std::size_t i, std::size_t j) -> Rational& { return work[i * cols_ + j]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && entry(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(entry(rank, j), entry(pivot, j));
    const Rational lead = entry(rank, col);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (entry(i, col) == 0) continue;
      const Rational factor = entry(i, col) / lead;
      for (std::size_t j = col; j < cols_; ++j) entry(i, j) -= factor * entry(rank, j);
    }
    ++rank;
  }
  return rank;
}

FModMorphism fm_identity(const FModObject& e) {
  std::vector<RatMat> mats;
  mats.reserve(e.dims.size());
  for (int d : e.dims) mats.push_back(RatMat::identity(static_cast<std::size_t>(d)));
  return FModMorphism{e, e, std::move(mats)};
}

FModMorphism fm_compose(const FModMorphism& g, const FModMorphism& f) {
  if (!(f.cod == g.dom)) throw std::invalid_argument("composition shape mismatch");
  std::vector<RatMat> mats;
  mats.reserve(f.mats.size());
  for (std::size_t i = 0; i < f.mats.size(); ++i) mats.push_back(g.mats[i] * f.mats[i]);
  return FModMorphism{f.dom, g.cod, std::move(mats)};
}

FModObject fm_tensor(const FModObject& e, const FModObject& f) {
  if (e.dims.size() != f.dims.size()) throw std::invalid_argument("component count mismatch");
  FModObject out;
  out.dims.reserve(e.dims.size());
  for (std::size_t i = 0; i < e.dims.size(); ++i) out.dims.push_back(e.dims[i] * f.dims[i]);
  return out;
}

FModMorphism fm_tensor(const FModMorphism& f, const FModMorphism& g) {
  std::vector<RatMat> mats;
  mats.reserve(f.mats.size());
  for (std::size_t i = 0; i < f.mats.size(); ++i) mats.push_back(f.mats[i].kron(g.mats[i]));
  return FModMorphism{fm_tensor(f.dom, g.dom), fm_tensor(f.cod, g.cod), std::move(mats)};
}

bool ideal_idempotent(const IdempotentIdeal& s) {
  // span of the basis products e_i · e_j = δ_ij e_i must be all of S
  std::uint32_t product_support = 0;
  for (int i = 0; i < s.components; ++i)
    for (int j = 0; j < s.components; ++j)
      if (s.contains(i) && s.contains(j) && i == j) product_support |= 1u << i;
  return product_support == s.support;
}

bool ideal_firm(const IdempotentIdeal& s) {
  // scalar multiplication S ⊗ R → S is componentwise Q ⊗ Q → Q; bijective
  // exactly when the 1×1 action matrix has full rank on every component
  for (int i = 0; i < s.components; ++i) {
    if (!s.contains(i)) continue;
    RatMat action(1, 1);
    action.at(0, 0) = 1;  // e_i · 1_i
    if (action.rank() != 1) return false;
  }
  return true;
}

bool ideal_nondegenerate(const IdempotentIdeal& s) {
  // every basis element of S must survive multiplication by some ring
  // element; e_i · e_j = δ_ij e_i, so the witness is e_i itself
  for (int i = 0; i < s.components; ++i) {
    if (!s.contains(i)) continue;
    bool survives = false;
    for (int j = 0; j < s.components && !survives; ++j)
      survives = (i == j) && Rational(1) != 0;
    if (!survives) return false;
  }
  return true;
}

std::vector<IdempotentIdeal> enumerate_subunits(int n) {
  if (n < 0 || n > 5) throw std::invalid_argument("subunit enumeration limited to 5 components");
  std::vector<IdempotentIdeal> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    IdempotentIdeal s{n, mask};
    if (ideal_idempotent(s) && ideal_firm(s) && ideal_nondegenerate(s)) out.push_back(s);
  }
  return out;
}

FModObject restrict_to_ideal(const FModObject& e, const IdempotentIdeal& s) {
  FModObject out = e;
  for (int i = 0; i < out.components(); ++i)
    if (!s.contains(i)) out.dims[static_cast<std::size_t>(i)] = 0;
  return out;
}

FModMorphism restrict_to_ideal(const FModMorphism& f, const IdempotentIdeal& s) {
  FModMorphism out{restrict_to_ideal(f.dom, s), restrict_to_ideal(f.cod, s), {}};
  out.mats.reserve(f.mats.size());
  for (int i = 0; i < f.dom.components(); ++i)
    out.mats.push_back(s.contains(i) ? f.mats[static_cast<std::size_t>(i)] : RatMat(0, 0));
  return out;
}

FModObject to_ideal_module(const FModObject& e, const IdempotentIdeal& s) {
  FModObject out;
  for (int i = 0; i < e.components(); ++i) {
    if (s.contains(i))
      out.dims.push_back(e.dims[static_cast<std::size_t>(i)]);
    else if (e.dims[static_cast<std::size_t>(i)] != 0)
      throw std::invalid_argument("object is not local to the ideal");
  }
  return out;
}

FModMorphism to_ideal_module(const FModMorphism& f, const IdempotentIdeal& s) {
  FModMorphism out{to_ideal_module(f.dom, s), to_ideal_module(f.cod, s), {}};
  for (int i = 0; i < f.dom.components(); ++i)
    if (s.contains(i)) out.mats.push_back(f.mats[static_cast<std::size_t>(i)]);
  return out;
}

FModObject induce_from(const FModObject& f_over_s, const IdempotentIdeal& s) {
  FModObject out;
  out.dims.assign(static_cast<std::size_t>(s.components), 0);
  std::size_t k = 0;
  for (int i = 0; i < s.components; ++i)
    if (s.contains(i)) out.dims[static_cast<std::size_t>(i)] = f_over_s.dims.at(k++);
  if (k != f_over_s.dims.size())
    throw std::invalid_argument("component count does not match the ideal");
  return out;
}

FModMorphism induce_from(const FModMorphism& g, const IdempotentIdeal& s) {
  FModMorphism out{induce_from(g.dom, s), induce_from(g.cod, s), {}};
  std::size_t k = 0;
  for (int i = 0; i < s.components; ++i)
    out.mats.push_back(s.contains(i) ? g.mats.at(k++) : RatMat(0, 0));
  return out;
}

namespace {

FModObject random_object(Rng& rng, int n, int max_dim) {
  FModObject e;
  for (int i = 0; i < n; ++i) e.dims.push_back(static_cast<int>(rng.range(0, max_dim)));
  return e;
}

FModObject random_local_object(Rng& rng, const IdempotentIdeal& s, int max_dim) {
  FModObject e = random_object(rng, s.components, max_dim);
  for (int i = 0; i < s.components; ++i)
    if (!s.contains(i)) e.dims[static_cast<std::size_t>(i)] = 0;
  return e;
}

Rational random_rational(Rng& rng) {
  return Rational(rng.range(-9, 9), rng.range(1, 9));
}

FModMorphism random_morphism(Rng& rng, const FModObject& dom, const FModObject& cod) {
  std::vector<RatMat> mats;
  for (int i = 0; i < dom.components(); ++i) {
    RatMat m(static_cast<std::size_t>(cod.dims[static_cast<std::size_t>(i)]),
             static_cast<std::size_t>(dom.dims[static_cast<std::size_t>(i)]));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = random_rational(rng);
    mats.push_back(std::move(m));
  }
  return FModMorphism{dom, cod, std::move(mats)};
}

IdempotentIdeal random_ideal(Rng& rng, int n) {
  return IdempotentIdeal{n, static_cast<std::uint32_t>(rng.uniform(1u << n))};
}

}  // namespace

LawReport equivalence_report(int n, std::size_t samples, std::uint64_t seed, ExecMode mode) {
  if (n < 0 || n > 5) throw std::invalid_argument("equivalence report limited to 5 components");
  LawReport r = run_cases(
      "fmod-equivalence", samples, seed, mode, [&](std::size_t, Rng& rng, CaseRecorder& rec) {
        const IdempotentIdeal s = random_ideal(rng, n);

        FModObject e1 = random_local_object(rng, s, 3);
        FModObject e2 = random_local_object(rng, s, 3);
        FModObject e3 = random_local_object(rng, s, 3);
        FModMorphism f = random_morphism(rng, e1, e2);
        FModMorphism g = random_morphism(rng, e2, e3);

        // round trip on FMod_R|_S: induce ∘ down is the identity on local data
        rec.require("roundtrip-local-object", induce_from(to_ideal_module(e1, s), s) == e1);
        rec.require("roundtrip-local-morphism", induce_from(to_ideal_module(f, s), s) == f);

        // round trip on FMod_S
        FModObject fs = to_ideal_module(e1, s);
        rec.require("roundtrip-ideal-object", to_ideal_module(induce_from(fs, s), s) == fs);

        // both directions are functors
        rec.require("down-functorial",
                    to_ideal_module(fm_compose(g, f), s) ==
                        fm_compose(to_ideal_module(g, s), to_ideal_module(f, s)));
        FModMorphism fs_mor = to_ideal_module(f, s);
        FModMorphism gs_mor = to_ideal_module(g, s);
        rec.require("induce-functorial",
                    induce_from(fm_compose(gs_mor, fs_mor), s) ==
                        fm_compose(induce_from(gs_mor, s), induce_from(fs_mor, s)));
        rec.require("identity-preserved",
                    to_ideal_module(fm_identity(e1), s) == fm_identity(fs));

        // monoidality: tensor is preserved componentwise, on the nose
        rec.require("monoidal-objects",
                    to_ideal_module(fm_tensor(e1, e2), s) == fm_tensor(to_ideal_module(e1, s),
                                                                       to_ideal_module(e2, s)));
        FModMorphism f2 = random_morphism(rng, e2, e3);
        rec.require("monoidal-morphisms",
                    to_ideal_module(fm_tensor(f, f2), s) ==
                        fm_tensor(to_ideal_module(f, s), to_ideal_module(f2, s)));

        // restriction of an arbitrary object is exactly the induced round trip
        FModObject any = random_object(rng, n, 3);
        rec.require("restrict-is-roundtrip",
                    restrict_to_ideal(any, s) ==
                        induce_from(to_ideal_module(restrict_to_ideal(any, s), s), s));

        // naturality of the round-trip isomorphism (identity components):
        // restriction then induction acts on morphisms exactly as restrict
        rec.require("roundtrip-natural",
                    induce_from(to_ideal_module(restrict_to_ideal(g, s), s), s) ==
                        restrict_to_ideal(g, s));
      });
  r.laws = {"roundtrip-local-object", "roundtrip-local-morphism", "roundtrip-ideal-object",
            "down-functorial",        "induce-functorial",        "identity-preserved",
            "monoidal-objects",       "monoidal-morphisms",       "restrict-is-roundtrip",
            "roundtrip-natural"};
  return r;
}

LawReport firm_ring_report(int n, std::size_t samples, std::uint64_t seed, ExecMode mode) {
  if (n < 0 || n > 5) throw std::invalid_argument("firm ring report limited to 5 components");
  LawReport r = run_cases(
      "firm-rings", samples, seed, mode, [&](std::size_t, Rng& rng, CaseRecorder& rec) {
        const auto ideals = enumerate_subunits(n);
        rec.require("power-set-count", ideals.size() == (std::size_t{1} << n));
        for (const auto& s : ideals) {
          rec.require("ideal-idempotent", ideal_idempotent(s));
          rec.require("ideal-unital", [&] {
            // the family supported at S has the ring unit Σ_{i∈S} e_i
            std::uint32_t unit_support = 0;
            for (int i = 0; i < n; ++i)
              if (s.contains(i)) unit_support |= 1u << i;
            return unit_support == s.support;
          }());
        }

        // firmness: s ⊗ id_T stays injective for every ordered subunit pair
        const IdempotentIdeal s = random_ideal(rng, n);
        const IdempotentIdeal t = random_ideal(rng, n);
        FModObject s_ob, t_ob, unit;
        for (int i = 0; i < n; ++i) {
          s_ob.dims.push_back(s.contains(i) ? 1 : 0);
          t_ob.dims.push_back(t.contains(i) ? 1 : 0);
          unit.dims.push_back(1);
        }
        FModMorphism mono{s_ob, unit, {}};
        for (int i = 0; i < n; ++i) {
          RatMat m(1, s.contains(i) ? 1 : 0);
          if (s.contains(i)) m.at(0, 0) = 1;
          mono.mats.push_back(std::move(m));
        }
        FModMorphism tensored = fm_tensor(mono, fm_identity(t_ob));
        bool monic = true;
        for (const auto& m : tensored.mats) monic = monic && m.rank() == m.cols();
        rec.require("pair-firm", monic);

        // subunit semilattice is the power set under intersection
        const IdempotentIdeal meet{n, s.support & t.support};
        FModObject meet_ob = fm_tensor(s_ob, t_ob);
        FModObject expect;
        for (int i = 0; i < n; ++i) expect.dims.push_back(meet.contains(i) ? 1 : 0);
        rec.require("meet-is-intersection", meet_ob == expect);
      });
  r.laws = {"power-set-count", "ideal-idempotent", "ideal-unital",
            "pair-firm",       "meet-is-intersection"};
  return r;
}

}  // namespace firmcat::firmmod
