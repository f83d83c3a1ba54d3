#include "firmcat/suites.hpp"

#include <stdexcept>

#include "firmcat/causal.hpp"
#include "firmcat/firmmod.hpp"
#include "firmcat/generators.hpp"
#include "firmcat/json_io.hpp"
#include "firmcat/lattice.hpp"
#include "firmcat/protocol.hpp"
#include "firmcat/restriction.hpp"
#include "firmcat/subunits.hpp"

namespace firmcat::suites {

namespace {

using causal::Mask;
using hilb::HField;
using hilb::HMorphism;
using subunits::Subunit;

std::size_t pick(std::size_t requested, std::size_t fallback) {
  return requested == 0 ? fallback : requested;
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

Subunit mask_subunit(const hilb::BasePtr& base, unsigned mask, Rng* scramble) {
  subunits::Carrier c(base->points.size());
  for (std::size_t t = 0; t < base->points.size(); ++t)
    if (mask & (1u << t)) c.set(t);
  Subunit u = subunits::canonical_subunit(base, std::move(c));
  if (scramble)
    for (std::size_t t = 0; t < u.scalars.size(); ++t)
      if (u.carrier.test(t)) u.scalars[t] = scramble->nonzero_scalar();
  return u;
}

// ---------------------------------------------------------------- semilattice

std::vector<lattice::MeetSemilattice> structured_semilattices() {
  std::vector<lattice::MeetSemilattice> out;
  for (int n = 1; n <= 6; ++n) out.push_back(lattice::MeetSemilattice::chain(n));
  out.push_back(lattice::MeetSemilattice::powerset({}));
  out.push_back(lattice::MeetSemilattice::powerset({"a"}));
  out.push_back(lattice::MeetSemilattice::powerset({"a", "b"}));
  out.push_back(lattice::MeetSemilattice::divisors(12));
  out.push_back(lattice::MeetSemilattice::divisors(18));
  out.push_back(lattice::MeetSemilattice::divisors(16));
  return out;
}

void meet_laws_exhaustive(const lattice::MeetSemilattice& l, LawReport& r) {
  const auto n = static_cast<lattice::ElementId>(l.size());
  for (lattice::ElementId x = 0; x < n; ++x) {
    r.record("meet-unital", l.meet(x, l.top()) == x, l.name(x));
    r.record("meet-idempotent", l.meet(x, x) == x, l.name(x));
    for (lattice::ElementId y = 0; y < n; ++y) {
      const lattice::ElementId xy = l.meet(x, y);
      r.record("meet-commutative", xy == l.meet(y, x), l.name(x) + "," + l.name(y));
      r.record("meet-lower-bound", l.leq(xy, x) && l.leq(xy, y), l.name(x) + "," + l.name(y));
      for (lattice::ElementId z = 0; z < n; ++z) {
        ++r.cases_run;
        r.record("meet-associative", l.meet(xy, z) == l.meet(x, l.meet(y, z)),
                 l.name(x) + "," + l.name(y) + "," + l.name(z));
      }
    }
  }
}

LawReport semilattice_structured(const SuiteConfig&) {
  LawReport r;
  r.suite = "semilattice-structured";
  r.laws = {"lattice-valid",   "meet-unital",      "meet-idempotent", "meet-commutative",
            "meet-lower-bound", "meet-associative", "thin-roundtrip"};
  for (const auto& l : structured_semilattices()) {
    r.record("lattice-valid", l.check().passed(), "n=" + std::to_string(l.size()));
    meet_laws_exhaustive(l, r);
    // free firm SMC round trip: subunits of the thin category give back L
    const lattice::MeetSemilattice back =
        lattice::subunits_of_thin(lattice::thin_from_semilattice(l));
    bool same = back.size() == l.size();
    for (lattice::ElementId x = 0; same && x < static_cast<lattice::ElementId>(l.size()); ++x) {
      same = back.name(x) == l.name(x);
      for (lattice::ElementId y = 0; same && y < static_cast<lattice::ElementId>(l.size()); ++y)
        same = back.leq(x, y) == l.leq(x, y);
    }
    r.record("thin-roundtrip", same, "n=" + std::to_string(l.size()));
  }
  return r;
}

LawReport subunit_semilattice_exhaustive(const SuiteConfig& config) {
  LawReport r;
  r.suite = "subunit-semilattice-exhaustive";
  r.laws = {"carrier-intersection", "carrier-unit", "carrier-idempotent",
            "carrier-commutative",  "meet-below-both"};
  Rng scramble(mix_seed(config.seed, 0xA11CE));
  for (int n = 0; n <= 4; ++n) {
    hilb::BasePtr base = hilb::make_base(gen::point_names(n));
    const unsigned carriers = 1u << n;
    Subunit full = subunits::full_subunit(base);
    for (unsigned a = 0; a < carriers; ++a) {
      for (unsigned b = 0; b < carriers; ++b) {
        const bool scrambled = ((a + b) % 2) == 1;
        Subunit u = mask_subunit(base, a, scrambled ? &scramble : nullptr);
        Subunit v = mask_subunit(base, b, scrambled ? &scramble : nullptr);
        Subunit w = subunits::subunit_meet(u, v);
        ++r.cases_run;
        const std::string wit = carrier_label(u) + "," + carrier_label(v);
        bool inter = true;
        for (std::size_t t = 0; t < base->points.size(); ++t)
          inter = inter && (w.carrier.test(t) == (u.carrier.test(t) && v.carrier.test(t)));
        r.record("carrier-intersection", inter, wit);
        r.record("carrier-unit", subunits::subunit_meet(u, full).carrier == u.carrier, wit);
        r.record("carrier-idempotent", subunits::subunit_meet(u, u).carrier == u.carrier, wit);
        r.record("carrier-commutative", subunits::subunit_meet(v, u).carrier == w.carrier, wit);
        r.record("meet-below-both",
                 subunits::subunit_leq(w, u, config.tol) && subunits::subunit_leq(w, v, config.tol),
                 wit);
      }
    }
  }
  return r;
}

LawReport subunit_semilattice_random(const SuiteConfig& config) {
  LawReport r = run_cases(
      "subunit-semilattice-random", pick(config.samples, 1000), config.seed, config.mode,
      [&](std::size_t, Rng& rng, CaseRecorder& rec) {
        hilb::BasePtr base = gen::random_base(rng, 5, 8);
        Subunit u = gen::random_subunit(rng, base, rng.chance(0.5));
        Subunit v = gen::random_subunit(rng, base, rng.chance(0.5));
        Subunit w = gen::random_subunit(rng, base, rng.chance(0.5));
        Subunit uv = subunits::subunit_meet(u, v);
        rec.require("carrier-intersection", uv.carrier == (u.carrier & v.carrier));
        rec.require("carrier-unit",
                    subunits::subunit_meet(u, subunits::full_subunit(base)).carrier == u.carrier);
        rec.require("carrier-idempotent", subunits::subunit_meet(u, u).carrier == u.carrier);
        Subunit assoc_l = subunits::subunit_meet(uv, w);
        Subunit assoc_r = subunits::subunit_meet(u, subunits::subunit_meet(v, w));
        rec.require("carrier-associative", assoc_l.carrier == assoc_r.carrier);
        rec.within("scalar-associative", hilb::deviation(assoc_l.mono(), assoc_r.mono()),
                   config.tol);
        rec.require("order-agrees", subunits::subunit_leq(uv, u, config.tol) &&
                                        subunits::subunit_leq(uv, v, config.tol));
      });
  r.laws = {"carrier-intersection", "carrier-unit", "carrier-idempotent",
            "carrier-associative",  "scalar-associative", "order-agrees"};
  return r;
}

std::vector<LawReport> suite_semilattice(const SuiteConfig& config) {
  return {semilattice_structured(config), subunit_semilattice_exhaustive(config),
          subunit_semilattice_random(config)};
}

// -------------------------------------------------------------------- closure

std::vector<LawReport> suite_closure(const SuiteConfig& config) {
  LawReport r = run_cases(
      "closure", pick(config.samples, 300), config.seed, config.mode,
      [&](std::size_t, Rng& rng, CaseRecorder& rec) {
        auto carrier = std::make_shared<const lattice::MeetSemilattice>(
            gen::random_semilattice(rng, static_cast<int>(rng.range(2, 5)),
                                    static_cast<int>(rng.range(2, 8))));
        rec.require("carrier-valid", carrier->check().passed());
        lattice::ClosureOperator c = gen::random_closure(rng, carrier);
        LawReport laws = check_closure(c);
        rec.require("closure-laws", laws.passed(),
                    laws.passed() ? "" : laws.failures.front().law);
        // Restriction to every down-set preserves the axioms.
        for (lattice::ElementId x = 0; x < static_cast<lattice::ElementId>(carrier->size());
             ++x) {
          LawReport sub = check_closure(lattice::restrict_closure(c, x));
          rec.require("restricted-closure-laws", sub.passed(), carrier->name(x));
        }
      });
  r.laws = {"carrier-valid", "closure-laws", "restricted-closure-laws"};
  std::vector<LawReport> out{std::move(r)};
  if (!config.input_path.empty()) {
    LawReport file = check_closure(io::parse_closure(io::load_file(config.input_path)));
    file.suite = "closure-file";
    out.push_back(std::move(file));
  }
  return out;
}

// ------------------------------------------------------------------- firmness

std::vector<LawReport> suite_firmness(const SuiteConfig& config) {
  std::vector<LawReport> out;
  Rng rng(mix_seed(config.seed, 0xF1F1));
  for (int n = 0; n <= 5; ++n) {
    LawReport r = subunits::firmness_report(hilb::make_base(gen::point_names(n)), 3, rng,
                                            config.tol);
    r.suite = "firmness-base-" + std::to_string(n);
    out.push_back(std::move(r));
  }
  return out;
}

// -------------------------------------------------------------------- support

std::vector<LawReport> suite_support(const SuiteConfig& config) {
  LawReport r = run_cases(
      "support", pick(config.samples, 500), config.seed, config.mode,
      [&](std::size_t, Rng& rng, CaseRecorder& rec) {
        hilb::BasePtr base = gen::random_base(rng, 1, 5);
        HField e1 = gen::random_field(rng, base, 4, 0.25);
        HField e2 = gen::random_field(rng, base, 4, 0.25);
        HField e3 = gen::random_field(rng, base, 4, 0.25);
        HMorphism f = gen::random_morphism(rng, e1, e2, 0.35);
        HMorphism g = gen::random_morphism(rng, e2, e3, 0.35);
        Subunit sf = subunits::support(f, config.tol);
        Subunit sg = subunits::support(g, config.tol);

        Subunit sc = subunits::support(hilb::compose(g, f), config.tol);
        rec.require("supp-compose-within", sc.carrier.is_subset_of(sf.carrier & sg.carrier),
                    carrier_label(sc));
        rec.require("supp-compose-leq",
                    subunits::subunit_leq(sc, subunits::subunit_meet(sg, sf), config.tol));

        Subunit st = subunits::support(hilb::tensor_mor(f, g), config.tol);
        rec.require("supp-tensor-exact", st.carrier == (sf.carrier & sg.carrier),
                    carrier_label(st));

        rec.require("supported-in-own-support",
                    subunits::has_support_in(f, sf, config.tol));
        for (int k = 0; k < 3; ++k) {
          Subunit u = gen::random_subunit(rng, base, rng.chance(0.5));
          rec.require("support-paths-agree",
                      subunits::has_support_in_fast(f, u, config.tol) ==
                          subunits::has_support_in_factor(f, u, config.tol),
                      carrier_label(u));
        }

        // locality equivalences (a) ⟺ (b) ⟺ (d)
        Subunit u2 = gen::random_subunit(rng, base, rng.chance(0.5));
        LawReport loc = subunits::locality_report(e1, u2, config.tol);
        for (const auto& fail : loc.failures) rec.require(fail.law, false, fail.witness);

        // retracts of local objects are local
        Subunit v = gen::random_subunit(rng, base, rng.chance(0.5));
        HField big = gen::random_local_field(rng, v, 4);
        auto [mono, epi] = gen::random_retract(rng, big);
        rec.within("retract-section",
                   hilb::deviation(hilb::compose(epi, mono), hilb::identity(mono.dom)),
                   config.tol);
        rec.require("retract-local",
                    hilb::is_iso(hilb::tensor_mor(hilb::identity(mono.dom), v.mono()),
                                 config.tol));
      });
  r.laws = {"supp-compose-within", "supp-compose-leq",       "supp-tensor-exact",
            "supported-in-own-support", "support-paths-agree", "(a) iff (b)",
            "(a) iff (d)",          "retract-section",        "retract-local"};
  return {std::move(r)};
}

// --------------------------------------------------- coreflection, graded, loc

std::vector<LawReport> suite_coreflection(const SuiteConfig& config) {
  return {restriction::coreflection_report(pick(config.samples, 300), config.seed, config.tol,
                                           config.mode)};
}

std::vector<LawReport> suite_graded_monad(const SuiteConfig& config) {
  return {restriction::graded_monad_report(pick(config.samples, 200), config.seed, config.tol,
                                           config.mode)};
}

std::vector<LawReport> suite_localisation(const SuiteConfig& config) {
  std::vector<LawReport> out;
  const std::size_t total = pick(config.samples, 200);
  const std::size_t per = std::max<std::size_t>(1, total / 5);
  for (int k = 0; k < 4; ++k) {
    Rng rng(mix_seed(config.seed, 0x10CA1 + static_cast<std::uint64_t>(k)));
    hilb::BasePtr base = hilb::make_base(gen::point_names(k + 1));
    Subunit u = gen::random_subunit(rng, base, k % 2 == 0);
    LawReport r = restriction::localisation_report(u, per, config.seed + static_cast<std::uint64_t>(k),
                                                   config.tol, config.mode);
    r.suite = "localisation-" + carrier_label(u) + "-of-" + std::to_string(k + 1);
    out.push_back(std::move(r));
  }
  // u = id_I: restriction is the identity-like functor
  hilb::BasePtr base = hilb::make_base(gen::point_names(2));
  LawReport full = restriction::localisation_report(subunits::full_subunit(base), per,
                                                    config.seed + 7, config.tol, config.mode);
  full.suite = "localisation-full";
  out.push_back(std::move(full));
  return out;
}

// ---------------------------------------------------------------- causal-site

std::vector<LawReport> suite_causal_site(const SuiteConfig& config) {
  LawReport r = run_cases(
      "causal-site", pick(config.samples, 500), config.seed, config.mode,
      [&](std::size_t, Rng& rng, CaseRecorder& rec) {
        causal::CausalSite site = causal::random_site(rng, static_cast<int>(rng.range(1, 10)));
        rec.require("site-valid", causal::validate_site(site, false).passed());
        rec.require("site-strict-valid", causal::validate_site(site, true).passed());

        lattice::ClosureOperator cf = causal::future_closure(site);
        lattice::ClosureOperator cp = causal::past_closure(site);
        LawReport lf = check_closure(cf);
        LawReport lp = check_closure(cp);
        rec.require("future-closure-laws", lf.passed(),
                    lf.passed() ? "" : lf.failures.front().witness);
        rec.require("past-closure-laws", lp.passed(),
                    lp.passed() ? "" : lp.failures.front().witness);

        for (int k = 0; k < 3; ++k) {
          const Mask s = rng.next_u64() & site.all_points();
          const Mask s2 = s | (rng.next_u64() & site.all_points());
          rec.require("chron-in-causal",
                      (causal::chron_future(site, s) & ~causal::causal_future(site, s)) == 0);
          const Mask c1 = causal::future_closure_set(site, s);
          rec.require("future-idempotent-exact",
                      causal::future_closure_set(site, c1) == c1);
          rec.require("future-monotone",
                      (causal::future_closure_set(site, s) &
                       ~causal::future_closure_set(site, s2)) == 0);
          const Mask p1 = causal::past_closure_set(site, s);
          rec.require("past-idempotent-exact", causal::past_closure_set(site, p1) == p1);
        }

        if (site.size() <= 5) {
          for (lattice::ElementId x = 0;
               x < static_cast<lattice::ElementId>(cf.carrier->size()); ++x) {
            rec.require("restricted-future-laws",
                        check_closure(lattice::restrict_closure(cf, x)).passed());
          }
        }
      });
  r.laws = {"site-valid",          "site-strict-valid",      "future-closure-laws",
            "past-closure-laws",   "chron-in-causal",        "future-idempotent-exact",
            "future-monotone",     "past-idempotent-exact",  "restricted-future-laws",
            "chron-not-inflationary"};

  // I+ alone is not inflationary: a one-point site is the minimal witness.
  causal::CausalSite loner({"x"}, {}, {{"x", "x"}});
  LawReport wit;
  wit.suite = "causal-site-witness";
  wit.cases_run = 1;
  wit.laws = {"chron-not-inflationary"};
  wit.record("chron-not-inflationary", causal::chron_future(loner, 1) == 0,
             "I+({x}) should be empty on the one-point site");
  std::vector<LawReport> out{std::move(r), std::move(wit)};
  if (!config.input_path.empty()) {
    LawReport file = causal::validate_site(io::parse_site(io::load_file(config.input_path)), false);
    file.suite = "causal-site-file";
    out.push_back(std::move(file));
  }
  return out;
}

// ---------------------------------------------------------------- complements

void complement_all_closed(const causal::CausalSite& site, LawReport& r, std::size_t max_sets) {
  const Mask all = site.all_points();
  std::vector<Mask> future_sets, past_sets;
  for (Mask m = 0;; ++m) {
    if (causal::is_future_closed(site, m)) future_sets.push_back(m);
    if (causal::is_past_closed(site, m)) past_sets.push_back(m);
    if (m == all) break;
  }
  auto run = [&](const std::vector<Mask>& sets, causal::Direction dir, const char* tag) {
    std::size_t step = std::max<std::size_t>(1, sets.size() / max_sets);
    for (std::size_t i = 0; i < sets.size(); i += step) {
      causal::ComplementReport c = causal::complement(site, sets[i], dir);
      ++r.cases_run;
      const std::string wit = std::string(tag) + " n=" + std::to_string(site.size());
      r.record("complement-closed", c.closed, wit);
      r.record("complement-disjoint", c.disjoint, wit);
      r.record("complement-covers", c.covers, wit);
      if (c.uniqueness_checked) r.record("complement-unique", c.unique, wit);
    }
  };
  run(future_sets, causal::Direction::Future, "future");
  run(past_sets, causal::Direction::Past, "past");
}

std::vector<LawReport> suite_complements(const SuiteConfig& config) {
  LawReport fixed;
  fixed.suite = "complements-exhaustive";
  fixed.laws = {"complement-closed", "complement-disjoint", "complement-covers",
                "complement-unique"};
  Rng rng(mix_seed(config.seed, 0xC0C0));
  for (int n = 1; n <= 5; ++n) {
    // chains, antichains, and a seeded random batch, every closed set each
    std::vector<std::pair<std::string, std::string>> chain_edges;
    for (int i = 0; i + 1 < n; ++i)
      for (int j = i + 1; j < n; ++j)
        chain_edges.emplace_back("x" + std::to_string(i), "x" + std::to_string(j));
    complement_all_closed(causal::CausalSite::with_auto_causal(gen::point_names(n), {}), fixed,
                          64);
    std::vector<std::string> chain_names;
    for (int i = 0; i < n; ++i) chain_names.push_back("x" + std::to_string(i));
    complement_all_closed(causal::CausalSite::with_auto_causal(chain_names, chain_edges), fixed,
                          64);
    for (int k = 0; k < 10; ++k)
      complement_all_closed(causal::random_site(rng, n), fixed, 64);
  }

  LawReport random = run_cases(
      "complements-random", pick(config.samples, 200), config.seed, config.mode,
      [&](std::size_t, Rng& case_rng, CaseRecorder& rec) {
        causal::CausalSite site =
            causal::random_site(case_rng, static_cast<int>(case_rng.range(1, 10)));
        const Mask all = site.all_points();
        std::vector<Mask> closed;
        for (Mask m = 0;; ++m) {
          if (causal::is_future_closed(site, m)) closed.push_back(m);
          if (m == all) break;
        }
        const std::size_t step = std::max<std::size_t>(1, closed.size() / 16);
        for (std::size_t i = 0; i < closed.size(); i += step) {
          causal::ComplementReport c = causal::complement(site, closed[i], causal::Direction::Future);
          rec.require("complement-closed", c.closed);
          rec.require("complement-disjoint", c.disjoint);
          rec.require("complement-covers", c.covers);
          rec.require("complement-unique", !c.uniqueness_checked || c.unique);
        }
      });
  random.laws = fixed.laws;
  return {std::move(fixed), std::move(random)};
}

// ----------------------------------------------------------------- firm-rings

std::vector<LawReport> suite_firm_rings(const SuiteConfig& config) {
  std::vector<LawReport> out;
  const std::size_t samples = pick(config.samples, 100);
  for (int n = 1; n <= 4; ++n) {
    LawReport ring = firmmod::firm_ring_report(n, std::max<std::size_t>(8, samples / 4),
                                               config.seed + static_cast<std::uint64_t>(n),
                                               config.mode);
    ring.suite = "firm-rings-" + std::to_string(n);
    out.push_back(std::move(ring));
    LawReport eq = firmmod::equivalence_report(n, samples,
                                               config.seed + 100 + static_cast<std::uint64_t>(n),
                                               config.mode);
    eq.suite = "fmod-equivalence-" + std::to_string(n);
    out.push_back(std::move(eq));
  }
  return out;
}

struct SuiteDef {
  std::string name;
  std::vector<LawReport> (*fn)(const SuiteConfig&);
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"semilattice", suite_semilattice},   {"closure", suite_closure},
      {"firmness", suite_firmness},         {"support", suite_support},
      {"coreflection", suite_coreflection}, {"graded-monad", suite_graded_monad},
      {"localisation", suite_localisation}, {"causal-site", suite_causal_site},
      {"complements", suite_complements},   {"firm-rings", suite_firm_rings},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : registry()) out.push_back(def.name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  for (const auto& def : registry())
    if (def.name == name) return true;
  return false;
}

std::vector<LawReport> run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "all") {
    std::vector<LawReport> out;
    for (const auto& def : registry()) {
      std::vector<LawReport> part = def.fn(config);
      for (auto& r : part) out.push_back(std::move(r));
    }
    return out;
  }
  for (const auto& def : registry())
    if (def.name == name) return def.fn(config);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace firmcat::suites
