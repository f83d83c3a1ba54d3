#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "firmcat/generators.hpp"
#include "firmcat/subunits.hpp"

using namespace firmcat;
using hilb::HField;
using hilb::HMorphism;
using hilb::Mat;
using subunits::Subunit;

namespace {

Subunit named_subunit(const hilb::BasePtr& base, std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return subunits::canonical_subunit(base, subunits::carrier_of_names(base, v));
}

Mat scalar(double re, double im = 0.0) {
  Mat m(1, 1);
  m(0, 0) = hilb::Complex{re, im};
  return m;
}

}  // namespace

TEST_CASE("recognize accepts a scaled point mono") {
  hilb::BasePtr base = hilb::make_base({"a", "b"});
  HField s{base, {1, 0}};
  HMorphism mono = hilb::make_morphism(s, hilb::unit_field(base), {scalar(2), Mat(1, 0)});
  Subunit u = subunits::recognize_subunit(mono);
  CHECK(u.carrier_names() == std::vector<std::string>{"a"});
  CHECK(u.scalars[0] == hilb::Complex{2.0, 0.0});
  CHECK_FALSE(u.canonical());
}

TEST_CASE("recognize accepts the identity on the unit") {
  hilb::BasePtr base = hilb::make_base({"a", "b", "c"});
  Subunit u = subunits::recognize_subunit(hilb::identity(hilb::unit_field(base)));
  CHECK(u.carrier.count() == 3);
  CHECK(u.canonical());
}

TEST_CASE("recognize rejects wide fibers as not monic") {
  hilb::BasePtr base = hilb::make_base({"a"});
  HField two{base, {2}};
  Mat wide(1, 2);
  wide << 1, 0;
  HMorphism bad = hilb::make_morphism(two, hilb::unit_field(base), {wide});
  CHECK_THROWS_AS((void)subunits::recognize_subunit(bad), subunits::NotMonoError);
}

TEST_CASE("recognize rejects a zero scalar as not monic") {
  hilb::BasePtr base = hilb::make_base({"a"});
  HField s{base, {1}};
  HMorphism bad = hilb::make_morphism(s, hilb::unit_field(base), {scalar(0)});
  CHECK_THROWS_AS((void)subunits::recognize_subunit(bad), subunits::NotMonoError);
}

TEST_CASE("recognize requires the codomain to be the unit") {
  hilb::BasePtr base = hilb::make_base({"a"});
  HField two{base, {2}};
  CHECK_THROWS_AS((void)subunits::recognize_subunit(hilb::identity(two)),
                  std::invalid_argument);
}

TEST_CASE("meet intersects carriers and multiplies scalars") {
  hilb::BasePtr base = hilb::make_base({"a", "b", "c"});
  Subunit u = named_subunit(base, {"a", "b"});
  Subunit v = named_subunit(base, {"b", "c"});
  CHECK(subunits::subunit_meet(u, v).carrier_names() == std::vector<std::string>{"b"});
  CHECK(subunits::subunit_meet(u, subunits::full_subunit(base)).carrier == u.carrier);

  Subunit two = named_subunit(base, {"a"});
  two.scalars[0] = 2.0;
  Subunit three = named_subunit(base, {"a"});
  three.scalars[0] = 3.0;
  Subunit six = subunits::subunit_meet(two, three);
  CHECK(six.carrier_names() == std::vector<std::string>{"a"});
  CHECK(six.scalars[0] == hilb::Complex{6.0, 0.0});
}

TEST_CASE("subunit order agrees with the iso characterization") {
  hilb::BasePtr base = hilb::make_base({"a", "b"});
  CHECK(subunits::subunit_leq(named_subunit(base, {"a"}), named_subunit(base, {"a", "b"})));
  CHECK_FALSE(subunits::subunit_leq(named_subunit(base, {"a"}), named_subunit(base, {"b"})));

  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    hilb::BasePtr b = gen::random_base(rng, 1, 5);
    Subunit u = gen::random_subunit(rng, b, rng.chance(0.5));
    Subunit v = gen::random_subunit(rng, b, rng.chance(0.5));
    // subunit_leq throws if the subset test and the iso test ever disagree
    CHECK_NOTHROW((void)subunits::subunit_leq(u, v));
  }
}

TEST_CASE("mediating iso solves s ∘ f = s'") {
  hilb::BasePtr base = hilb::make_base({"a"});
  Subunit s = named_subunit(base, {"a"});
  s.scalars[0] = 2.0;
  Subunit sp = named_subunit(base, {"a"});
  sp.scalars[0] = 6.0;
  HMorphism f = subunits::mediating_iso(s, sp);
  CHECK(f.fiber(0)(0, 0) == hilb::Complex{3.0, 0.0});
  CHECK(hilb::is_iso(f));
  CHECK(hilb::deviation(hilb::compose(s.mono(), f), sp.mono()) == 0.0);

  Subunit identity_case = named_subunit(base, {"a"});
  CHECK(hilb::deviation(subunits::mediating_iso(identity_case, identity_case),
                        hilb::identity(identity_case.object())) == 0.0);

  hilb::BasePtr base2 = hilb::make_base({"a", "b"});
  CHECK_THROWS_AS(
      (void)subunits::mediating_iso(named_subunit(base2, {"a"}), named_subunit(base2, {"b"})),
      std::invalid_argument);
}

TEST_CASE("mediating solution is unique per fiber") {
  // any g with s∘g = s' matches f: one linear equation per fiber
  Rng rng(19);
  hilb::BasePtr base = gen::random_base(rng, 1, 4);
  Subunit s = gen::random_subunit(rng, base, false);
  Subunit sp{base, s.carrier, s.scalars};
  for (std::size_t t = 0; t < sp.scalars.size(); ++t)
    if (sp.carrier.test(t)) sp.scalars[t] *= rng.nonzero_scalar();
  HMorphism f = subunits::mediating_iso(s, sp);
  for (std::size_t t = 0; t < base->points.size(); ++t) {
    if (!s.carrier.test(t)) continue;
    const hilb::Complex unique_solution = sp.scalars[t] / s.scalars[t];
    CHECK(std::abs(f.fiber(t)(0, 0) - unique_solution) < 1e-12);
  }
}

TEST_CASE("support thresholds at the tolerance") {
  hilb::BasePtr base = hilb::make_base({"a", "b", "c"});
  HField e{base, {2, 0, 3}};
  Subunit s = subunits::support(hilb::identity(e));
  CHECK(s.carrier_names() == std::vector<std::string>{"a", "c"});

  CHECK(subunits::support(hilb::zero_morphism(e, e)).carrier.none());

  HField one{base, {1, 0, 0}};
  HMorphism tiny = hilb::make_morphism(one, one, {scalar(1e-12), Mat(0, 0), Mat(0, 0)});
  CHECK(subunits::support(tiny).carrier.none());
  CHECK(subunits::support(tiny, 1e-13).carrier.count() == 1);
}

TEST_CASE("has_support_in: trivial and blocked cases") {
  hilb::BasePtr base = hilb::make_base({"a", "b", "c"});
  HField e{base, {2, 2, 2}};
  HMorphism zero = hilb::zero_morphism(e, e);
  CHECK(subunits::has_support_in(zero, subunits::empty_subunit(base)));
  CHECK(subunits::has_support_in(zero, subunits::full_subunit(base)));

  HMorphism f = hilb::identity(e);
  CHECK_FALSE(subunits::has_support_in(f, named_subunit(base, {"b"})));

  // f vanishing at a, identity at b: supported on {b,c}
  HMorphism g = hilb::make_morphism(
      e, e, {Mat::Zero(2, 2), Mat::Identity(2, 2), Mat::Zero(2, 2)});
  Subunit bc = named_subunit(base, {"b", "c"});
  CHECK(subunits::has_support_in_fast(g, bc));
  CHECK(subunits::has_support_in_factor(g, bc));
  CHECK(subunits::has_support_in(g, bc));
}

TEST_CASE("the two support paths agree on random instances") {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    hilb::BasePtr base = gen::random_base(rng, 1, 5);
    HField e1 = gen::random_field(rng, base, 4, 0.25);
    HField e2 = gen::random_field(rng, base, 4, 0.25);
    HMorphism f = gen::random_morphism(rng, e1, e2, 0.4);
    Subunit u = gen::random_subunit(rng, base, rng.chance(0.5));
    CHECK(subunits::has_support_in_fast(f, u) == subunits::has_support_in_factor(f, u));
    CHECK(subunits::has_support_in(f, subunits::support(f)));
  }
}

TEST_CASE("support of composites and tensors") {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    hilb::BasePtr base = gen::random_base(rng, 1, 5);
    HField e1 = gen::random_field(rng, base, 4, 0.25);
    HField e2 = gen::random_field(rng, base, 4, 0.25);
    HField e3 = gen::random_field(rng, base, 4, 0.25);
    HMorphism f = gen::random_morphism(rng, e1, e2, 0.35);
    HMorphism g = gen::random_morphism(rng, e2, e3, 0.35);
    const auto sf = subunits::support(f).carrier;
    const auto sg = subunits::support(g).carrier;
    CHECK(subunits::support(hilb::compose(g, f)).carrier.is_subset_of(sf & sg));
    CHECK(subunits::support(hilb::tensor_mor(f, g)).carrier == (sf & sg));
  }
}

TEST_CASE("firmness over tiny bases counts all carrier pairs") {
  Rng rng(31);
  LawReport r1 = subunits::firmness_report(hilb::make_base({"p0"}), 0, rng);
  CHECK(r1.passed());
  CHECK(r1.cases_run == 4);  // two carriers, four ordered pairs

  LawReport r3 = subunits::firmness_report(hilb::make_base(gen::point_names(3)), 0, rng);
  CHECK(r3.passed());
  CHECK(r3.cases_run == 64);

  LawReport with_objects = subunits::firmness_report(hilb::make_base(gen::point_names(2)), 3, rng);
  CHECK(with_objects.passed());
}

TEST_CASE("zero scalars never reach the firmness report") {
  hilb::BasePtr base = hilb::make_base({"a"});
  HField s{base, {1}};
  HMorphism fake = hilb::make_morphism(s, hilb::unit_field(base), {scalar(0)});
  CHECK_THROWS_AS((void)subunits::recognize_subunit(fake), subunits::NotMonoError);
}

TEST_CASE("locality equivalences on dim patterns") {
  hilb::BasePtr base = hilb::make_base({"a", "b"});
  Subunit u = named_subunit(base, {"a"});

  HField local{base, {2, 0}};
  CHECK(hilb::is_iso(hilb::tensor_mor(hilb::identity(local), u.mono())));
  CHECK(subunits::has_support_in(hilb::identity(local), u));
  CHECK(subunits::locality_report(local, u).passed());

  HField global{base, {2, 1}};
  CHECK_FALSE(hilb::is_iso(hilb::tensor_mor(hilb::identity(global), u.mono())));
  CHECK_FALSE(subunits::has_support_in(hilb::identity(global), u));
  CHECK(subunits::locality_report(global, u).passed());  // the equivalences still agree

  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    hilb::BasePtr b = gen::random_base(rng, 1, 5);
    CHECK(subunits::locality_report(gen::random_field(rng, b, 3, 0.4),
                                    gen::random_subunit(rng, b, rng.chance(0.5)))
              .passed());
  }
}

TEST_CASE("retracts of local objects stay local") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    hilb::BasePtr base = gen::random_base(rng, 1, 4);
    Subunit v = gen::random_subunit(rng, base, rng.chance(0.5));
    HField big = gen::random_local_field(rng, v, 4);
    auto [mono, epi] = gen::random_retract(rng, big);
    REQUIRE(hilb::deviation(hilb::compose(epi, mono), hilb::identity(mono.dom)) < 1e-12);
    CHECK(hilb::is_iso(hilb::tensor_mor(hilb::identity(big), v.mono())));
    CHECK(hilb::is_iso(hilb::tensor_mor(hilb::identity(mono.dom), v.mono())));
  }
}

TEST_CASE("empty base is a degenerate but valid world") {
  hilb::BasePtr base = hilb::make_base({});
  Subunit full = subunits::full_subunit(base);
  Subunit empty = subunits::empty_subunit(base);
  CHECK(subunits::subunit_meet(full, empty).carrier.none());
  CHECK(subunits::subunit_leq(empty, full));
}
