#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "firmcat/generators.hpp"
#include "firmcat/hilbfield.hpp"
#include "firmcat/rng.hpp"

using namespace firmcat;
using hilb::HField;
using hilb::HMorphism;
using hilb::Mat;

namespace {

Mat mat2(double a, double b, double c, double d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("compose multiplies fibers pointwise") {
  hilb::BasePtr base = hilb::make_base({"t"});
  HField e = hilb::constant_field(base, 2);
  HMorphism f = hilb::make_morphism(e, e, {mat2(0, 1, 1, 0)});
  HMorphism g = hilb::make_morphism(e, e, {mat2(2, 0, 0, 3)});
  HMorphism gf = hilb::compose(g, f);
  CHECK(hilb::deviation(gf, hilb::make_morphism(e, e, {mat2(0, 2, 3, 0)})) == 0.0);
  CHECK(hilb::deviation(hilb::compose(hilb::identity(e), f), f) == 0.0);
  CHECK(hilb::deviation(hilb::compose(g, hilb::zero_morphism(e, e)),
                        hilb::zero_morphism(e, e)) == 0.0);
}

TEST_CASE("tensor dims multiply pointwise and unit is strict") {
  hilb::BasePtr base = hilb::make_base({"a", "b", "c"});
  HField e{base, {2, 1, 3}};
  HField f{base, {0, 2, 1}};
  CHECK(hilb::tensor_ob(e, f).dims == std::vector<Eigen::Index>{0, 2, 3});
  CHECK(hilb::tensor_ob(e, hilb::unit_field(base)).dims == e.dims);
  CHECK(hilb::tensor_ob(hilb::unit_field(base), e).dims == e.dims);
}

TEST_CASE("tensor of identities is the identity") {
  hilb::BasePtr base = hilb::make_base({"t"});
  HField e2 = hilb::constant_field(base, 2);
  HField e3 = hilb::constant_field(base, 3);
  HMorphism id6 = hilb::tensor_mor(hilb::identity(e2), hilb::identity(e3));
  CHECK(hilb::deviation(id6, hilb::identity(hilb::tensor_ob(e2, e3))) == 0.0);
}

TEST_CASE("braiding of 2 and 2 is the frozen swap permutation") {
  hilb::BasePtr base = hilb::make_base({"t"});
  HField e = hilb::constant_field(base, 2);
  Mat expect(4, 4);
  expect << 1, 0, 0, 0,
            0, 0, 1, 0,
            0, 1, 0, 0,
            0, 0, 0, 1;
  CHECK((hilb::braiding(e, e).fiber(0) - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("braiding with a trivial factor is the identity matrix") {
  hilb::BasePtr base = hilb::make_base({"t"});
  HField e = hilb::constant_field(base, 3);
  HField i = hilb::unit_field(base);
  CHECK((hilb::braiding(e, i).fiber(0) - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("braiding is a symmetry and is natural") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    hilb::BasePtr base = gen::random_base(rng, 1, 4);
    HField e = gen::random_field(rng, base, 4);
    HField f = gen::random_field(rng, base, 4);
    HMorphism round = hilb::compose(hilb::braiding(f, e), hilb::braiding(e, f));
    CHECK(hilb::deviation(round, hilb::identity(hilb::tensor_ob(e, f))) == 0.0);

    HField e2 = gen::random_field(rng, base, 4);
    HField f2 = gen::random_field(rng, base, 4);
    HMorphism a = gen::random_morphism(rng, e, e2);
    HMorphism b = gen::random_morphism(rng, f, f2);
    HMorphism lhs = hilb::compose(hilb::braiding(e2, f2), hilb::tensor_mor(a, b));
    HMorphism rhs = hilb::compose(hilb::tensor_mor(b, a), hilb::braiding(e, f));
    CHECK(hilb::deviation(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("mono and iso recognition") {
  hilb::BasePtr base = hilb::make_base({"t"});
  HField e2 = hilb::constant_field(base, 2);
  HField e1 = hilb::constant_field(base, 1);

  CHECK(hilb::is_mono(hilb::identity(e2)));
  CHECK(hilb::is_iso(hilb::identity(e2)));
  CHECK_FALSE(hilb::is_mono(hilb::zero_morphism(e2, e2)));

  Mat column(2, 1);
  column << 1, 0;
  HMorphism tall = hilb::make_morphism(e1, e2, {column});
  CHECK(hilb::is_mono(tall));
  CHECK_FALSE(hilb::is_iso(tall));
  CHECK_THROWS_AS((void)hilb::invert(tall), std::invalid_argument);
}

TEST_CASE("invert produces a two-sided inverse") {
  Rng rng(33);
  hilb::BasePtr base = gen::random_base(rng, 1, 3);
  HField e = gen::random_field(rng, base, 4, 0.3);
  // random square fibers, nudged to be invertible
  HMorphism f = gen::random_morphism(rng, e, e);
  for (auto& m : f.fibers) m += 3.0 * Mat::Identity(m.rows(), m.cols());
  REQUIRE(hilb::is_iso(f));
  HMorphism inv = hilb::invert(f);
  CHECK(hilb::deviation(hilb::compose(f, inv), hilb::identity(e)) < 1e-9);
  CHECK(hilb::deviation(hilb::compose(inv, f), hilb::identity(e)) < 1e-9);
}

TEST_CASE("zero-dimensional fibers are first-class") {
  hilb::BasePtr base = hilb::make_base({"a", "b"});
  HField mixed{base, {2, 0}};
  HMorphism id = hilb::identity(mixed);
  CHECK(hilb::is_iso(id));
  CHECK(hilb::invert(id).fiber(1).rows() == 0);
  HField zero = hilb::zero_field(base);
  CHECK(hilb::tensor_ob(mixed, zero).dims == std::vector<Eigen::Index>{0, 0});
  CHECK(hilb::is_iso(hilb::identity(zero)));
}

TEST_CASE("dual pair snake identities are exact") {
  hilb::BasePtr base = hilb::make_base({"a", "b"});
  for (Eigen::Index d = 1; d <= 5; ++d) {
    HField dd = hilb::constant_field(base, d);
    HMorphism eta = hilb::dual_unit(base, d);
    HMorphism eps = hilb::dual_counit(base, d);
    // (ε ⊗ id_D) ∘ (id_D ⊗ η) = id_D
    HMorphism left = hilb::compose(hilb::tensor_mor(eps, hilb::identity(dd)),
                                   hilb::tensor_mor(hilb::identity(dd), eta));
    CHECK(hilb::deviation(left, hilb::identity(dd)) == 0.0);
    // (id_D ⊗ ε) ∘ (η ⊗ id_D) = id_D
    HMorphism right = hilb::compose(hilb::tensor_mor(hilb::identity(dd), eps),
                                    hilb::tensor_mor(eta, hilb::identity(dd)));
    CHECK(hilb::deviation(right, hilb::identity(dd)) == 0.0);
  }
}

TEST_CASE("counit after unit is the dimension scalar") {
  hilb::BasePtr base = hilb::make_base({"t"});
  HMorphism loop = hilb::compose(hilb::dual_counit(base, 2), hilb::dual_unit(base, 2));
  CHECK(loop.fiber(0)(0, 0) == hilb::Complex{2.0, 0.0});
  CHECK(hilb::dual_unit(base, 1).fiber(0)(0, 0) == hilb::Complex{1.0, 0.0});
}

TEST_CASE("category laws on random instances") {
  Rng rng(55);
  for (int trial = 0; trial < 500; ++trial) {
    hilb::BasePtr base = gen::random_base(rng, 1, 5);
    HField e1 = gen::random_field(rng, base, 4);
    HField e2 = gen::random_field(rng, base, 4);
    HField e3 = gen::random_field(rng, base, 4);
    HField e4 = gen::random_field(rng, base, 4);
    HMorphism f = gen::random_morphism(rng, e1, e2);
    HMorphism g = gen::random_morphism(rng, e2, e3);
    HMorphism h = gen::random_morphism(rng, e3, e4);

    // associativity and unitality
    CHECK(hilb::deviation(hilb::compose(hilb::compose(h, g), f),
                          hilb::compose(h, hilb::compose(g, f))) < 1e-9);
    CHECK(hilb::deviation(hilb::compose(f, hilb::identity(e1)), f) == 0.0);

    // interchange: (g∘f) ⊗ (h'∘f') = (g⊗h') ∘ (f⊗f')
    HField e5 = gen::random_field(rng, base, 3);
    HField e6 = gen::random_field(rng, base, 3);
    HField e7 = gen::random_field(rng, base, 3);
    HMorphism fp = gen::random_morphism(rng, e5, e6);
    HMorphism hp = gen::random_morphism(rng, e6, e7);
    HMorphism lhs = hilb::tensor_mor(hilb::compose(g, f), hilb::compose(hp, fp));
    HMorphism rhs = hilb::compose(hilb::tensor_mor(g, hp), hilb::tensor_mor(f, fp));
    CHECK(hilb::deviation(lhs, rhs) < 1e-9);

    // tensor functoriality on identities
    CHECK(hilb::deviation(hilb::tensor_mor(hilb::identity(e1), hilb::identity(e5)),
                          hilb::identity(hilb::tensor_ob(e1, e5))) == 0.0);
  }
}

TEST_CASE("make_morphism validates fiber shapes") {
  hilb::BasePtr base = hilb::make_base({"a", "b"});
  HField e{base, {2, 1}};
  CHECK_THROWS_AS((void)hilb::make_morphism(e, e, {Mat::Zero(2, 2), Mat::Zero(2, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)hilb::make_morphism(e, e, {Mat::Zero(2, 2)}), std::invalid_argument);
  hilb::BasePtr other = hilb::make_base({"x", "y"});
  CHECK_THROWS_AS((void)hilb::tensor_ob(e, hilb::unit_field(other)), std::invalid_argument);
}

TEST_CASE("operator norm handles empty and known matrices") {
  CHECK(hilb::operator_norm(Mat(0, 3)) == 0.0);
  Mat m(1, 1);
  m << hilb::Complex{3.0, 4.0};
  CHECK(hilb::operator_norm(m) == doctest::Approx(5.0));
}
