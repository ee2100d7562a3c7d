#include <gtest/gtest.h>

#include <random>

#include "projgraft/suites.hpp"
#include "projgraft/surface.hpp"

using namespace projgraft;

namespace {

CurveComponent curve(const std::string& label, ChartClasses charts = {}, std::int64_t mult = 1) {
  return CurveComponent{parse_word(label), std::move(charts), mult};
}

SurfaceModel one_chart() {
  SurfaceModel m;
  m.charts = {"b1"};
  return m;
}

Structure with_lambda(const SurfaceModel& m, TorusClass lam) {
  return Structure(m.holonomy, make_multicurve(m, {curve("lam", {{"b1", lam}})}));
}

}  // namespace

TEST(Word, RenderAndParseRoundTrip) {
  const Word w = parse_word("gam^2+lam");
  EXPECT_EQ(w.at("gam"), 2);
  EXPECT_EQ(w.at("lam"), 1);
  EXPECT_EQ(render_word(w), "gam^2+lam");
  EXPECT_THROW(parse_word("a++b"), BadConfiguration);
  EXPECT_THROW(parse_word("a^0"), BadConfiguration);
}

TEST(ValidateConfiguration, StandardBasisAccepted) {
  EXPECT_NO_THROW(validate_configuration(one_chart(), {curve("lam", {{"b1", {2, 0}}})}, curve("gam", {{"b1", {1, 0}}})));
}

TEST(ValidateConfiguration, RejectsBadPatterns) {
  EXPECT_THROW(validate_configuration(one_chart(), {curve("lam", {{"b1", {2, 0}}})}, curve("gam", {{"b1", {1, 1}}})),
               BadIntersectionPattern);
  EXPECT_THROW(validate_configuration(one_chart(), {curve("lam", {{"b1", {3, 0}}})}, curve("gam", {{"b1", {1, 0}}})),
               BadIntersectionPattern);
  EXPECT_THROW(validate_configuration(one_chart(), {curve("lam", {{"b9", {2, 0}}})}, curve("gam", {{"b1", {1, 0}}})),
               UnknownChart);
  SurfaceModel torus = one_chart();
  torus.genus = 1;
  EXPECT_THROW(validate_configuration(torus, {curve("lam", {{"b1", {2, 0}}})}, curve("gam", {{"b1", {1, 0}}})),
               BadConfiguration);
  SurfaceModel crossing = one_chart();
  crossing.add_crossing("lam", "gam");
  EXPECT_THROW(validate_configuration(crossing, {curve("lam", {{"b1", {2, 0}}})}, curve("gam", {{"b1", {1, 0}}})),
               BadIntersectionPattern);
}

TEST(SpiralingClass, Examples) {
  EXPECT_EQ(spiraling_class({1, 2}), (SpiralClass{SpiralClass::Kind::Left, 2}));
  EXPECT_EQ(spiraling_class({1, -3}), (SpiralClass{SpiralClass::Kind::Right, 3}));
  EXPECT_EQ(spiraling_class({1, 0}).kind, SpiralClass::Kind::NonSpiraling);
  EXPECT_EQ(spiraling_class({2, 1}).kind, SpiralClass::Kind::NonSpiraling);
}

TEST(IsAdmissible, Examples) {
  const SurfaceModel m = one_chart();
  const Admissibility hopf = is_admissible(m, with_lambda(m, {0, 2}), curve("gam", {{"b1", {1, 0}}}));
  EXPECT_FALSE(hopf.admissible);
  EXPECT_FALSE(hopf.reason.empty());
  const Admissibility disjoint = is_admissible(m, with_lambda(m, {2, 0}), curve("gam", {{"b1", {1, 0}}}));
  EXPECT_TRUE(disjoint.admissible);
  EXPECT_EQ(disjoint.route, Route::Disjoint);
  const Admissibility spiral = is_admissible(m, with_lambda(m, {2, 0}), curve("gam", {{"b1", {1, 2}}}));
  EXPECT_TRUE(spiral.admissible);
  EXPECT_EQ(spiral.route, Route::Spiraling);
}

TEST(IsAdmissible, ExteriorCrossingBlocksBothRoutes) {
  SurfaceModel m = one_chart();
  m.add_crossing("lam", "gam");
  EXPECT_FALSE(is_admissible(m, with_lambda(m, {2, 0}), curve("gam", {{"b1", {1, 0}}})).admissible);
  EXPECT_FALSE(is_admissible(m, with_lambda(m, {2, 0}), curve("gam", {{"b1", {1, 1}}})).admissible);
}

TEST(SpiralingHypotheses, Examples) {
  const SurfaceModel m = one_chart();
  const SurfaceMulticurve lam = make_multicurve(m, {curve("lam", {{"b1", {2, 0}}})});
  const CurveComponent gam = curve("gam", {{"b1", {1, 0}}});
  const SpiralReport three = check_spiraling_hypotheses(m, twist_about_meridian(m, gam, "b1", 3), gam, lam);
  EXPECT_TRUE(three.ok);
  EXPECT_EQ(three.gamma_crossings, 3);
  EXPECT_EQ(three.lambda_crossings, 6);
  EXPECT_EQ(three.direction("b1"), SpiralClass::Kind::Left);
  const SpiralReport same = check_spiraling_hypotheses(m, gam, gam, lam);
  EXPECT_TRUE(same.ok);
  EXPECT_FALSE(same.spirals());
  EXPECT_FALSE(check_spiraling_hypotheses(m, curve("gam", {{"b1", {2, 1}}}), gam, lam).ok);
  EXPECT_FALSE(check_spiraling_hypotheses(m, curve("other", {{"b1", {1, 1}}}), gam, lam).ok);
  // Meeting lambda four times per crossing with gamma is not spiraling.
  const SurfaceMulticurve fat = make_multicurve(m, {curve("lam", {{"b1", {4, 0}}})});
  EXPECT_FALSE(check_spiraling_hypotheses(m, curve("gam", {{"b1", {1, 1}}}), gam, fat).ok);
}

TEST(TwistAboutMeridian, Examples) {
  const SurfaceModel m = one_chart();
  EXPECT_EQ(twist_about_meridian(m, curve("gam", {{"b1", {1, 0}}}), "b1", 2).charts.at("b1"), (TorusClass{1, 2}));
  EXPECT_EQ(twist_about_meridian(m, curve("lam", {{"b1", {2, 0}}}), "b1", 1).charts.at("b1"), (TorusClass{2, 2}));
  const Structure s = with_lambda(m, {2, 0});
  EXPECT_EQ(twist_about_meridian(m, s, "b1", 0), s);
  EXPECT_EQ(twist_about_meridian(m, twist_about_meridian(m, s, "b1", 2), "b1", -5), twist_about_meridian(m, s, "b1", -3));
  EXPECT_THROW(twist_about_meridian(m, s, "nope", 1), UnknownChart);
}

TEST(GraftDisjoint, AddsTwoCopies) {
  SurfaceModel m = one_chart();
  const Structure s(m.holonomy, make_multicurve(m, {curve("alpha", {}, 2)}));
  const Structure g = graft_disjoint(m, s, curve("delta"));
  const Structure want(m.holonomy, make_multicurve(m, {curve("alpha", {}, 2), curve("delta", {}, 2)}));
  EXPECT_EQ(g.key(), want.key());
  EXPECT_EQ(g.holonomy(), s.holonomy());
  const Structure empty(m.holonomy, {});
  EXPECT_EQ(graft_disjoint(m, empty, curve("delta")).key(), "(delta)x2");
}

TEST(GraftDisjoint, Commutes) {
  SurfaceModel m = one_chart();
  const Structure s = with_lambda(m, {2, 0});
  const CurveComponent a = curve("alpha"), b = curve("beta");
  EXPECT_EQ(graft_disjoint(m, graft_disjoint(m, s, a), b).key(), graft_disjoint(m, graft_disjoint(m, s, b), a).key());
}

TEST(GraftDisjoint, RejectsCrossingCurve) {
  SurfaceModel m = one_chart();
  EXPECT_THROW(graft_disjoint(m, with_lambda(m, {2, 0}), curve("gam", {{"b1", {1, 1}}})), NotAdmissible);
}

TEST(GraftSpiraling, HopfFrameChartValues) {
  EXPECT_EQ(spiral_graft_chart({0, 2}, {1, -1}), (TorusClass{2, 0}));
  EXPECT_EQ(spiral_graft_chart({0, 2}, {1, -2}), (TorusClass{2, -2}));
  EXPECT_THROW(spiral_graft_chart({0, 2}, {1, 0}), NonSpiralingCurve);
}

TEST(GraftSpiraling, LeftSpiralGivesTwistedLambda) {
  const SurfaceModel m = one_chart();
  const Structure s = with_lambda(m, {2, 0});
  const CurveComponent g = curve("gam", {{"b1", {1, 1}}});
  ASSERT_EQ(geometric_intersection({2, 0}, {1, 1}), 2);
  EXPECT_EQ(graft_spiraling(m, s, g).key(), twist_about_curve(m, s, g, 1).key());
}

TEST(GraftSpiraling, RightSpiralGivesInverseTwist) {
  const SurfaceModel m = one_chart();
  const Structure s = with_lambda(m, {2, 0});
  const CurveComponent g = curve("gam", {{"b1", {1, -1}}});
  EXPECT_EQ(graft_spiraling(m, s, g).key(), twist_about_curve(m, s, g, -1).key());
  EXPECT_NE(graft_spiraling(m, s, g).key(), twist_about_curve(m, s, g, 1).key());
}

TEST(GraftSpiraling, Errors) {
  const SurfaceModel m = one_chart();
  const Structure s = with_lambda(m, {2, 0});
  EXPECT_THROW(graft_spiraling(m, s, curve("gam", {{"b1", {1, 0}}})), NonSpiralingCurve);
  EXPECT_THROW(graft_spiraling(m, s, curve("gam", {{"b1", {3, 1}}})), NotAdmissible);
}

TEST(GraftAlong, Dispatches) {
  const SurfaceModel m = one_chart();
  const Structure s = with_lambda(m, {2, 0});
  const CurveComponent flat = curve("gam", {{"b1", {1, 0}}});
  const CurveComponent spiral = curve("gam", {{"b1", {1, 3}}});
  EXPECT_EQ(graft_along(m, s, flat), graft_disjoint(m, s, flat));
  EXPECT_EQ(graft_along(m, s, spiral), graft_spiraling(m, s, spiral));
  EXPECT_THROW(graft_along(m, s, curve("gam", {{"b1", {0, 1}}})), NotAdmissible);
}

// Disjoint graft along T^l(gamma) of Sigma(T^l(lambda)) and spiral graft
// along T^{2l}(gamma) of Sigma(lambda) land on the same structure.
TEST(GraftAlong, DisjointAndSpiralRoutesAgree) {
  const SurfaceModel m = one_chart();
  const Structure s = with_lambda(m, {2, 0});
  const CurveComponent gam = curve("gam", {{"b1", {1, 0}}});
  for (std::int64_t l = -4; l <= 4; ++l) {
    const Structure twisted = twist_about_meridian(m, s, "b1", l);
    const Structure a = graft_along(m, twisted, twist_about_meridian(m, gam, "b1", l));
    const Structure b = graft_along(m, s, twist_about_meridian(m, gam, "b1", 2 * l));
    EXPECT_EQ(a.key(), b.key()) << l;
  }
}

TEST(CanonicalKey, Examples) {
  const SurfaceModel m = one_chart();
  EXPECT_EQ(canonical_key(make_multicurve(m, {curve("alpha", {}, 2), curve("delta", {}, 2)})),
            canonical_key(make_multicurve(m, {curve("delta", {}, 2), curve("alpha", {}, 2)})));
  EXPECT_EQ(canonical_key(make_multicurve(m, {curve("lam", {{"b1", {2, 0}}})})),
            canonical_key(make_multicurve(m, {curve("lam", {{"b1", {-2, 0}}})})));
  EXPECT_EQ(canonical_key(make_multicurve(m, {curve("alpha"), curve("alpha")})),
            canonical_key(make_multicurve(m, {curve("alpha", {}, 2)})));
  EXPECT_NE(canonical_key(make_multicurve(m, {curve("alpha", {}, 2)})), canonical_key(make_multicurve(m, {curve("alpha")})));
  EXPECT_EQ(canonical_key({}), "empty");
}

TEST(CanonicalKey, DigestIsStable) {
  EXPECT_EQ(digest("empty"), digest("empty"));
  EXPECT_EQ(digest("").size(), 16u);
  EXPECT_EQ(digest(""), "cbf29ce484222325");
}

TEST(Goldman, Examples) {
  const SurfaceModel m = one_chart();
  const SurfaceMulticurve sigma = goldman_decompose(make_multicurve(m, {curve("alpha", {}, 2), curve("delta", {}, 4)}));
  EXPECT_EQ(canonical_key(sigma), canonical_key(make_multicurve(m, {curve("alpha"), curve("delta", {}, 2)})));
  EXPECT_TRUE(goldman_decompose({}).empty());
  try {
    goldman_decompose(make_multicurve(m, {curve("alpha", {}, 3)}));
    FAIL() << "odd multiplicity accepted";
  } catch (const OddMultiplicity& e) {
    EXPECT_EQ(e.component(), "alphax3");
  }
}

TEST(Goldman, RandomRoundTrips) {
  const SurfaceModel m = one_chart();
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const SurfaceMulticurve lam = suites::random_even_multicurve(rng, m);
    ASSERT_EQ(graft_standard(m, m.holonomy, goldman_decompose(lam)).key(), canonical_key(lam));
  }
}

TEST(Invariants, OperationsKeepHolonomyAndFiniteness) {
  SurfaceModel m = one_chart();
  m.holonomy = "rho7";
  const Structure s = with_lambda(m, {2, 0});
  const CurveComponent gam = curve("gam", {{"b1", {1, 0}}});
  for (std::int64_t n = -3; n <= 3; ++n) {
    const Structure g = graft_along(m, s, twist_about_meridian(m, gam, "b1", n));
    EXPECT_EQ(g.holonomy(), "rho7");
    EXPECT_LE(g.real_curves().components.size(), 2u);
    EXPECT_EQ(twist_about_meridian(m, s, "b1", n).holonomy(), "rho7");
  }
}

TEST(Invariants, TwistGraftCommutationAtChartLevel) {
  const TorusClass lam{2, 0}, two_gam{2, 0};
  for (std::int64_t k = -8; k <= 8; ++k) {
    const TorusClass a = resolve(lam, dehn_twist(two_gam, kMeridian, k), Surgery::Sharp);
    const TorusClass b = resolve(dehn_twist(lam, kMeridian, k), two_gam, Surgery::Flat);
    EXPECT_EQ(sign_normalized(a), sign_normalized(b)) << k;
    if (k >= 0) {
      EXPECT_EQ(a, b) << k;
    }
  }
}

TEST(Invariants, FourWayIdentityHoldsForNonNegativeTwists) {
  const TorusClass lam{2, 0}, two_gam{2, 0};
  for (std::int64_t k = 0; k <= 8; ++k) {
    const TorusClass want{4, 4 * k};
    EXPECT_EQ(dehn_twist(resolve(lam, two_gam, Surgery::Sharp), kMeridian, k), want);
    EXPECT_EQ(resolve(lam, dehn_twist(two_gam, kMeridian, 2 * k), Surgery::Sharp), want);
    EXPECT_EQ(resolve(dehn_twist(lam, kMeridian, 2 * k), two_gam, Surgery::Flat), want);
    EXPECT_EQ(resolve(dehn_twist(lam, kMeridian, k), dehn_twist(two_gam, kMeridian, k), Surgery::Sharp), want);
  }
}

// For negative twists the middle two expressions return (0, -4k) up to sign;
// the identity only holds with the surgery modes mirrored.
TEST(Invariants, FourWayIdentityNeedsMirroredModesForNegativeTwists) {
  const TorusClass lam{2, 0}, two_gam{2, 0};
  for (std::int64_t k = -8; k < 0; ++k) {
    const TorusClass want{4, 4 * k};
    EXPECT_EQ(sign_normalized(resolve(lam, dehn_twist(two_gam, kMeridian, 2 * k), Surgery::Sharp)), (TorusClass{0, -4 * k}));
    EXPECT_EQ(resolve(lam, dehn_twist(two_gam, kMeridian, 2 * k), Surgery::Flat), want);
    EXPECT_EQ(resolve(dehn_twist(lam, kMeridian, 2 * k), two_gam, Surgery::Sharp), want);
  }
}
