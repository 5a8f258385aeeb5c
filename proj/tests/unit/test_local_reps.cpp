#include "case_corpus.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace paramodular;
using corpus::ch;
using corpus::kPrime;

namespace {

PadicCharacter T() { return corpus::triv(); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::Usage;
}

}  // namespace

TEST(FiniteWord, QuadraticAtomsReduceModTwo) {
  FiniteWord w = FiniteWord::parse("psi", true);
  EXPECT_TRUE((w * w).empty());
  EXPECT_EQ(w.inverse(), w);
  EXPECT_EQ(w.order_hint(), OrderHint::Quadratic);
}

TEST(FiniteWord, ParsesProductsAndPowers) {
  FiniteWord w = FiniteWord::parse("a*b^-2", false);
  EXPECT_EQ(w.label(), "a*b^-2");
  EXPECT_EQ((w * FiniteWord::parse("b^2", false)).label(), "a");
  EXPECT_TRUE(FiniteWord::parse("TRIVIAL", false).empty());
}

TEST(FiniteWord, TrivialityIsThreeValued) {
  EXPECT_EQ(FiniteWord().is_trivial(), Tri(true));
  EXPECT_EQ(FiniteWord::parse("a", false).is_trivial(), Tri(false));
  EXPECT_EQ(FiniteWord::parse("a*b^2", false).is_trivial(), Tri(false));
  EXPECT_EQ(FiniteWord::parse("a^2", false).is_trivial(), std::nullopt);
}

TEST(FiniteWord, RejectsMalformedLabels) {
  EXPECT_EQ(code_of([] { FiniteWord::parse("", false); }), ErrorCode::InvalidRep);
  EXPECT_EQ(code_of([] { FiniteWord::parse("a^", false); }), ErrorCode::InvalidRep);
  EXPECT_EQ(code_of([] { FiniteWord::parse("a b", false); }), ErrorCode::InvalidRep);
}

TEST(PadicCharacter, ReservedLabelInvariants) {
  EXPECT_EQ(code_of([] { PadicCharacter::make(3, 1, 0, "TRIVIAL"); }), ErrorCode::InvalidRep);
  EXPECT_EQ(code_of([] { PadicCharacter::make(3, 1, 0, "UNRAM_QUAD"); }), ErrorCode::InvalidRep);
  EXPECT_EQ(code_of([] { PadicCharacter::make(3, 0, 0, "TRIVIAL", OrderHint::Quadratic); }),
            ErrorCode::InvalidRep);
  EXPECT_EQ(code_of([] { PadicCharacter::make(4, 0, 0, "TRIVIAL"); }), ErrorCode::InvalidRep);
  EXPECT_EQ(PadicCharacter::make(3, 0, 0, "UNRAM_QUAD").order_hint(), OrderHint::Quadratic);
}

TEST(PadicCharacter, ProductWithUnramifiedFactorKeepsConductor) {
  PadicCharacter c = ch(3, 0, "eta") * corpus::uq();
  EXPECT_EQ(c.conductor(), 3);
  EXPECT_EQ((corpus::psi() * corpus::phi()).conductor(), 2);
  EXPECT_EQ((corpus::psi() * corpus::psi()).conductor(), 0);
}

TEST(PadicCharacter, ProductOfEqualConductorsIsUnknownUntilNeeded) {
  PadicCharacter c = corpus::psi() * ch(1, 0, "chi");
  EXPECT_FALSE(c.known_conductor().has_value());
  EXPECT_EQ(code_of([&] { (void)c.conductor(); }), ErrorCode::TwistIndeterminate);
  EXPECT_EQ((c * ch(1, 0, "chi").inverse()).conductor(), 1);
}

TEST(PadicCharacter, SameLabelWithTwoConductorsIsRejected) {
  EXPECT_EQ(code_of([] { (void)(ch(1, 0, "eta") * ch(2, 0, "eta")); }), ErrorCode::InvalidRep);
}

TEST(ConductorGl2, Examples) {
  EXPECT_EQ(conductor_gl2(corpus::ps(Rational(1, 5))), 0);
  EXPECT_EQ(conductor_gl2(corpus::st(T())), 1);
  EXPECT_EQ(conductor_gl2(corpus::st(corpus::psi())), 2);
  EXPECT_EQ(conductor_gl2(corpus::sc(2, "A")), 2);
  EXPECT_EQ(conductor_gl2(corpus::ps(0, corpus::mu())), 2);
}

TEST(ConductorGl2, OneDimensionalHasNoConductor) {
  EXPECT_EQ(code_of([] { conductor_gl2(corpus::one(T())); }), ErrorCode::InvalidRep);
}

TEST(GL2LocalRep, RejectsReduciblePrincipalSeries) {
  EXPECT_EQ(code_of([] { corpus::ps(Rational(1, 2)); }), ErrorCode::InvalidRep);
  EXPECT_EQ(code_of([] { corpus::ps(Rational(-1, 2), corpus::uq()); }), ErrorCode::InvalidRep);
  EXPECT_EQ(code_of([] { corpus::ps(Rational(1, 2), ch(0, 0, "L")); }), ErrorCode::UndecidableCase);
}

TEST(GL2LocalRep, EnforcesTrivialCentralCharacter) {
  EXPECT_EQ(code_of([] { GL2LocalRep::principal_series(ch(0, Rational(1, 5), "TRIVIAL"), T()); }),
            ErrorCode::InvalidRep);
  EXPECT_EQ(code_of([] { GL2LocalRep::steinberg(corpus::mu()); }), ErrorCode::InvalidRep);
  EXPECT_EQ(code_of([] { GL2LocalRep::steinberg(T().times_nu(1)); }), ErrorCode::InvalidRep);
  EXPECT_EQ(code_of([] { GL2LocalRep::supercuspidal(3, 2, "A", false); }), ErrorCode::InvalidRep);
  EXPECT_EQ(code_of([] { GL2LocalRep::supercuspidal(3, 1, "A"); }), ErrorCode::InvalidRep);
}

TEST(GL2LocalRep, RejectsMixedPrimes) {
  EXPECT_EQ(code_of([] { GL2LocalRep::principal_series(PadicCharacter::trivial(2), PadicCharacter::trivial(3)); }),
            ErrorCode::InvalidRep);
}

TEST(CharRatio, Examples) {
  EXPECT_EQ(char_ratio_nu_exponent(T().times_nu(Rational(1, 2)), T().times_nu(Rational(-1, 2))), Rational(1));
  PadicCharacter m = corpus::mu().times_nu(Rational(2, 7));
  EXPECT_EQ(char_ratio_nu_exponent(m, m), Rational(0));
  EXPECT_EQ(char_ratio_nu_exponent(ch(0, Rational(1, 3), "labelA"), ch(0, Rational(1, 3), "labelB")),
            std::nullopt);
}

TEST(IsDiscreteSeries, Examples) {
  EXPECT_TRUE(is_discrete_series(corpus::st(T())));
  EXPECT_FALSE(is_discrete_series(corpus::ps(Rational(1, 5))));
  EXPECT_TRUE(is_discrete_series(corpus::sc(2, "A")));
  EXPECT_FALSE(is_discrete_series(corpus::one(T())));
}

TEST(Twist, Examples) {
  GL2LocalRep r = twist(corpus::st(T()), corpus::uq());
  ASSERT_EQ(r.kind(), RepKind::Steinberg);
  EXPECT_EQ(std::get<SteinbergTwist>(r.variant()).chi.label(), "UNRAM_QUAD");

  GL2LocalRep s = twist(corpus::sc(3, "A"), corpus::uq());
  EXPECT_EQ(conductor_gl2(s), 3);
  EXPECT_NE(s.key(), corpus::sc(3, "A").key());

  EXPECT_EQ(code_of([] { twist(corpus::sc(2, "A"), corpus::psi()); }), ErrorCode::TwistIndeterminate);
}

TEST(Twist, AnnotatedSupercuspidalTwist) {
  GL2LocalRep s = corpus::sc(2, "A", {{"psi", 3}});
  GL2LocalRep t = twist(s, corpus::psi());
  EXPECT_EQ(conductor_gl2(t), 3);
  EXPECT_EQ(conductor_gl2(twist(t, corpus::psi())), 2);
}

TEST(Twist, PrincipalSeriesMultipliesBothCharacters) {
  GL2LocalRep r = twist(corpus::ps(Rational(1, 5)), corpus::psi());
  const auto& ps = std::get<PrincipalSeries>(r.variant());
  EXPECT_EQ(ps.chi1.label(), "psi");
  EXPECT_EQ(ps.chi2.label(), "psi");
  EXPECT_EQ(conductor_gl2(r), 2);
}

// ---------------------------------------------------------------------------
// Properties

TEST(LocalRepsProperty, ConductorInvariantUnderSwap) {
  gen::Gen g(11);
  for (int i = 0; i < 300; ++i) {
    GL2LocalRep r = g.rep(kPrime);
    if (r.kind() != RepKind::PrincipalSeries) continue;
    const auto& ps = std::get<PrincipalSeries>(r.variant());
    GL2LocalRep swapped = GL2LocalRep::principal_series(ps.chi2, ps.chi1);
    EXPECT_EQ(conductor_gl2(r), conductor_gl2(swapped));
  }
}

TEST(LocalRepsProperty, UnramifiedTwistPreservesConductor) {
  gen::Gen g(12);
  for (int i = 0; i < 300; ++i) {
    GL2LocalRep r = g.rep(kPrime);
    if (r.kind() == RepKind::OneDimensional) continue;
    PadicCharacter chi = g.coin() ? corpus::uq() : ch(0, 0, "zeta", OrderHint::Quadratic);
    chi = chi.times_nu(g.nu_exponent());
    EXPECT_EQ(conductor_gl2(twist(r, chi)), conductor_gl2(r)) << r.key();
  }
}

TEST(LocalRepsProperty, ConductorZeroIffUnramifiedPrincipalSeries) {
  gen::Gen g(13);
  for (int i = 0; i < 300; ++i) {
    GL2LocalRep r = g.rep(kPrime);
    if (r.kind() == RepKind::OneDimensional) continue;
    bool unramified_ps = false;
    if (const auto* ps = std::get_if<PrincipalSeries>(&r.variant()))
      unramified_ps = ps->chi1.conductor() == 0 && ps->chi2.conductor() == 0;
    EXPECT_EQ(conductor_gl2(r) == 0, unramified_ps) << r.key();
  }
}

TEST(LocalRepsProperty, RatioIsAntisymmetric) {
  gen::Gen g(14);
  for (int i = 0; i < 500; ++i) {
    PadicCharacter a = g.any_finite_char(kPrime).times_nu(g.nu_exponent());
    PadicCharacter b = g.coin() ? a.times_nu(g.nu_exponent()) : g.any_finite_char(kPrime).times_nu(g.nu_exponent());
    auto ab = char_ratio_nu_exponent(a, b);
    auto ba = char_ratio_nu_exponent(b, a);
    ASSERT_EQ(ab.has_value(), ba.has_value());
    if (ab) {
      EXPECT_EQ(*ab, -*ba);
    }
  }
}
