#pragma once

// One canonical input pair per local case, with the expected type and level.

#include "paramodular/theta_resolver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace corpus {

using namespace paramodular;

inline constexpr std::int64_t kPrime = 3;

inline PadicCharacter ch(int a, Rational nu, const std::string& label,
                         std::optional<OrderHint> order = std::nullopt) {
  return PadicCharacter::make(kPrime, a, nu, label, order);
}

inline PadicCharacter triv() { return PadicCharacter::trivial(kPrime); }
inline PadicCharacter uq() { return ch(0, 0, "UNRAM_QUAD", OrderHint::Quadratic); }
/// Ramified quadratic, a = 1.
inline PadicCharacter psi() { return ch(1, 0, "psi", OrderHint::Quadratic); }
/// Ramified quadratic, a = 2.
inline PadicCharacter phi() { return ch(2, 0, "phi", OrderHint::Quadratic); }
/// Unramified quadratic with an opaque label that sorts after lowercase letters.
inline PadicCharacter zeta() { return ch(0, 0, "zeta", OrderHint::Quadratic); }
/// Ramified, order unknown, a = 1.
inline PadicCharacter mu() { return ch(1, 0, "mu", OrderHint::Unknown); }

inline GL2LocalRep st(const PadicCharacter& c) { return GL2LocalRep::steinberg(c); }
inline GL2LocalRep sc(int a, const std::string& label, std::map<std::string, int> twisted = {}) {
  return GL2LocalRep::supercuspidal(kPrime, a, label, true, std::move(twisted));
}
inline GL2LocalRep one(const PadicCharacter& c) { return GL2LocalRep::one_dimensional(c); }
/// PS(nu^s chi, nu^-s chi^-1).
inline GL2LocalRep ps(Rational s, const PadicCharacter& c = triv()) {
  return GL2LocalRep::principal_series(c.times_nu(s), c.inverse().times_nu(-s));
}

struct CaseExample {
  CaseLabel label;
  GL2LocalRep tau1;
  GL2LocalRep tau2;
  GSp4TypeLabel type;
  Level level;
  std::string note;
};

/// The canonical pair for each of the 18 labels, in label order.
inline std::vector<CaseExample> canonical_cases() {
  return {
      {CaseLabel::Ia, st(triv()), st(triv()), GSp4TypeLabel::VIIIa, Level::exact(2), "2a(tau), a(St) = 1"},
      {CaseLabel::Ib1, ps(Rational(1, 3), mu()), ps(Rational(1, 3), mu()), GSp4TypeLabel::I, Level::exact(4),
       "a(chi') + 3a(chi) = 1 + 3"},
      {CaseLabel::Ib2, one(triv()), one(triv()), GSp4TypeLabel::VId, Level::exact(0), "sigma unramified"},
      {CaseLabel::II, sc(2, "A"), sc(3, "B"), GSp4TypeLabel::Supercuspidal, Level::lower_bound(2), ">= 2"},
      {CaseLabel::III, sc(2, "A"), st(triv()), GSp4TypeLabel::XIa, Level::exact(3), "a(tau1) + 1"},
      {CaseLabel::IV, st(triv()), st(uq()), GSp4TypeLabel::Va, Level::exact(2), "sigma, xi unramified"},
      {CaseLabel::V1, sc(2, "A"), ps(Rational(1, 5)), GSp4TypeLabel::X, Level::exact(2), "a(tau1) + 2a(chi)"},
      {CaseLabel::V2, sc(2, "A"), one(triv()), GSp4TypeLabel::XIb, Level::exact(2), "a(sigma tau')"},
      {CaseLabel::V3, st(triv()), ps(Rational(1, 5)), GSp4TypeLabel::X, Level::exact(1), "a(tau1) + 2a(chi)"},
      {CaseLabel::V4, st(triv()), one(triv()), GSp4TypeLabel::VIc, Level::exact(1), "sigma unramified"},
      {CaseLabel::V5, st(triv()), ps(Rational(1, 5), mu()), GSp4TypeLabel::X, Level::exact(3), "1 + 2a(chi)"},
      {CaseLabel::V6, st(triv()), one(uq()), GSp4TypeLabel::XIb, Level::exact(1), "a(sigma tau')"},
      {CaseLabel::VI1, ps(Rational(1, 3)), ps(Rational(1, 5)), GSp4TypeLabel::I, Level::exact(0),
       "all conductors zero"},
      {CaseLabel::VI2, ps(-1, mu()), one(triv()), GSp4TypeLabel::IIb, Level::exact(2), "2a(chi1)"},
      {CaseLabel::VI3, ps(Rational(-5, 4)), ps(Rational(-1, 4)), GSp4TypeLabel::IIIb, Level::exact(0),
       "sigma unramified"},
      {CaseLabel::VI4, ps(Rational(-3, 2)), one(triv()), GSp4TypeLabel::IVd, Level::exact(0), "sigma unramified"},
      {CaseLabel::VI5, one(triv()), one(uq()), GSp4TypeLabel::Vd, Level::exact(0), "sigma, xi unramified"},
      {CaseLabel::VI6, one(triv()), one(triv()), GSp4TypeLabel::VId, Level::exact(0),
       "chi2'/chi1 = nu, chi2/chi1 = 1"},
  };
}

}  // namespace corpus
