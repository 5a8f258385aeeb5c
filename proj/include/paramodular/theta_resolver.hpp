#pragma once

// Local theta lifts from GSO(2,2) to GSp(4): case dispatch, Roberts-Schmidt
// type of the lift, and its paramodular level.

#include "paramodular/local_reps.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <string>
#include <string_view>
#include <utility>

namespace paramodular {

enum class CaseLabel { Ia, Ib1, Ib2, II, III, IV, V1, V2, V3, V4, V5, V6, VI1, VI2, VI3, VI4, VI5, VI6 };

inline constexpr std::array<CaseLabel, 18> kAllCases = {
    CaseLabel::Ia,  CaseLabel::Ib1, CaseLabel::Ib2, CaseLabel::II,  CaseLabel::III, CaseLabel::IV,
    CaseLabel::V1,  CaseLabel::V2,  CaseLabel::V3,  CaseLabel::V4,  CaseLabel::V5,  CaseLabel::V6,
    CaseLabel::VI1, CaseLabel::VI2, CaseLabel::VI3, CaseLabel::VI4, CaseLabel::VI5, CaseLabel::VI6};

inline constexpr std::string_view to_string(CaseLabel c) {
  constexpr std::array<std::string_view, 18> names = {"Ia", "Ib1", "Ib2", "II",  "III", "IV",
                                                      "V1", "V2",  "V3",  "V4",  "V5",  "V6",
                                                      "VI1", "VI2", "VI3", "VI4", "VI5", "VI6"};
  return names[static_cast<std::size_t>(c)];
}

enum class GSp4TypeLabel { I, IIb, IIIb, IVd, Va, Vd, VIc, VId, VIIIa, X, XIa, XIb, Supercuspidal };

inline constexpr std::string_view to_string(GSp4TypeLabel t) {
  constexpr std::array<std::string_view, 13> names = {"I",   "IIb", "IIIb",  "IVd", "Va",  "Vd", "VIc",
                                                      "VId", "VIIIa", "X", "XIa", "XIb", "Supercuspidal"};
  return names[static_cast<std::size_t>(t)];
}

struct Level {
  enum class Kind { Exact, LowerBound, NotParamodular };
  Kind kind = Kind::Exact;
  int value = 0;

  static Level exact(int n) { return {Kind::Exact, n}; }
  static Level lower_bound(int n) { return {Kind::LowerBound, n}; }
  static Level not_paramodular() { return {Kind::NotParamodular, 0}; }

  bool is_exact() const { return kind == Kind::Exact; }
  bool operator==(const Level&) const = default;
};

inline constexpr std::string_view to_string(Level::Kind k) {
  switch (k) {
    case Level::Kind::Exact: return "exact";
    case Level::Kind::LowerBound: return "lower_bound";
    case Level::Kind::NotParamodular: return "not_paramodular";
  }
  return "?";
}

inline std::string to_string(const Level& level) {
  switch (level.kind) {
    case Level::Kind::Exact: return std::to_string(level.value);
    case Level::Kind::LowerBound: return ">=" + std::to_string(level.value);
    case Level::Kind::NotParamodular: return "not paramodular";
  }
  return "?";
}

struct LiftResult {
  CaseLabel case_label;
  GSp4TypeLabel gsp4_type;
  Level level;
  bool operator==(const LiftResult&) const = default;
};

// ---------------------------------------------------------------------------
// Representation-level helpers

/// Symbolic isomorphism test for two representations.
inline Tri same_representation(const GL2LocalRep& a, const GL2LocalRep& b) {
  if (a.kind() != b.kind() || a.prime() != b.prime()) return false;
  return std::visit(
      [&](const auto& x) -> Tri {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.variant());
        if constexpr (std::is_same_v<T, PrincipalSeries>) {
          return tri_or(tri_and(x.chi1.same_as(y.chi1), x.chi2.same_as(y.chi2)),
                        tri_and(x.chi1.same_as(y.chi2), x.chi2.same_as(y.chi1)));
        } else if constexpr (std::is_same_v<T, SteinbergTwist>) {
          return x.chi.same_as(y.chi);
        } else if constexpr (std::is_same_v<T, Supercuspidal>) {
          if (x.base_label != y.base_label) return false;
          return x.twist.same_as(y.twist);
        } else {
          return x.sigma.same_as(y.sigma);
        }
      },
      a.variant());
}

/// (chi, chi') with tau a constituent of pi(chi, chi') and |chi/chi'| = nu^{-s}, s >= 0.
inline std::pair<PadicCharacter, PadicCharacter> inducing_pair(const GL2LocalRep& rep) {
  if (const auto* ps = std::get_if<PrincipalSeries>(&rep.variant())) {
    const PadicCharacter& a = ps->chi1;
    const PadicCharacter& b = ps->chi2;
    bool swap = b.nu_exp() < a.nu_exp() || (b.nu_exp() == a.nu_exp() && b.key() < a.key());
    return swap ? std::pair{b, a} : std::pair{a, b};
  }
  if (const auto* od = std::get_if<OneDimensional>(&rep.variant()))
    return {od->sigma.times_nu(Rational(-1, 2)), od->sigma.times_nu(Rational(1, 2))};
  throw Error(ErrorCode::InvalidRep, "discrete series has no inducing pair");
}

/// The s of |chi/chi'| = nu^{-s}.
inline Rational langlands_exponent(const GL2LocalRep& rep) {
  auto [chi, chi_prime] = inducing_pair(rep);
  return chi_prime.nu_exp() - chi.nu_exp();
}

namespace detail {

inline int discreteness_rank(const GL2LocalRep& rep) {
  switch (rep.kind()) {
    case RepKind::Supercuspidal: return 0;
    case RepKind::Steinberg: return 1;
    default: return 2;
  }
}

/// True when (b, a) is the canonical order of the unordered pair {a, b}.
inline bool should_swap(const GL2LocalRep& a, const GL2LocalRep& b) {
  int ra = discreteness_rank(a), rb = discreteness_rank(b);
  if (ra != rb) return rb < ra;
  if (ra == 2) {
    Rational sa = langlands_exponent(a), sb = langlands_exponent(b);
    if (sa != sb) return sa < sb;
  }
  return b.key() < a.key();
}

inline bool decide(Tri t, std::string_view what) {
  if (!t) throw Error(ErrorCode::UndecidableCase, "cannot decide " + std::string(what) + " symbolically");
  return *t;
}

inline Tri is_nu_power_pm(const PadicCharacter& chi, Rational s) {
  return tri_or(chi.equals_nu_power(s), chi.equals_nu_power(-s));
}

inline Tri is_nontrivial_quadratic(const PadicCharacter& xi) {
  if (xi.nu_exp().numerator() != 0) return false;
  return tri_and(tri_not(xi.finite().is_trivial()), xi.finite().has_order_at_most_two());
}

struct Canonical {
  CaseLabel label;
  GL2LocalRep t1;
  GL2LocalRep t2;
};

inline void validate_pair(const GL2LocalRep& t1, const GL2LocalRep& t2) {
  if (t1.prime() != t2.prime())
    throw Error(ErrorCode::InvalidRep, "representations at different primes " +
                                           std::to_string(t1.prime()) + " and " + std::to_string(t2.prime()));
  for (const auto* t : {&t1, &t2}) {
    Tri central = t->has_trivial_central_character();
    if (central == false) throw Error(ErrorCode::InvalidRep, "central character must be trivial");
    if (!central) throw Error(ErrorCode::UndecidableCase, "cannot decide triviality of central character");
  }
}

inline CaseLabel classify_non_discrete(const GL2LocalRep& t1, const GL2LocalRep& t2) {
  auto [chi1, chi1p] = inducing_pair(t1);
  auto [chi2, chi2p] = inducing_pair(t2);
  (void)chi1p;
  PadicCharacter A = chi2p * chi1.inverse();
  PadicCharacter B = chi2 * chi1.inverse();
  PadicCharacter AoverB = A * B.inverse();

  if (decide(tri_and(A.equals_nu_power(2), B.equals_nu_power(1)), "the VI4 pattern")) return CaseLabel::VI4;
  if (decide(tri_and(AoverB.equals_nu_power(1), is_nontrivial_quadratic(B)), "the VI5 pattern"))
    return CaseLabel::VI5;
  if (decide(tri_and(A.equals_nu_power(1), B.equals_nu_power(0)), "the VI6 pattern")) return CaseLabel::VI6;
  {
    PadicCharacter chi = B.times_nu(Rational(1, 2));
    Tri match = tri_and(AoverB.equals_nu_power(1),
                        tri_and(tri_not(is_nu_power_pm(chi, Rational(3, 2))),
                                tri_not(is_nu_power_pm(chi.square(), 1))));
    if (decide(match, "the VI2 pattern")) return CaseLabel::VI2;
  }
  {
    const PadicCharacter& chi = A;
    Tri match = tri_and(B.equals_nu_power(1),
                        tri_and(tri_not(chi.equals_nu_power(0)), tri_not(is_nu_power_pm(chi.square(), 2))));
    if (decide(match, "the VI3 pattern")) return CaseLabel::VI3;
  }
  return CaseLabel::VI1;
}

inline Canonical canonicalize(const GL2LocalRep& a, const GL2LocalRep& b) {
  validate_pair(a, b);
  const bool swap = should_swap(a, b);
  const GL2LocalRep& t1 = swap ? b : a;
  const GL2LocalRep& t2 = swap ? a : b;

  if (decide(same_representation(t1, t2), "whether tau1 and tau2 are isomorphic")) {
    switch (t1.kind()) {
      case RepKind::PrincipalSeries: return {CaseLabel::Ib1, t1, t2};
      case RepKind::OneDimensional: return {CaseLabel::Ib2, t1, t2};
      default: return {CaseLabel::Ia, t1, t2};
    }
  }

  const bool d1 = is_discrete_series(t1), d2 = is_discrete_series(t2);
  if (d1 && d2) {
    if (t1.kind() == RepKind::Supercuspidal)
      return {t2.kind() == RepKind::Supercuspidal ? CaseLabel::II : CaseLabel::III, t1, t2};
    return {CaseLabel::IV, t1, t2};
  }
  if (d1) {
    const bool reducible = t2.kind() == RepKind::OneDimensional;
    if (t1.kind() == RepKind::Supercuspidal) return {reducible ? CaseLabel::V2 : CaseLabel::V1, t1, t2};
    auto [chi, chi_prime] = inducing_pair(t2);
    (void)chi_prime;
    if (reducible) {
      const PadicCharacter& mu = std::get<SteinbergTwist>(t1.variant()).chi;
      PadicCharacter psi = mu * chi.inverse();
      return {decide(is_nu_power_pm(psi, Rational(1, 2)), "the V4 pattern") ? CaseLabel::V4 : CaseLabel::V6,
              t1, t2};
    }
    return {chi.is_unramified() ? CaseLabel::V3 : CaseLabel::V5, t1, t2};
  }
  return {classify_non_discrete(t1, t2), t1, t2};
}

inline Level spherical_or_not(bool unramified) {
  return unramified ? Level::exact(0) : Level::not_paramodular();
}

/// a(chi (tau (x) chi^{-1})), evaluated along the twist path.
inline int retwisted_conductor(const GL2LocalRep& tau, const PadicCharacter& chi) {
  return conductor_gl2(twist(twist(tau, chi.inverse()), chi));
}

}  // namespace detail

/// Case of the unordered pair {tau1, tau2}.
inline CaseLabel resolve_case(const GL2LocalRep& tau1, const GL2LocalRep& tau2) {
  return detail::canonicalize(tau1, tau2).label;
}

inline LiftResult local_theta_level(const GL2LocalRep& tau1, const GL2LocalRep& tau2) {
  using detail::spherical_or_not;
  auto [label, t1, t2] = detail::canonicalize(tau1, tau2);
  switch (label) {
    case CaseLabel::Ia:
      return {label, GSp4TypeLabel::VIIIa, Level::exact(2 * conductor_gl2(t1))};
    case CaseLabel::Ib1: {
      auto [chi, chi_prime] = inducing_pair(t1);
      return {label, GSp4TypeLabel::I, Level::exact(chi_prime.conductor() + 3 * chi.conductor())};
    }
    case CaseLabel::Ib2: {
      const PadicCharacter& sigma = std::get<OneDimensional>(t1.variant()).sigma;
      return {label, GSp4TypeLabel::VId, spherical_or_not(sigma.is_unramified())};
    }
    case CaseLabel::II:
      return {label, GSp4TypeLabel::Supercuspidal, Level::lower_bound(2)};
    case CaseLabel::III: {
      const PadicCharacter& chi = std::get<SteinbergTwist>(t2.variant()).chi;
      int inner = detail::retwisted_conductor(t1, chi);
      int a = chi.conductor();
      return {label, GSp4TypeLabel::XIa, Level::exact(inner + (a == 0 ? 1 : 2 * a))};
    }
    case CaseLabel::IV: {
      const PadicCharacter& sigma = std::get<SteinbergTwist>(t1.variant()).chi;
      PadicCharacter xi = std::get<SteinbergTwist>(t2.variant()).chi * sigma.inverse();
      int level = 0;
      if (sigma.is_unramified())
        level = xi.is_unramified() ? 2 : 2 * xi.conductor() + 1;
      else {
        PadicCharacter xi_sigma = xi * sigma;
        level = xi_sigma.is_unramified() ? 2 * sigma.conductor() + 1
                                         : 2 * xi_sigma.conductor() + 2 * sigma.conductor();
      }
      return {label, GSp4TypeLabel::Va, Level::exact(level)};
    }
    case CaseLabel::V1:
    case CaseLabel::V3:
    case CaseLabel::V5: {
      PadicCharacter chi = inducing_pair(t2).first;
      return {label, GSp4TypeLabel::X,
              Level::exact(detail::retwisted_conductor(t1, chi) + 2 * chi.conductor())};
    }
    case CaseLabel::V2:
    case CaseLabel::V6: {
      PadicCharacter chi = inducing_pair(t2).first;
      PadicCharacter sigma = chi.times_nu(Rational(1, 2));
      if (!sigma.is_unramified()) return {label, GSp4TypeLabel::XIb, Level::not_paramodular()};
      GL2LocalRep tau_prime = twist(twist(t1, chi.inverse()), PadicCharacter::nu_power(t1.prime(), Rational(-1, 2)));
      return {label, GSp4TypeLabel::XIb, Level::exact(conductor_gl2(twist(tau_prime, sigma)))};
    }
    case CaseLabel::V4: {
      PadicCharacter sigma = inducing_pair(t2).first.times_nu(Rational(1, 2));
      return {label, GSp4TypeLabel::VIc, sigma.is_unramified() ? Level::exact(1) : Level::not_paramodular()};
    }
    case CaseLabel::VI1: {
      auto [chi1, chi1p] = inducing_pair(t1);
      auto [chi2, chi2p] = inducing_pair(t2);
      (void)chi1p;
      return {label, GSp4TypeLabel::I,
              Level::exact(chi2p.conductor() + chi2.conductor() + 2 * chi1.conductor())};
    }
    case CaseLabel::VI2: {
      PadicCharacter chi1 = inducing_pair(t1).first;
      PadicCharacter chi = inducing_pair(t2).first * chi1.inverse();
      chi = chi.times_nu(Rational(1, 2));
      if (!(chi1 * chi).is_unramified()) return {label, GSp4TypeLabel::IIb, Level::not_paramodular()};
      return {label, GSp4TypeLabel::IIb, Level::exact(2 * chi1.conductor())};
    }
    case CaseLabel::VI3:
    case CaseLabel::VI6: {
      PadicCharacter sigma = inducing_pair(t1).first.times_nu(Rational(1, 2));
      auto type = label == CaseLabel::VI3 ? GSp4TypeLabel::IIIb : GSp4TypeLabel::VId;
      return {label, type, spherical_or_not(sigma.is_unramified())};
    }
    case CaseLabel::VI4: {
      PadicCharacter sigma = inducing_pair(t1).first.times_nu(Rational(3, 2));
      return {label, GSp4TypeLabel::IVd, spherical_or_not(sigma.is_unramified())};
    }
    case CaseLabel::VI5: {
      PadicCharacter chi1 = inducing_pair(t1).first;
      PadicCharacter sigma = chi1.times_nu(Rational(1, 2));
      PadicCharacter xi = inducing_pair(t2).first * chi1.inverse();
      return {label, GSp4TypeLabel::Vd, spherical_or_not(sigma.is_unramified() && xi.is_unramified())};
    }
  }
  throw Error(ErrorCode::UndecidableCase, "unhandled case");
}

// ---------------------------------------------------------------------------
// Paramodular group K(P^n)

using ExactRational = boost::multiprecision::cpp_rational;
using Matrix4 = std::array<std::array<ExactRational, 4>, 4>;

struct ParamodularQuery {
  Matrix4 entries;
  std::int64_t prime = 2;
  int level_exp = 0;
};

inline Matrix4 identity4() {
  Matrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = i == j ? 1 : 0;
  return m;
}

/// The form preserved up to similitude: antidiag(1, 1, -1, -1).
inline Matrix4 symplectic_form() {
  Matrix4 j;
  for (auto& row : j)
    for (auto& x : row) x = 0;
  j[0][3] = 1;
  j[1][2] = 1;
  j[2][1] = -1;
  j[3][0] = -1;
  return j;
}

inline Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
  Matrix4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      ExactRational sum = 0;
      for (int k = 0; k < 4; ++k) sum += a[i][k] * b[k][j];
      c[i][j] = sum;
    }
  return c;
}

inline Matrix4 transpose(const Matrix4& a) {
  Matrix4 t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = a[j][i];
  return t;
}

inline ExactRational determinant(Matrix4 m) {
  ExactRational det = 1;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    while (pivot < 4 && m[pivot][col] == 0) ++pivot;
    if (pivot == 4) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < 4; ++r) {
      ExactRational f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// p-adic valuation of a nonzero rational.
inline int padic_valuation(const ExactRational& x, std::int64_t p) {
  using boost::multiprecision::cpp_int;
  auto count = [p](cpp_int n) {
    int v = 0;
    if (n < 0) n = -n;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    return v;
  };
  return count(boost::multiprecision::numerator(x)) - count(boost::multiprecision::denominator(x));
}

/// Similitude factor lambda with g^t J g = lambda J, if g is in GSp(4, Q).
inline std::optional<ExactRational> similitude(const Matrix4& g) {
  Matrix4 j = symplectic_form();
  Matrix4 lhs = multiply(multiply(transpose(g), j), g);
  ExactRational lambda = lhs[0][3];
  if (lambda == 0) return std::nullopt;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (lhs[r][c] != lambda * j[r][c]) return std::nullopt;
  return lambda;
}

/// Minimal valuation of entry (r, c) in K(P^n).
inline int paramodular_slot_bound(int r, int c, int n) {
  static constexpr std::array<std::array<int, 4>, 4> pattern = {{
      {0, 0, 0, -1},
      {1, 0, 0, 0},
      {1, 0, 0, 0},
      {1, 1, 1, 0},
  }};
  return pattern[r][c] * n;
}

inline bool paramodular_member(const ParamodularQuery& q) {
  if (!is_prime(q.prime) || q.level_exp < 0) return false;
  auto lambda = similitude(q.entries);
  if (!lambda || padic_valuation(*lambda, q.prime) != 0) return false;
  ExactRational det = determinant(q.entries);
  if (det == 0 || padic_valuation(det, q.prime) != 0) return false;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const ExactRational& x = q.entries[r][c];
      if (x != 0 && padic_valuation(x, q.prime) < paramodular_slot_bound(r, c, q.level_exp)) return false;
    }
  return true;
}

}  // namespace paramodular
