#pragma once

// Symbolic characters of Q_p^x and irreducible admissible representations of
// GL(2, Q_p), together with their conductor exponents.
//
// A character is modelled as nu^s times a finite part. The finite part is a
// formal word in opaque labels; two distinct labels always denote distinct
// characters, and only label equality (never analytic values) is decidable.

#include "paramodular/error.hpp"
#include "paramodular/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace paramodular {

/// Three-valued answer for symbolic predicates: nullopt means "cannot decide".
using Tri = std::optional<bool>;

inline Tri tri_not(Tri a) { return a ? Tri(!*a) : std::nullopt; }
inline Tri tri_and(Tri a, Tri b) {
  if ((a && !*a) || (b && !*b)) return false;
  if (a && b) return true;
  return std::nullopt;
}
inline Tri tri_or(Tri a, Tri b) { return tri_not(tri_and(tri_not(a), tri_not(b))); }

inline constexpr std::string_view kTrivialLabel = "TRIVIAL";
inline constexpr std::string_view kUnramQuadLabel = "UNRAM_QUAD";

enum class OrderHint { Trivial, Quadratic, Unknown };

inline constexpr std::string_view to_string(OrderHint h) {
  switch (h) {
    case OrderHint::Trivial: return "trivial";
    case OrderHint::Quadratic: return "quadratic";
    case OrderHint::Unknown: return "unknown";
  }
  return "unknown";
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Formal product of opaque labels. Quadratic atoms are reduced mod 2.
class FiniteWord {
 public:
  struct Atom {
    int exponent = 0;
    bool quadratic = false;
    /// Conductor of the label itself, when it was introduced on its own.
    std::optional<int> conductor;
    bool operator==(const Atom& o) const { return exponent == o.exponent && quadratic == o.quadratic; }
  };

  FiniteWord() = default;

  /// Parses "A", "A^-1", "A*B^2", "TRIVIAL". Atom names may not contain '*' or '^'.
  static FiniteWord parse(std::string_view label, bool quadratic) {
    FiniteWord w;
    if (label.empty()) throw Error(ErrorCode::InvalidRep, "empty character label");
    std::size_t pos = 0;
    while (pos <= label.size()) {
      auto end = label.find('*', pos);
      if (end == std::string_view::npos) end = label.size();
      std::string_view factor = label.substr(pos, end - pos);
      int exponent = 1;
      auto caret = factor.find('^');
      std::string_view name = factor.substr(0, caret);
      if (caret != std::string_view::npos) {
        auto e = detail::parse_int(factor.substr(caret + 1));
        if (!e || *e == 0 || std::llabs(*e) > 1000)
          throw Error(ErrorCode::InvalidRep, "bad exponent in label '" + std::string(label) + "'");
        exponent = static_cast<int>(*e);
      }
      if (!valid_name(name))
        throw Error(ErrorCode::InvalidRep, "bad atom name in label '" + std::string(label) + "'");
      if (name != kTrivialLabel) {
        FiniteWord atom;
        bool quad = quadratic || name == kUnramQuadLabel;
        atom.atoms_[std::string(name)] = Atom{exponent, quad, std::nullopt};
        atom.normalize();
        w = w * atom;
      }
      pos = end + 1;
    }
    return w;
  }

  bool empty() const { return atoms_.empty(); }
  const std::map<std::string, Atom>& atoms() const { return atoms_; }

  FiniteWord operator*(const FiniteWord& other) const {
    FiniteWord out = *this;
    for (const auto& [name, atom] : other.atoms_) {
      auto& slot = out.atoms_[name];
      if (slot.conductor && atom.conductor && *slot.conductor != *atom.conductor)
        throw Error(ErrorCode::InvalidRep, "label '" + name + "' used with conductors " +
                                               std::to_string(*slot.conductor) + " and " +
                                               std::to_string(*atom.conductor));
      if (slot.quadratic != atom.quadratic && slot.exponent != 0)
        throw Error(ErrorCode::InvalidRep, "label '" + name + "' used with two different orders");
      slot.exponent += atom.exponent;
      slot.quadratic = slot.quadratic || atom.quadratic;
      if (!slot.conductor) slot.conductor = atom.conductor;
    }
    out.normalize();
    return out;
  }

  FiniteWord inverse() const {
    FiniteWord out = *this;
    for (auto& [name, atom] : out.atoms_) atom.exponent = -atom.exponent;
    out.normalize();
    return out;
  }

  FiniteWord power(int k) const {
    FiniteWord out = *this;
    for (auto& [name, atom] : out.atoms_) atom.exponent *= k;
    out.normalize();
    return out;
  }

  /// Is this word the trivial character? A factor with exponent +-1 means the
  /// question compares distinct labels (decided: no). Only higher powers of
  /// labels of unknown order leave it open.
  Tri is_trivial() const {
    if (atoms_.empty()) return true;
    for (const auto& [name, atom] : atoms_)
      if (std::abs(atom.exponent) == 1) return false;
    return std::nullopt;
  }

  /// a(chi) read off the word, available when it is a single label to the power +-1.
  std::optional<int> single_atom_conductor() const {
    if (atoms_.size() != 1) return std::nullopt;
    const auto& atom = atoms_.begin()->second;
    if (std::abs(atom.exponent) != 1) return std::nullopt;
    return atom.conductor;
  }

  FiniteWord with_single_atom_conductor(int a) const {
    FiniteWord out = *this;
    if (out.atoms_.size() == 1 && std::abs(out.atoms_.begin()->second.exponent) == 1)
      out.atoms_.begin()->second.conductor = a;
    return out;
  }

  Tri has_order_at_most_two() const { return power(2).is_trivial(); }

  OrderHint order_hint() const {
    if (atoms_.empty()) return OrderHint::Trivial;
    for (const auto& [name, atom] : atoms_)
      if (!atom.quadratic) return OrderHint::Unknown;
    return OrderHint::Quadratic;
  }

  std::string label() const {
    if (atoms_.empty()) return std::string(kTrivialLabel);
    std::string out;
    for (const auto& [name, atom] : atoms_) {
      if (!out.empty()) out += '*';
      out += name;
      if (atom.exponent != 1) out += "^" + std::to_string(atom.exponent);
    }
    return out;
  }

  bool operator==(const FiniteWord&) const = default;

 private:
  static bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
      return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
             c == '_' || c == '.' || c == ':' || c == '@' || c == '#' || c == '(' || c == ')' ||
             c == '-' || c == '[' || c == ']';
    });
  }

  void normalize() {
    for (auto it = atoms_.begin(); it != atoms_.end();) {
      auto& atom = it->second;
      if (atom.quadratic) atom.exponent = ((atom.exponent % 2) + 2) % 2;
      if (atom.exponent == 0)
        it = atoms_.erase(it);
      else
        ++it;
    }
  }

  std::map<std::string, Atom> atoms_;
};

/// Character nu^s * (finite part) of Q_p^x with conductor exponent a(chi).
class PadicCharacter {
 public:
  static PadicCharacter make(std::int64_t prime, int conductor_exp, Rational nu_exp,
                             std::string_view label,
                             std::optional<OrderHint> order_hint = std::nullopt) {
    if (!is_prime(prime))
      throw Error(ErrorCode::InvalidRep, "character prime " + std::to_string(prime) + " is not prime");
    if (conductor_exp < 0) throw Error(ErrorCode::InvalidRep, "negative conductor exponent");
    bool quadratic = order_hint == OrderHint::Quadratic;
    FiniteWord word = FiniteWord::parse(label, quadratic);
    if (label == kTrivialLabel && order_hint && *order_hint != OrderHint::Trivial)
      throw Error(ErrorCode::InvalidRep, "TRIVIAL label requires order trivial");
    if (label == kUnramQuadLabel && order_hint && *order_hint != OrderHint::Quadratic)
      throw Error(ErrorCode::InvalidRep, "UNRAM_QUAD label requires order quadratic");
    if (order_hint == OrderHint::Trivial && !word.empty())
      throw Error(ErrorCode::InvalidRep, "order trivial requires the TRIVIAL label");
    if (word.empty() && conductor_exp != 0)
      throw Error(ErrorCode::InvalidRep, "trivial finite part must be unramified");
    if (label == kUnramQuadLabel && conductor_exp != 0)
      throw Error(ErrorCode::InvalidRep, "UNRAM_QUAD is unramified by definition");
    return PadicCharacter(prime, conductor_exp, nu_exp, word.with_single_atom_conductor(conductor_exp));
  }

  /// The unramified character nu^s.
  static PadicCharacter nu_power(std::int64_t prime, Rational s) {
    return PadicCharacter(prime, 0, s, FiniteWord{});
  }

  static PadicCharacter trivial(std::int64_t prime) { return nu_power(prime, 0); }

  std::int64_t prime() const { return prime_; }
  const Rational& nu_exp() const { return nu_; }
  const FiniteWord& finite() const { return finite_; }
  std::string label() const { return finite_.label(); }
  OrderHint order_hint() const { return finite_.order_hint(); }

  /// nullopt when the character arose from a product whose conductor the
  /// symbolic data cannot pin down.
  std::optional<int> known_conductor() const { return conductor_; }

  int conductor() const {
    if (!conductor_)
      throw Error(ErrorCode::TwistIndeterminate,
                  "conductor of character " + key() + " is not determined by the symbolic data");
    return *conductor_;
  }

  bool is_unramified() const { return conductor() == 0; }

  PadicCharacter operator*(const PadicCharacter& other) const {
    check_same_prime(other);
    FiniteWord word = finite_ * other.finite_;
    std::optional<int> conductor = product_conductor(conductor_, other.conductor_, word);
    return PadicCharacter(prime_, conductor, nu_ + other.nu_, std::move(word));
  }

  PadicCharacter inverse() const { return PadicCharacter(prime_, conductor_, -nu_, finite_.inverse()); }

  PadicCharacter times_nu(Rational s) const { return PadicCharacter(prime_, conductor_, nu_ + s, finite_); }

  PadicCharacter square() const { return *this * *this; }

  /// Symbolic equality of characters.
  Tri same_as(const PadicCharacter& other) const {
    check_same_prime(other);
    if (nu_ != other.nu_) return false;
    return (finite_ * other.finite_.inverse()).is_trivial();
  }

  /// Is this character exactly nu^s?
  Tri equals_nu_power(Rational s) const {
    if (nu_ != s) return false;
    return finite_.is_trivial();
  }

  /// Canonical text used for ordering and keys.
  std::string key() const {
    std::string out = "nu^" + format_rational(nu_) + "*" + label();
    out += conductor_ ? "[a=" + std::to_string(*conductor_) + "]" : "[a=?]";
    return out;
  }

  void check_same_prime(const PadicCharacter& other) const {
    if (prime_ != other.prime_)
      throw Error(ErrorCode::InvalidRep, "characters at different primes " + std::to_string(prime_) +
                                             " and " + std::to_string(other.prime_));
  }

 private:
  PadicCharacter(std::int64_t prime, std::optional<int> conductor, Rational nu, FiniteWord word)
      : prime_(prime), conductor_(conductor), nu_(nu), finite_(std::move(word)) {}

  static std::optional<int> product_conductor(std::optional<int> a, std::optional<int> b,
                                              const FiniteWord& product) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (product.is_trivial() == true) return 0;
    if (a && b && *a != *b) return std::max(*a, *b);
    return product.single_atom_conductor();
  }

  std::int64_t prime_;
  std::optional<int> conductor_;
  Rational nu_;
  FiniteWord finite_;
};

/// Returns s when chi1 / chi2 is provably the pure power nu^s.
inline std::optional<Rational> char_ratio_nu_exponent(const PadicCharacter& chi1,
                                                      const PadicCharacter& chi2) {
  PadicCharacter ratio = chi1 * chi2.inverse();
  if (!ratio.finite().empty()) return std::nullopt;
  return ratio.nu_exp();
}

// ---------------------------------------------------------------------------

struct PrincipalSeries {
  PadicCharacter chi1;
  PadicCharacter chi2;
};

struct SteinbergTwist {
  PadicCharacter chi;
};

struct Supercuspidal {
  std::int64_t prime;
  /// a(tau) of this (possibly twisted) representation.
  int conductor_exp;
  int base_conductor_exp;
  std::string base_label;
  bool trivial_central_char;
  /// Accumulated twist relative to the base representation.
  PadicCharacter twist;
  /// a(tau (x) chi) for ramified twists, keyed by the finite label of chi.
  std::map<std::string, int> twisted_conductors;

  std::string label() const {
    if (twist.finite().empty() && twist.nu_exp().numerator() == 0) return base_label;
    return base_label + "(x)" + twist.label() +
           (twist.nu_exp().numerator() == 0 ? "" : "*nu^" + format_rational(twist.nu_exp()));
  }
};

/// sigma o det. Not generic and not of the Table-style conductor list, but it
/// is the non-discrete constituent of a reducible principal series and is
/// needed as an input to the reducible branches of the lift.
struct OneDimensional {
  PadicCharacter sigma;
};

enum class RepKind { PrincipalSeries, Steinberg, Supercuspidal, OneDimensional };

inline constexpr std::string_view to_string(RepKind k) {
  switch (k) {
    case RepKind::PrincipalSeries: return "ps";
    case RepKind::Steinberg: return "st";
    case RepKind::Supercuspidal: return "sc";
    case RepKind::OneDimensional: return "one_dim";
  }
  return "?";
}

class GL2LocalRep {
 public:
  using Variant = std::variant<PrincipalSeries, SteinbergTwist, Supercuspidal, OneDimensional>;

  static GL2LocalRep principal_series(PadicCharacter chi1, PadicCharacter chi2) {
    chi1.check_same_prime(chi2);
    PadicCharacter ratio = chi1 * chi2.inverse();
    Tri degenerate = tri_or(ratio.equals_nu_power(1), ratio.equals_nu_power(-1));
    if (degenerate == true)
      throw Error(ErrorCode::InvalidRep, "principal series with chi1/chi2 = nu^{+-1} is reducible");
    if (!degenerate)
      throw Error(ErrorCode::UndecidableCase, "cannot decide irreducibility of principal series");
    Tri central = (chi1 * chi2).equals_nu_power(0);
    if (central == false)
      throw Error(ErrorCode::InvalidRep, "principal series must have trivial central character");
    if (!central)
      throw Error(ErrorCode::UndecidableCase, "cannot decide central character of principal series");
    (void)chi1.conductor();
    (void)chi2.conductor();
    return GL2LocalRep(PrincipalSeries{std::move(chi1), std::move(chi2)});
  }

  static GL2LocalRep steinberg(PadicCharacter chi) {
    if (chi.nu_exp().numerator() != 0 || chi.order_hint() == OrderHint::Unknown)
      throw Error(ErrorCode::InvalidRep,
                  "Steinberg twist needs chi^2 = 1 (nu exponent 0, order trivial or quadratic)");
    (void)chi.conductor();
    return GL2LocalRep(SteinbergTwist{std::move(chi)});
  }

  static GL2LocalRep supercuspidal(std::int64_t prime, int conductor_exp, std::string label,
                                   bool trivial_central_char = true,
                                   std::map<std::string, int> twisted_conductors = {}) {
    if (!is_prime(prime))
      throw Error(ErrorCode::InvalidRep, "prime " + std::to_string(prime) + " is not prime");
    if (conductor_exp < 2) throw Error(ErrorCode::InvalidRep, "supercuspidal conductor must be >= 2");
    if (!trivial_central_char)
      throw Error(ErrorCode::InvalidRep, "supercuspidal must have trivial central character");
    if (label.empty()) throw Error(ErrorCode::InvalidRep, "supercuspidal label must be non-empty");
    for (const auto& [k, a] : twisted_conductors)
      if (a < 2) throw Error(ErrorCode::InvalidRep, "twisted supercuspidal conductor must be >= 2");
    return GL2LocalRep(Supercuspidal{prime, conductor_exp, conductor_exp, std::move(label), true,
                                     PadicCharacter::trivial(prime), std::move(twisted_conductors)});
  }

  static GL2LocalRep one_dimensional(PadicCharacter sigma) {
    if (sigma.nu_exp().numerator() != 0 || sigma.order_hint() == OrderHint::Unknown)
      throw Error(ErrorCode::InvalidRep,
                  "one-dimensional representation needs sigma^2 = 1 (order trivial or quadratic)");
    (void)sigma.conductor();
    return GL2LocalRep(OneDimensional{std::move(sigma)});
  }

  /// Unchecked construction for twisted intermediates.
  static GL2LocalRep from_variant(Variant v) { return GL2LocalRep(std::move(v)); }

  const Variant& variant() const { return v_; }

  RepKind kind() const { return static_cast<RepKind>(v_.index()); }

  std::int64_t prime() const {
    return std::visit(
        [](const auto& r) -> std::int64_t {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, PrincipalSeries>) return r.chi1.prime();
          else if constexpr (std::is_same_v<T, SteinbergTwist>) return r.chi.prime();
          else if constexpr (std::is_same_v<T, Supercuspidal>) return r.prime;
          else return r.sigma.prime();
        },
        v_);
  }

  Tri has_trivial_central_character() const {
    return std::visit(
        [](const auto& r) -> Tri {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, PrincipalSeries>) return (r.chi1 * r.chi2).equals_nu_power(0);
          else if constexpr (std::is_same_v<T, SteinbergTwist>) return r.chi.square().equals_nu_power(0);
          else if constexpr (std::is_same_v<T, Supercuspidal>)
            return tri_and(r.trivial_central_char, r.twist.square().equals_nu_power(0));
          else return r.sigma.square().equals_nu_power(0);
        },
        v_);
  }

  std::string key() const {
    return std::visit(
        [](const auto& r) -> std::string {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, PrincipalSeries>) {
            std::string a = r.chi1.key(), b = r.chi2.key();
            if (b < a) std::swap(a, b);
            return "ps(" + a + "," + b + ")";
          } else if constexpr (std::is_same_v<T, SteinbergTwist>) {
            return "st(" + r.chi.key() + ")";
          } else if constexpr (std::is_same_v<T, Supercuspidal>) {
            return "sc(" + r.label() + ",a=" + std::to_string(r.conductor_exp) + ")";
          } else {
            return "one_dim(" + r.sigma.key() + ")";
          }
        },
        v_);
  }

 private:
  explicit GL2LocalRep(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// ---------------------------------------------------------------------------

inline bool is_discrete_series(const GL2LocalRep& rep) {
  return rep.kind() == RepKind::Steinberg || rep.kind() == RepKind::Supercuspidal;
}

/// Conductor exponent a(tau).
inline int conductor_gl2(const GL2LocalRep& rep) {
  return std::visit(
      [](const auto& r) -> int {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PrincipalSeries>) {
          return r.chi1.conductor() + r.chi2.conductor();
        } else if constexpr (std::is_same_v<T, SteinbergTwist>) {
          int a = r.chi.conductor();
          return a == 0 ? 1 : 2 * a;
        } else if constexpr (std::is_same_v<T, Supercuspidal>) {
          return r.conductor_exp;
        } else {
          throw Error(ErrorCode::InvalidRep,
                      "one-dimensional representations have no conductor (not infinite-dimensional)");
        }
      },
      rep.variant());
}

/// tau (x) chi.
inline GL2LocalRep twist(const GL2LocalRep& rep, const PadicCharacter& chi) {
  if (rep.prime() != chi.prime())
    throw Error(ErrorCode::InvalidRep, "twist by a character at a different prime");
  return std::visit(
      [&](const auto& r) -> GL2LocalRep {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PrincipalSeries>) {
          return GL2LocalRep::from_variant(PrincipalSeries{chi * r.chi1, chi * r.chi2});
        } else if constexpr (std::is_same_v<T, SteinbergTwist>) {
          return GL2LocalRep::from_variant(SteinbergTwist{chi * r.chi});
        } else if constexpr (std::is_same_v<T, Supercuspidal>) {
          Supercuspidal out = r;
          out.twist = r.twist * chi;
          out.trivial_central_char = out.twist.square().equals_nu_power(0) == true;
          if (chi.known_conductor() == 0) return GL2LocalRep::from_variant(std::move(out));
          if (out.twist.known_conductor() == 0) {
            out.conductor_exp = r.base_conductor_exp;
            return GL2LocalRep::from_variant(std::move(out));
          }
          auto it = r.twisted_conductors.find(out.twist.label());
          if (it == r.twisted_conductors.end())
            throw Error(ErrorCode::TwistIndeterminate,
                        "no conductor formula for supercuspidal " + r.base_label +
                            " twisted by ramified character " + out.twist.label());
          out.conductor_exp = it->second;
          return GL2LocalRep::from_variant(std::move(out));
        } else {
          return GL2LocalRep::from_variant(OneDimensional{chi * r.sigma});
        }
      },
      rep.variant());
}

}  // namespace paramodular
