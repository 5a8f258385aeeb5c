#pragma once

// Global paramodular level of the theta lift of a pair of newforms.

#include "paramodular/archimedean.hpp"
#include "paramodular/theta_resolver.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace paramodular {

struct NewformDescriptor {
  std::string name;
  int weight = 12;
  /// prime -> exponent; exponent-zero entries are dropped.
  std::map<std::int64_t, int> level;
  /// Local component at p; mandatory where the exponent is >= 2.
  std::map<std::int64_t, GL2LocalRep> annotations;
  /// Twist of Steinberg at p || N: "TRIVIAL" (default) or "UNRAM_QUAD".
  std::map<std::int64_t, std::string> steinberg_signs;

  std::int64_t level_value() const {
    std::int64_t n = 1;
    for (const auto& [p, e] : level)
      for (int i = 0; i < e; ++i) {
        if (n > std::numeric_limits<std::int64_t>::max() / p)
          throw Error(ErrorCode::InvalidDescriptor, "level does not fit in 64 bits", "level");
        n *= p;
      }
    return n;
  }
};

inline std::map<std::int64_t, int> factor(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidDescriptor, "level must be a positive integer", "level");
  std::map<std::int64_t, int> out;
  for (std::int64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

/// Checks the descriptor invariants; throws InvalidDescriptor with a field path.
inline void validate(NewformDescriptor& f) {
  if (f.weight < 4 || f.weight % 2 != 0)
    throw Error(ErrorCode::InvalidDescriptor, "weight must be an even integer >= 4", "weight");
  for (auto it = f.level.begin(); it != f.level.end();) {
    const std::string path = "level." + std::to_string(it->first);
    if (!is_prime(it->first)) throw Error(ErrorCode::InvalidDescriptor, "level key is not prime", path);
    if (it->second < 0) throw Error(ErrorCode::InvalidDescriptor, "negative exponent", path);
    it = it->second == 0 ? f.level.erase(it) : std::next(it);
  }
  (void)f.level_value();
  for (const auto& [p, rep] : f.annotations) {
    const std::string path = "annotations." + std::to_string(p);
    if (rep.prime() != p)
      throw Error(ErrorCode::InvalidDescriptor, "annotation prime does not match its key", path + ".prime");
    if (rep.kind() == RepKind::OneDimensional)
      throw Error(ErrorCode::InvalidDescriptor, "local components of cusp forms are infinite-dimensional",
                  path + ".kind");
    auto it = f.level.find(p);
    int e = it == f.level.end() ? 0 : it->second;
    if (conductor_gl2(rep) != e)
      throw Error(ErrorCode::InvalidDescriptor,
                  "annotation conductor " + std::to_string(conductor_gl2(rep)) + " != level exponent " +
                      std::to_string(e),
                  path);
  }
  for (const auto& [p, sign] : f.steinberg_signs) {
    const std::string path = "steinberg_signs." + std::to_string(p);
    if (sign != kTrivialLabel && sign != kUnramQuadLabel)
      throw Error(ErrorCode::InvalidDescriptor, "sign must be TRIVIAL or UNRAM_QUAD", path);
    auto it = f.level.find(p);
    if (it == f.level.end() || it->second != 1)
      throw Error(ErrorCode::InvalidDescriptor, "sign annotation only applies where p exactly divides N", path);
  }
}

namespace detail {

inline std::string sanitize_atom(const std::string& s) {
  std::string out;
  for (char c : s) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
              c == '.' || c == '-';
    out += ok ? c : '_';
  }
  return out;
}

inline std::string default_name(const NewformDescriptor& f) {
  return "k" + std::to_string(f.weight) + "N" + std::to_string(f.level_value());
}

}  // namespace detail

/// Local component of f at p. `name` keys the opaque Satake parameter.
inline GL2LocalRep local_component(const NewformDescriptor& f, std::int64_t p, const std::string& name) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidRep, std::to_string(p) + " is not prime");
  if (auto it = f.annotations.find(p); it != f.annotations.end()) return it->second;
  auto it = f.level.find(p);
  const int e = it == f.level.end() ? 0 : it->second;
  if (e == 0) {
    std::string atom = "sat(" + detail::sanitize_atom(name) + "@" + std::to_string(p) + ")";
    PadicCharacter alpha = PadicCharacter::make(p, 0, 0, atom, OrderHint::Unknown);
    return GL2LocalRep::principal_series(alpha, alpha.inverse());
  }
  if (e == 1) {
    auto s = f.steinberg_signs.find(p);
    if (s == f.steinberg_signs.end() || s->second == kTrivialLabel)
      return GL2LocalRep::steinberg(PadicCharacter::trivial(p));
    return GL2LocalRep::steinberg(PadicCharacter::make(p, 0, 0, kUnramQuadLabel, OrderHint::Quadratic));
  }
  throw Error(ErrorCode::MissingAnnotation,
              "exponent " + std::to_string(e) + " at p=" + std::to_string(p) +
                  " needs an explicit local component (supercuspidal, ramified Steinberg twist or "
                  "ramified principal series)",
              "annotations." + std::to_string(p));
}

/// Local data at the primes of N and at any annotated prime.
inline std::map<std::int64_t, GL2LocalRep> local_data_from_newform(const NewformDescriptor& f) {
  NewformDescriptor g = f;
  validate(g);
  std::set<std::int64_t> primes;
  for (const auto& [p, e] : g.level) primes.insert(p);
  for (const auto& [p, rep] : g.annotations) primes.insert(p);
  std::string name = g.name.empty() ? detail::default_name(g) : g.name;
  std::map<std::int64_t, GL2LocalRep> out;
  for (std::int64_t p : primes) out.emplace(p, local_component(g, p, name));
  return out;
}

struct PrimeOutcome {
  std::optional<LiftResult> result;
  /// Set when the prime could not be resolved.
  std::optional<ErrorCode> error;
  std::string message;
};

struct TotalLevel {
  enum class Kind { Exact, Interval };
  Kind kind = Kind::Exact;
  /// Exact level, or the lower end of the interval.
  std::map<std::int64_t, int> factored;
  /// prime -> reason the exponent there is not pinned down.
  std::map<std::int64_t, std::string> flags;

  std::int64_t value() const {
    NewformDescriptor tmp;
    tmp.level = factored;
    return tmp.level_value();
  }
};

struct ArchimedeanMatch {
  HighestWeight weight;
  bool sufficiently_regular = false;
};

struct GlobalLiftReport {
  std::map<std::int64_t, PrimeOutcome> per_prime;
  TotalLevel total_level;
  /// (l, m) with weights (l+m+4, l-m+2), if the weights fit that pattern.
  std::optional<ArchimedeanMatch> archimedean;
};

/// (l, m) with {k1, k2} = {l+m+4, l-m+2}.
inline std::optional<ArchimedeanMatch> match_weights(int k1, int k2) {
  for (auto [a, b] : {std::pair{k1, k2}, std::pair{k2, k1}}) {
    int twice_l = a + b - 6, twice_m = a - b - 2;
    if (twice_l % 2 != 0 || twice_m % 2 != 0) continue;
    int l = twice_l / 2, m = twice_m / 2;
    if (m < 0 || l < m) continue;
    HighestWeight w(l, m);
    return ArchimedeanMatch{w, sufficiently_regular(w)};
  }
  return std::nullopt;
}

inline GlobalLiftReport global_lift_level(const NewformDescriptor& f1_in, const NewformDescriptor& f2_in) {
  NewformDescriptor f1 = f1_in, f2 = f2_in;
  validate(f1);
  validate(f2);
  std::string n1 = f1.name.empty() ? detail::default_name(f1) : f1.name;
  std::string n2 = f2.name.empty() ? detail::default_name(f2) : f2.name;
  if (n1 == n2) {
    n1 += "a";
    n2 += "b";
  }

  std::set<std::int64_t> primes;
  for (const auto& [p, e] : f1.level) primes.insert(p);
  for (const auto& [p, e] : f2.level) primes.insert(p);

  GlobalLiftReport report;
  for (std::int64_t p : primes) {
    PrimeOutcome outcome;
    try {
      outcome.result = local_theta_level(local_component(f1, p, n1), local_component(f2, p, n2));
    } catch (const Error& e) {
      outcome.error = e.code();
      outcome.message = e.what();
    }
    report.per_prime.emplace(p, std::move(outcome));
  }

  TotalLevel& total = report.total_level;
  for (const auto& [p, outcome] : report.per_prime) {
    if (outcome.error) {
      total.kind = TotalLevel::Kind::Interval;
      total.flags[p] = std::string(to_string(*outcome.error));
      continue;
    }
    const Level& lv = outcome.result->level;
    switch (lv.kind) {
      case Level::Kind::Exact:
        if (lv.value > 0) total.factored[p] = lv.value;
        break;
      case Level::Kind::LowerBound:
        total.kind = TotalLevel::Kind::Interval;
        total.factored[p] = lv.value;
        total.flags[p] = "lower_bound";
        break;
      case Level::Kind::NotParamodular:
        total.kind = TotalLevel::Kind::Interval;
        total.flags[p] = "not_paramodular";
        break;
    }
  }
  report.archimedean = match_weights(f1.weight, f2.weight);
  return report;
}

}  // namespace paramodular
