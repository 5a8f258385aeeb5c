#pragma once

// Strict endoscopic contribution to H^3 of Siegel threefolds: dimension
// 2 s_{l+m+4} s_{l-m+2} and the element -s_{l+m+4} S[l-m+2] L^{m+1}.

#include "paramodular/archimedean.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <utility>

namespace paramodular {

/// dim S_k(SL(2, Z)).
inline int dim_cusp_forms_level1(int k) {
  if (k < 12 || k % 2 != 0) return 0;
  return k / 12 - (k % 12 == 2 ? 1 : 0);
}

/// Formal sum of c * S[k] * L^j terms plus pure Tate terms c * L^j.
class MotivicElement {
 public:
  using Key = std::pair<int, int>;  // (k, j)

  MotivicElement& add_scholl(int k, int j, long long coeff) {
    if (k < 2 || j < 0) throw Error(ErrorCode::InvalidRep, "S[k]*L^j needs k >= 2 and j >= 0");
    bump(terms_, Key{k, j}, coeff);
    return *this;
  }

  MotivicElement& add_tate(int j, long long coeff) {
    if (j < 0) throw Error(ErrorCode::InvalidRep, "L^j needs j >= 0");
    bump(tate_, j, coeff);
    return *this;
  }

  const std::map<Key, long long>& terms() const { return terms_; }
  const std::map<int, long long>& tate() const { return tate_; }
  bool is_zero() const { return terms_.empty() && tate_.empty(); }

  static int weight_of_term(int k, int j) { return (k - 1) + 2 * j; }
  static int weight_of_tate(int j) { return 2 * j; }

  /// "-1*S[12]*L^7 + 3*L^2"; "0" for the zero element.
  std::string to_string() const {
    std::string out;
    auto append = [&out](long long c, const std::string& body) {
      if (!out.empty()) out += " + ";
      out += std::to_string(c) + "*" + body;
    };
    for (const auto& [key, c] : terms_) append(c, "S[" + std::to_string(key.first) + "]*L^" + std::to_string(key.second));
    for (const auto& [j, c] : tate_) append(c, "L^" + std::to_string(j));
    return out.empty() ? "0" : out;
  }

  bool operator==(const MotivicElement&) const = default;

 private:
  template <class K>
  static void bump(std::map<K, long long>& m, const K& key, long long coeff) {
    long long& slot = m[key];
    slot += coeff;
    if (slot == 0) m.erase(key);
  }

  std::map<Key, long long> terms_;
  std::map<int, long long> tate_;
};

inline long long betti_dim(const MotivicElement& e) {
  long long total = 0;
  for (const auto& [key, c] : e.terms()) total += std::llabs(c) * 2 * dim_cusp_forms_level1(key.first);
  for (const auto& [j, c] : e.tate()) total += std::llabs(c);
  return total;
}

/// Signed counterpart of betti_dim.
inline long long euler_number(const MotivicElement& e) {
  long long total = 0;
  for (const auto& [key, c] : e.terms()) total += c * 2 * dim_cusp_forms_level1(key.first);
  for (const auto& [j, c] : e.tate()) total += c;
  return total;
}

/// Multiset of Hodge types (p, q) -> multiplicity.
inline std::map<std::pair<int, int>, long long> hodge_types(const MotivicElement& e) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [key, c] : e.terms()) {
    auto [k, j] = key;
    long long copies = std::llabs(c) * dim_cusp_forms_level1(k);
    if (copies == 0) continue;
    out[{k - 1 + j, j}] += copies;
    out[{j, k - 1 + j}] += copies;
  }
  for (const auto& [j, c] : e.tate()) out[{j, j}] += std::llabs(c);
  return out;
}

namespace detail {
inline void require_regular(const HighestWeight& w) {
  if (!sufficiently_regular(w))
    throw Error(ErrorCode::NotRegular, "weight (" + std::to_string(w.l) + ", " + std::to_string(w.m) +
                                           ") is not sufficiently regular (need l-m >= 2, m >= 2)");
}
}  // namespace detail

inline int strict_endoscopic_dim(const HighestWeight& w) {
  detail::require_regular(w);
  return 2 * dim_cusp_forms_level1(w.l + w.m + 4) * dim_cusp_forms_level1(w.l - w.m + 2);
}

inline MotivicElement endoscopic_motive(const HighestWeight& w) {
  detail::require_regular(w);
  MotivicElement e;
  int s_hol = dim_cusp_forms_level1(w.l + w.m + 4);
  if (s_hol != 0) e.add_scholl(w.l - w.m + 2, w.m + 1, -s_hol);
  return e;
}

struct EndoscopicSummary {
  HighestWeight weight;
  int s_hol = 0;
  int s_aux = 0;
  MotivicElement motive;
  long long betti_dim = 0;
  long long euler_number = 0;
};

inline EndoscopicSummary endoscopic_summary(const HighestWeight& w) {
  EndoscopicSummary s;
  s.weight = w;
  s.motive = endoscopic_motive(w);
  s.s_hol = dim_cusp_forms_level1(w.l + w.m + 4);
  s.s_aux = dim_cusp_forms_level1(w.l - w.m + 2);
  s.betti_dim = betti_dim(s.motive);
  s.euler_number = euler_number(s.motive);
  return s;
}

}  // namespace paramodular
