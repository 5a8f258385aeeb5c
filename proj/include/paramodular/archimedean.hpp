#pragma once

// Archimedean weight bookkeeping for GSp(4, R): Hodge rows of H^3 with
// coefficients in V(lambda), the discrete series with the same infinitesimal
// character, and the matching GO(2,2) parameters.

#include "paramodular/error.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>

namespace paramodular {

struct HighestWeight {
  int l = 0;
  int m = 0;

  HighestWeight() = default;
  HighestWeight(int l_, int m_) : l(l_), m(m_) {
    if (m < 0 || l < m)
      throw Error(ErrorCode::InvalidRep,
                  "highest weight needs l >= m >= 0, got (" + std::to_string(l) + ", " + std::to_string(m) + ")");
  }

  /// Central twist, fixed to -l-m.
  int c() const { return -l - m; }
  bool operator==(const HighestWeight&) const = default;
};

enum class DiscreteSeriesKind { I, II, III, IV };

inline constexpr std::string_view to_string(DiscreteSeriesKind k) {
  constexpr std::array<std::string_view, 4> names = {"I", "II", "III", "IV"};
  return names[static_cast<std::size_t>(k)];
}

inline constexpr std::array<DiscreteSeriesKind, 4> kDiscreteSeriesKinds = {
    DiscreteSeriesKind::I, DiscreteSeriesKind::II, DiscreteSeriesKind::III, DiscreteSeriesKind::IV};

struct HodgeRow {
  std::pair<int, int> hodge_type;
  std::pair<int, int> lambda;
  DiscreteSeriesKind kind;
  bool operator==(const HodgeRow&) const = default;
};

struct DiscreteSeriesRow {
  DiscreteSeriesKind kind;
  std::array<int, 3> lambda;
  std::array<int, 3> lambda_plus_rho;
  int q_harish;
  bool operator==(const DiscreteSeriesRow&) const = default;
};

struct GO22ArchParams {
  int a = 0;
  int b = 0;
  int c = 0;
  bool operator==(const GO22ArchParams&) const = default;
};

enum class GO22Branch { II, III };

inline bool sufficiently_regular(const HighestWeight& w) { return w.l - w.m >= 2 && w.m >= 2; }

/// Row IV is F^3, the holomorphic forms S_{l-m, m+3}.
inline std::array<HodgeRow, 4> hodge_table(const HighestWeight& w) {
  const int l = w.l, m = w.m;
  return {{
      {{0, 3}, {-m, -l}, DiscreteSeriesKind::I},
      {{1, 2}, {m + 2, -l}, DiscreteSeriesKind::II},
      {{2, 1}, {l + 3, 1 - m}, DiscreteSeriesKind::III},
      {{3, 0}, {l + 3, m + 3}, DiscreteSeriesKind::IV},
  }};
}

/// Types III and IV carry -c; the convention is contragredient to some sources.
inline std::array<DiscreteSeriesRow, 4> discrete_series_params(const HighestWeight& w) {
  const int l = w.l, m = w.m, c = w.c();
  return {{
      {DiscreteSeriesKind::I, {-m, -l, c}, {-m - 1, -l - 2, c}, 3},
      {DiscreteSeriesKind::II, {m + 2, -l, c}, {m + 1, -l - 2, c}, 2},
      {DiscreteSeriesKind::III, {l + 3, 1 - m, -c}, {l + 2, -m - 1, -c}, 1},
      {DiscreteSeriesKind::IV, {l + 3, m + 3, -c}, {l + 2, m + 1, -c}, 0},
  }};
}

inline GO22ArchParams go22_arch_params(const HighestWeight& w, GO22Branch branch) {
  if (!sufficiently_regular(w))
    throw Error(ErrorCode::NotRegular, "weight (" + std::to_string(w.l) + ", " + std::to_string(w.m) +
                                           ") is not sufficiently regular (need l-m >= 2, m >= 2)");
  const int a = w.l + w.m + 4;
  const int b = branch == GO22Branch::II ? w.l - w.m + 2 : w.m - w.l - 2;
  return {a, b, w.c()};
}

/// m(pi') = (1 + (-1)^e) / 2.
inline int multiplicity(unsigned e) { return e % 2 == 0 ? 1 : 0; }

}  // namespace paramodular
