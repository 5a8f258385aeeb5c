#pragma once

// JSON wire format for characters, representations, newforms and results.

#include "paramodular/endoscopy.hpp"
#include "paramodular/global_lift.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace paramodular {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::InvalidDescriptor, msg, path);
}

inline void only_keys(const Json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) bad(path, "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) bad(path.empty() ? key : path + "." + key, "unknown field '" + key + "'");
  }
}

inline std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

inline const Json& require(const Json& j, const std::string& path, const std::string& key) {
  if (!j.contains(key)) bad(join(path, key), "missing field '" + key + "'");
  return j.at(key);
}

inline std::int64_t get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

inline std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

inline int get_small_int(const Json& j, const std::string& path) {
  std::int64_t v = get_int(j, path);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) bad(path, "integer out of range");
  return static_cast<int>(v);
}

/// Rethrows library errors with the descriptor path attached.
template <class F>
auto at_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (!e.path().empty()) throw;
    throw Error(e.code(), e.what(), path);
  }
}

inline std::int64_t prime_key(const std::string& key, const std::string& path) {
  auto p = parse_int(key);
  if (!p || !is_prime(*p)) bad(path, "key '" + key + "' is not a prime");
  return *p;
}

}  // namespace detail

inline Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) detail::bad(path, "expected a rational string \"p/q\"");
  auto r = parse_rational(j.get<std::string>());
  if (!r) detail::bad(path, "malformed rational '" + j.get<std::string>() + "'");
  return *r;
}

inline std::optional<OrderHint> order_from_string(const std::string& s) {
  if (s == "trivial") return OrderHint::Trivial;
  if (s == "quadratic") return OrderHint::Quadratic;
  if (s == "unknown") return OrderHint::Unknown;
  return std::nullopt;
}

inline PadicCharacter character_from_json(const Json& j, std::int64_t prime, const std::string& path) {
  detail::only_keys(j, path, {"conductor", "nu_exp", "label", "order"});
  int conductor = detail::get_small_int(detail::require(j, path, "conductor"), detail::join(path, "conductor"));
  Rational nu = rational_from_json(detail::require(j, path, "nu_exp"), detail::join(path, "nu_exp"));
  std::string label = detail::get_string(detail::require(j, path, "label"), detail::join(path, "label"));
  std::optional<OrderHint> order;
  if (j.contains("order")) {
    order = order_from_string(detail::get_string(j["order"], detail::join(path, "order")));
    if (!order) detail::bad(detail::join(path, "order"), "order must be trivial, quadratic or unknown");
  }
  return detail::at_path(path, [&] { return PadicCharacter::make(prime, conductor, nu, label, order); });
}

inline Json character_to_json(const PadicCharacter& chi) {
  Json j;
  j["conductor"] = chi.conductor();
  j["nu_exp"] = format_rational(chi.nu_exp());
  j["label"] = chi.label();
  j["order"] = std::string(to_string(chi.order_hint()));
  return j;
}

inline GL2LocalRep rep_from_json(const Json& j, const std::string& path = {}) {
  if (!j.is_object()) detail::bad(path, "expected a JSON object");
  std::string kind = detail::get_string(detail::require(j, path, "kind"), detail::join(path, "kind"));
  std::int64_t prime = detail::get_int(detail::require(j, path, "prime"), detail::join(path, "prime"));
  if (!is_prime(prime)) detail::bad(detail::join(path, "prime"), std::to_string(prime) + " is not prime");

  auto chars = [&](std::size_t n) {
    const Json& arr = detail::require(j, path, "chars");
    const std::string cpath = detail::join(path, "chars");
    if (!arr.is_array() || arr.size() != n)
      detail::bad(cpath, "expected an array of " + std::to_string(n) + " character(s)");
    std::vector<PadicCharacter> out;
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(character_from_json(arr[i], prime, cpath + "[" + std::to_string(i) + "]"));
    return out;
  };

  if (kind == "ps") {
    detail::only_keys(j, path, {"kind", "prime", "chars"});
    auto c = chars(2);
    return detail::at_path(path, [&] { return GL2LocalRep::principal_series(c[0], c[1]); });
  }
  if (kind == "st") {
    detail::only_keys(j, path, {"kind", "prime", "chars"});
    auto c = chars(1);
    return detail::at_path(path, [&] { return GL2LocalRep::steinberg(c[0]); });
  }
  if (kind == "one_dim") {
    detail::only_keys(j, path, {"kind", "prime", "chars"});
    auto c = chars(1);
    return detail::at_path(path, [&] { return GL2LocalRep::one_dimensional(c[0]); });
  }
  if (kind == "sc") {
    detail::only_keys(j, path, {"kind", "prime", "conductor", "label", "trivial_central_char", "twisted_conductors"});
    int a = detail::get_small_int(detail::require(j, path, "conductor"), detail::join(path, "conductor"));
    std::string label = detail::get_string(detail::require(j, path, "label"), detail::join(path, "label"));
    bool central = true;
    if (j.contains("trivial_central_char")) {
      if (!j["trivial_central_char"].is_boolean())
        detail::bad(detail::join(path, "trivial_central_char"), "expected a boolean");
      central = j["trivial_central_char"].get<bool>();
    }
    std::map<std::string, int> twisted;
    if (j.contains("twisted_conductors")) {
      const std::string tpath = detail::join(path, "twisted_conductors");
      const Json& t = j["twisted_conductors"];
      if (!t.is_object()) detail::bad(tpath, "expected an object label -> conductor");
      for (const auto& [k, v] : t.items()) twisted[k] = detail::get_small_int(v, detail::join(tpath, k));
    }
    return detail::at_path(path, [&] { return GL2LocalRep::supercuspidal(prime, a, label, central, twisted); });
  }
  detail::bad(detail::join(path, "kind"), "kind must be one of ps, st, sc, one_dim");
}

inline Json rep_to_json(const GL2LocalRep& rep) {
  Json j;
  j["kind"] = std::string(to_string(rep.kind()));
  j["prime"] = rep.prime();
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PrincipalSeries>) {
          j["chars"] = Json::array({character_to_json(r.chi1), character_to_json(r.chi2)});
        } else if constexpr (std::is_same_v<T, SteinbergTwist>) {
          j["chars"] = Json::array({character_to_json(r.chi)});
        } else if constexpr (std::is_same_v<T, Supercuspidal>) {
          j["conductor"] = r.conductor_exp;
          j["label"] = r.label();
          j["trivial_central_char"] = r.trivial_central_char;
          if (!r.twisted_conductors.empty()) j["twisted_conductors"] = r.twisted_conductors;
        } else {
          j["chars"] = Json::array({character_to_json(r.sigma)});
        }
      },
      rep.variant());
  return j;
}

inline Json parse_json_text(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    detail::bad(path, std::string("malformed JSON: ") + e.what());
  }
}

/// Inline JSON when the text starts with '{', otherwise a file path.
inline Json load_json_argument(const std::string& arg, const std::string& path) {
  std::size_t first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg, path);
  std::ifstream in(arg);
  if (!in) detail::bad(path, "cannot read file '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

inline NewformDescriptor newform_from_json(const Json& j, const std::string& path = {}) {
  detail::only_keys(j, path, {"name", "weight", "level", "annotations", "steinberg_signs"});
  NewformDescriptor f;
  if (j.contains("name")) f.name = detail::get_string(j["name"], detail::join(path, "name"));
  f.weight = detail::get_small_int(detail::require(j, path, "weight"), detail::join(path, "weight"));
  const Json& level = detail::require(j, path, "level");
  const std::string lpath = detail::join(path, "level");
  if (level.is_number_integer()) {
    f.level = detail::at_path(lpath, [&] { return factor(level.get<std::int64_t>()); });
  } else if (level.is_object()) {
    for (const auto& [k, v] : level.items())
      f.level[detail::prime_key(k, detail::join(lpath, k))] = detail::get_small_int(v, detail::join(lpath, k));
  } else {
    detail::bad(lpath, "level must be an integer or an object prime -> exponent");
  }
  if (j.contains("annotations")) {
    const std::string apath = detail::join(path, "annotations");
    if (!j["annotations"].is_object()) detail::bad(apath, "expected an object prime -> representation");
    for (const auto& [k, v] : j["annotations"].items())
      f.annotations.emplace(detail::prime_key(k, detail::join(apath, k)), rep_from_json(v, detail::join(apath, k)));
  }
  if (j.contains("steinberg_signs")) {
    const std::string spath = detail::join(path, "steinberg_signs");
    if (!j["steinberg_signs"].is_object()) detail::bad(spath, "expected an object prime -> label");
    for (const auto& [k, v] : j["steinberg_signs"].items())
      f.steinberg_signs[detail::prime_key(k, detail::join(spath, k))] = detail::get_string(v, detail::join(spath, k));
  }
  detail::at_path(path, [&] {
    validate(f);
    return 0;
  });
  return f;
}

/// "weight=12,level=6[,name=f]".
inline NewformDescriptor newform_from_shorthand(const std::string& text, const std::string& path = {}) {
  Json j = Json::object();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) detail::bad(path, "expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (j.contains(key)) detail::bad(detail::join(path, key), "duplicate key");
    if (key == "name") {
      j[key] = value;
    } else if (key == "weight" || key == "level") {
      auto v = detail::parse_int(value);
      if (!v) detail::bad(detail::join(path, key), "expected an integer, got '" + value + "'");
      j[key] = *v;
    } else {
      detail::bad(detail::join(path, key), "unknown shorthand key '" + key + "' (use weight, level, name)");
    }
  }
  return newform_from_json(j, path);
}

inline NewformDescriptor newform_from_argument(const std::string& arg, const std::string& path) {
  if (arg.find('=') != std::string::npos && arg.find('{') == std::string::npos)
    return newform_from_shorthand(arg, path);
  return newform_from_json(load_json_argument(arg, path), path);
}

// ---------------------------------------------------------------------------
// Results

inline Json to_json(const Level& level) {
  Json j;
  j["kind"] = std::string(to_string(level.kind));
  j["value"] = level.kind == Level::Kind::NotParamodular ? Json(nullptr) : Json(level.value);
  return j;
}

inline Json to_json(const LiftResult& r) {
  Json j;
  j["case"] = std::string(to_string(r.case_label));
  j["gsp4_type"] = std::string(to_string(r.gsp4_type));
  j["level"] = to_json(r.level);
  return j;
}

inline Json factored_to_json(const std::map<std::int64_t, int>& f) {
  Json j = Json::object();
  for (const auto& [p, e] : f) j[std::to_string(p)] = e;
  return j;
}

inline Json error_to_json(ErrorCode code, const std::string& message, const std::string& path) {
  Json e;
  e["code"] = std::string(to_string(code));
  e["message"] = message;
  e["path"] = path;
  return Json{{"error", e}};
}

inline Json to_json(const GlobalLiftReport& r) {
  Json j;
  Json per = Json::object();
  for (const auto& [p, o] : r.per_prime)
    per[std::to_string(p)] = o.result ? to_json(*o.result) : error_to_json(*o.error, o.message, "");
  j["per_prime"] = per;
  Json total;
  const auto& t = r.total_level;
  total["kind"] = t.kind == TotalLevel::Kind::Exact ? "exact" : "interval";
  total["factored"] = factored_to_json(t.factored);
  if (t.kind == TotalLevel::Kind::Exact) {
    total["value"] = t.value();
  } else {
    total["lower"] = t.value();
    total["value"] = nullptr;
    Json flags = Json::object();
    for (const auto& [p, why] : t.flags) flags[std::to_string(p)] = why;
    total["flags"] = flags;
  }
  j["total_level"] = total;
  if (r.archimedean) {
    j["archimedean"] = {{"l", r.archimedean->weight.l},
                        {"m", r.archimedean->weight.m},
                        {"sufficiently_regular", r.archimedean->sufficiently_regular}};
  } else {
    j["archimedean"] = nullptr;
  }
  return j;
}

inline Json to_json(const EndoscopicSummary& s) {
  Json j;
  j["l"] = s.weight.l;
  j["m"] = s.weight.m;
  j["s_hol"] = s.s_hol;
  j["s_aux"] = s.s_aux;
  j["motive"] = s.motive.to_string();
  j["betti_dim"] = s.betti_dim;
  j["euler"] = s.euler_number;
  Json hodge = Json::array();
  for (const auto& [pq, mult] : hodge_types(s.motive)) hodge.push_back({{"p", pq.first}, {"q", pq.second}, {"multiplicity", mult}});
  j["hodge_types"] = hodge;
  return j;
}

}  // namespace paramodular
