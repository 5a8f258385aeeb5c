#pragma once

// Command-line front end. `run` is kept in a header so tests can drive it
// in-process with string streams.

#include "paramodular/descriptor_json.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace paramodular::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitIndeterminate = 3;

struct Outcome {
  Json json;
  std::string text;
  int status = kExitOk;
};

inline int status_for(ErrorCode code) { return is_indeterminate(code) ? kExitIndeterminate : kExitInvalid; }

inline std::string factored_text(const std::map<std::int64_t, int>& f) {
  if (f.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : f) {
    if (!out.empty()) out += "*";
    out += std::to_string(p);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline ExactRational parse_exact_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip = [](std::string s) { return !s.empty() && s[0] == '+' ? s.substr(1) : s; };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw Error(ErrorCode::InvalidDescriptor, "malformed matrix entry '" + text + "'", "matrix");
  boost::multiprecision::cpp_int d(strip(den));
  if (d == 0) throw Error(ErrorCode::InvalidDescriptor, "zero denominator in '" + text + "'", "matrix");
  return ExactRational(boost::multiprecision::cpp_int(strip(num)), d);
}

/// "a,b,c,d;e,f,g,h;..." with four rows of four rationals.
inline Matrix4 parse_matrix(const std::string& text) {
  Matrix4 m;
  std::stringstream rows(text);
  std::string row;
  int r = 0;
  while (std::getline(rows, row, ';')) {
    if (r == 4) throw Error(ErrorCode::InvalidDescriptor, "matrix has more than 4 rows", "matrix");
    std::stringstream cells(row);
    std::string cell;
    int c = 0;
    while (std::getline(cells, cell, ',')) {
      if (c == 4) throw Error(ErrorCode::InvalidDescriptor, "row " + std::to_string(r) + " has more than 4 entries", "matrix");
      cell.erase(0, cell.find_first_not_of(' '));
      cell.erase(cell.find_last_not_of(' ') + 1);
      m[r][c++] = parse_exact_rational(cell);
    }
    if (c != 4) throw Error(ErrorCode::InvalidDescriptor, "row " + std::to_string(r) + " needs 4 entries", "matrix");
    ++r;
  }
  if (r != 4) throw Error(ErrorCode::InvalidDescriptor, "matrix needs 4 rows", "matrix");
  return m;
}

inline std::string level_text(const Level& level) { return to_string(level); }

inline Outcome do_conductor(const std::string& rep_arg) {
  GL2LocalRep rep = rep_from_json(load_json_argument(rep_arg, "rep"), "rep");
  int a = conductor_gl2(rep);
  Outcome o;
  o.json = {{"conductor", a}, {"kind", std::string(to_string(rep.kind()))}, {"discrete_series", is_discrete_series(rep)}};
  o.text = "a(tau) = " + std::to_string(a) + "\n";
  return o;
}

inline Outcome do_local_lift(const std::string& a1, const std::string& a2) {
  GL2LocalRep t1 = rep_from_json(load_json_argument(a1, "tau1"), "tau1");
  GL2LocalRep t2 = rep_from_json(load_json_argument(a2, "tau2"), "tau2");
  LiftResult r = local_theta_level(t1, t2);
  Outcome o;
  o.json = to_json(r);
  o.text = "case:  " + std::string(to_string(r.case_label)) + "\ntype:  " + std::string(to_string(r.gsp4_type)) +
           "\nlevel: " + level_text(r.level) + "\n";
  o.status = r.level.is_exact() ? kExitOk : kExitIndeterminate;
  return o;
}

inline Outcome do_global_lift(const std::string& a1, const std::string& a2) {
  NewformDescriptor f1 = newform_from_argument(a1, "f1");
  NewformDescriptor f2 = newform_from_argument(a2, "f2");
  GlobalLiftReport r = global_lift_level(f1, f2);
  Outcome o;
  o.json = to_json(r);
  std::ostringstream t;
  for (const auto& [p, outcome] : r.per_prime) {
    t << "p=" << p << ": ";
    if (outcome.result)
      t << "case " << to_string(outcome.result->case_label) << ", type " << to_string(outcome.result->gsp4_type)
        << ", level " << level_text(outcome.result->level) << "\n";
    else
      t << "indeterminate (" << to_string(*outcome.error) << "): " << outcome.message << "\n";
  }
  const TotalLevel& total = r.total_level;
  if (total.kind == TotalLevel::Kind::Exact) {
    t << "total level: " << total.value() << " = " << factored_text(total.factored) << "\n";
  } else {
    t << "total level: interval, at least " << total.value() << "; undetermined at";
    for (const auto& [p, why] : total.flags) t << " " << p << " (" << why << ")";
    t << "\n";
    o.status = kExitIndeterminate;
  }
  if (r.archimedean)
    t << "archimedean: (l, m) = (" << r.archimedean->weight.l << ", " << r.archimedean->weight.m << ")"
      << (r.archimedean->sufficiently_regular ? ", sufficiently regular" : ", not sufficiently regular") << "\n";
  else
    t << "archimedean: weights do not match (l+m+4, l-m+2)\n";
  o.text = t.str();
  return o;
}

inline Outcome do_endoscopic(int l, int m) {
  EndoscopicSummary s = endoscopic_summary(HighestWeight(l, m));
  Outcome o;
  o.json = to_json(s);
  std::ostringstream t;
  t << "s_" << l + m + 4 << " = " << s.s_hol << ", s_" << l - m + 2 << " = " << s.s_aux << "\n"
    << "e_endo = " << s.motive.to_string() << "\n"
    << "betti_dim = " << s.betti_dim << ", euler = " << s.euler_number << "\n";
  o.text = t.str();
  return o;
}

inline Json triple(const std::array<int, 3>& a) { return Json::array({a[0], a[1], a[2]}); }

inline Outcome do_hodge_table(int l, int m) {
  HighestWeight w(l, m);
  Outcome o;
  std::ostringstream t;
  Json rows = Json::array();
  t << "(p,q)  Lambda       type\n";
  for (const auto& row : hodge_table(w)) {
    rows.push_back({{"hodge_type", {row.hodge_type.first, row.hodge_type.second}},
                    {"lambda", {row.lambda.first, row.lambda.second}},
                    {"kind", std::string(to_string(row.kind))}});
    std::string pq = "(" + std::to_string(row.hodge_type.first) + "," + std::to_string(row.hodge_type.second) + ")";
    std::string lam = "(" + std::to_string(row.lambda.first) + "," + std::to_string(row.lambda.second) + ")";
    t << pq << std::string(7 - pq.size(), ' ') << lam << std::string(lam.size() < 13 ? 13 - lam.size() : 1, ' ')
      << to_string(row.kind) << "\n";
  }
  Json ds = Json::array();
  t << "\ntype  Lambda         Lambda+rho     q\n";
  for (const auto& row : discrete_series_params(w)) {
    ds.push_back({{"kind", std::string(to_string(row.kind))},
                  {"lambda", triple(row.lambda)},
                  {"lambda_plus_rho", triple(row.lambda_plus_rho)},
                  {"q", row.q_harish}});
    auto fmt = [](const std::array<int, 3>& a) {
      return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
    };
    std::string k(to_string(row.kind)), lam = fmt(row.lambda), lpr = fmt(row.lambda_plus_rho);
    t << k << std::string(6 - k.size(), ' ') << lam << std::string(lam.size() < 15 ? 15 - lam.size() : 1, ' ') << lpr
      << std::string(lpr.size() < 15 ? 15 - lpr.size() : 1, ' ') << row.q_harish << "\n";
  }
  o.json = {{"l", l}, {"m", m}, {"c", w.c()}, {"hodge_rows", rows}, {"discrete_series", ds},
            {"sufficiently_regular", sufficiently_regular(w)}};
  if (sufficiently_regular(w)) {
    auto p2 = go22_arch_params(w, GO22Branch::II), p3 = go22_arch_params(w, GO22Branch::III);
    o.json["go22"] = {{"II", {{"a", p2.a}, {"b", p2.b}, {"c", p2.c}}}, {"III", {{"a", p3.a}, {"b", p3.b}, {"c", p3.c}}}};
    t << "\nGO(2,2): II -> pi(" << p2.a << ", " << p2.b << "; " << p2.c << "), III -> pi(" << p3.a << ", " << p3.b
      << "; " << p3.c << ")\n";
  } else {
    o.json["go22"] = nullptr;
    t << "\nGO(2,2): weight not sufficiently regular\n";
  }
  o.text = t.str();
  return o;
}

inline Outcome do_multiplicity(int e) {
  Outcome o;
  int m = multiplicity(static_cast<unsigned>(e));
  o.json = {{"e", e}, {"multiplicity", m}};
  o.text = std::to_string(m) + "\n";
  return o;
}

inline Outcome do_paramodular_check(const std::string& matrix, std::int64_t prime, int n) {
  if (!is_prime(prime)) throw Error(ErrorCode::InvalidDescriptor, std::to_string(prime) + " is not prime", "prime");
  ParamodularQuery q{parse_matrix(matrix), prime, n};
  bool member = paramodular_member(q);
  Outcome o;
  o.json = {{"member", member}, {"prime", prime}, {"n", n}};
  o.text = std::string(member ? "member" : "not a member") + " of K(p^" + std::to_string(n) + "), p = " +
           std::to_string(prime) + "\n";
  return o;
}

inline bool json_from_environment() {
  const char* v = std::getenv("PARAMODULAR_LIFT_JSON");
  return v != nullptr && std::string(v) == "1";
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               bool json_default = json_from_environment()) {
  CLI::App app{"Paramodular levels of theta lifts from GSO(2,2) to GSp(4)", "paramodular-lift"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = json_default;
  app.add_flag("--json", json, "Emit machine-readable JSON (also PARAMODULAR_LIFT_JSON=1)");

  std::function<Outcome()> action;

  std::string rep;
  auto* conductor = app.add_subcommand("conductor", "Conductor exponent a(tau) of a GL(2) representation");
  conductor->add_option("--rep", rep, "Representation descriptor (inline JSON or file path)")->required();
  conductor->callback([&] { action = [&] { return do_conductor(rep); }; });

  std::string tau1, tau2;
  auto* local = app.add_subcommand("local-lift", "Case, type and paramodular level of theta((tau1, tau2))");
  local->add_option("--tau1", tau1, "First representation (inline JSON or file path)")->required();
  local->add_option("--tau2", tau2, "Second representation (inline JSON or file path)")->required();
  local->callback([&] { action = [&] { return do_local_lift(tau1, tau2); }; });

  std::string f1, f2;
  auto* global = app.add_subcommand("global-lift", "Global paramodular level of the lift of two newforms");
  global->add_option("--f1", f1, "First newform: weight=K,level=N or a JSON descriptor / file")->required();
  global->add_option("--f2", f2, "Second newform: weight=K,level=N or a JSON descriptor / file")->required();
  global->callback([&] { action = [&] { return do_global_lift(f1, f2); }; });

  int l = 0, m = 0;
  auto* endo = app.add_subcommand("endoscopic", "Strict endoscopic dimension and e_endo for V(l, m)");
  endo->add_option("--l", l, "Highest weight l")->required();
  endo->add_option("--m", m, "Highest weight m")->required();
  endo->callback([&] { action = [&] { return do_endoscopic(l, m); }; });

  int hl = 0, hm = 0;
  auto* hodge = app.add_subcommand("hodge-table", "Hodge rows, discrete series parameters and GO(2,2) parameters");
  hodge->add_option("--l", hl, "Highest weight l")->required();
  hodge->add_option("--m", hm, "Highest weight m")->required();
  hodge->callback([&] { action = [&] { return do_hodge_table(hl, hm); }; });

  int e = 0;
  auto* mult = app.add_subcommand("multiplicity", "Multiplicity (1 + (-1)^e) / 2");
  mult->add_option("--e", e, "Non-negative integer e")->required()->check(CLI::NonNegativeNumber);
  mult->callback([&] { action = [&] { return do_multiplicity(e); }; });

  std::string matrix;
  std::int64_t prime = 0;
  int n = 0;
  auto* pm = app.add_subcommand("paramodular-check", "Membership of a 4x4 rational matrix in K(p^n)");
  pm->add_option("--matrix", matrix, "Rows separated by ';', entries by ',' (rationals p/q)")->required();
  pm->add_option("--prime", prime, "Prime p")->required();
  pm->add_option("--n", n, "Level exponent n >= 0")->required()->check(CLI::NonNegativeNumber);
  pm->callback([&] { action = [&] { return do_paramodular_check(matrix, prime, n); }; });

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("paramodular-lift");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    CLI::App* scope = &app;
    for (auto* sub : app.get_subcommands())
      if (sub->parsed()) scope = sub;
    if (json) emit(out, error_to_json(ErrorCode::Usage, ex.what(), ""));
    err << "error: " << ex.what() << "\n\n" << scope->help();
    return kExitInvalid;
  }

  try {
    Outcome o = action();
    if (json)
      emit(out, o.json);
    else
      out << o.text;
    return o.status;
  } catch (const Error& ex) {
    if (json)
      emit(out, error_to_json(ex.code(), ex.what(), ex.path()));
    else
      err << "error [" << to_string(ex.code()) << "]" << (ex.path().empty() ? "" : " at " + ex.path()) << ": "
          << ex.what() << "\n";
    return status_for(ex.code());
  } catch (const std::exception& ex) {
    if (json)
      emit(out, error_to_json(ErrorCode::InvalidDescriptor, ex.what(), ""));
    else
      err << "error [invalid_descriptor]: " << ex.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace paramodular::cli
