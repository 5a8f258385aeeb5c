#pragma once

// The four documented invocations and the golden files that pin their JSON.

#include "paramodular/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cli_examples {

inline const std::string kSteinberg2 =
    R"({"kind":"st","prime":2,"chars":[{"conductor":0,"nu_exp":"0","label":"TRIVIAL"}]})";

struct Invocation {
  std::string golden;
  std::vector<std::string> args;
  int status;
};

inline std::vector<Invocation> documented_invocations() {
  return {
      {"local_lift_ia.json", {"--json", "local-lift", "--tau1", kSteinberg2, "--tau2", kSteinberg2}, 0},
      {"global_lift_6_35.json", {"--json", "global-lift", "--f1", "weight=12,level=6", "--f2", "weight=12,level=35"}, 0},
      {"endoscopic_16_6.json", {"--json", "endoscopic", "--l", "16", "--m", "6"}, 0},
      {"multiplicity_1.json", {"--json", "multiplicity", "--e", "1"}, 0},
  };
}

struct Captured {
  int status;
  std::string out;
  std::string err;
};

inline Captured capture(const std::vector<std::string>& args, bool json_default = false) {
  std::ostringstream out, err;
  int status = paramodular::cli::run(args, out, err, json_default);
  return {status, out.str(), err.str()};
}

inline std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(PARAMODULAR_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cli_examples
