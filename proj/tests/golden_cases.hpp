#pragma once
// The CLI golden table, shared by the unit suite and the acceptance runner.
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eexact/cli.hpp"

namespace golden {

struct CliCase {
  const char* name;
  std::vector<std::string> args;  // "GOLDEN" in --in paths expands to the golden dir
  int exit;
};

inline const std::vector<CliCase>& cli_cases() {
  static const std::vector<CliCase> cases = {
      {"01_canon_presentation", {"canon", "--json", "--in", "GOLDEN/mod_presentation.json"}, 0},
      {"02_snf_presentation", {"snf", "--json", "--in", "GOLDEN/mod_presentation.json"}, 0},
      {"03_snf_morphism", {"snf", "--json", "--in", "GOLDEN/morph_times2.json"}, 0},
      {"04_essential_morphism", {"essential", "--json", "--in", "GOLDEN/morph_times2.json"}, 0},
      {"05_essential_module", {"essential", "--json", "--in", "GOLDEN/mod_z2z12.json"}, 1},
      {"06_complement", {"complement", "--json", "--in", "GOLDEN/mod_z2z12.json"}, 0},
      {"07_complement_exhausted", {"complement", "--json", "--in", "GOLDEN/mod_thirteen.json"}, 3},
      {"08_singular_zmod", {"singular", "--json", "--in", "GOLDEN/mod_z2_over_z4.json"}, 0},
      {"09_singular_mixed", {"singular", "--json", "--in", "GOLDEN/mod_z2z12.json"}, 1},
      {"10_gabriel_torsion",
       {"gabriel-torsion", "--primes", "2", "--json", "--in", "GOLDEN/mod_z8.json"},
       0},
      {"11_check_exact_ses", {"check", "exact", "--json", "--in", "GOLDEN/cx_times2_ses.json"}, 1},
      {"12_check_eexact_ses",
       {"check", "e-exact", "--json", "--in", "GOLDEN/cx_times2_ses.json"},
       0},
      {"13_check_fexact_3",
       {"check", "f-exact", "--primes", "3", "--json", "--in", "GOLDEN/cx_times3.json"},
       0},
      {"14_check_fexact_2",
       {"check", "f-exact", "--primes", "2", "--json", "--in", "GOLDEN/cx_times3.json"},
       1},
      {"15_check_spec", {"check", "spec-exact", "--json", "--in", "GOLDEN/cx_z4_z2.json"}, 1},
      {"16_check_eexact_sum", {"check", "e-exact", "--json", "--in", "GOLDEN/cx_ze_sum.json"}, 1},
      {"17_localize_module",
       {"localize", "--primes", "2", "--json", "--in", "GOLDEN/mod_z2z12.json"},
       0},
      {"18_localize_morphism", {"localize", "--json", "--in", "GOLDEN/morph_times2.json"}, 0},
      {"19_localize_complex", {"localize", "--json", "--in", "GOLDEN/cx_ze_sum.json"}, 0},
      {"20_canon_diagram", {"canon", "--json", "--in", "GOLDEN/diagram.json"}, 0},
      {"21_canon_morphism", {"canon", "--json", "--in", "GOLDEN/morph_z4_to_z2.json"}, 0},
      {"22_lemma_four", {"lemma", "four", "--trials", "5", "--seed", "3", "--json"}, 0},
      {"23_demo_json", {"demo", "no-functor", "--json"}, 0},
      {"24_demo_text", {"demo", "no-functor"}, 0},
      {"25_bad_field", {"canon", "--json", "--in", "GOLDEN/bad_field.json"}, 2},
  };
  return cases;
}

inline void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos)) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

// empty string = match; otherwise a one-line description of the divergence
inline std::string run_case(const CliCase& c, const std::string& dir) {
  std::vector<std::string> args = c.args;
  for (std::string& a : args) replace_all(a, "GOLDEN", dir);
  std::ostringstream out, err;
  int exit = eexact::run_command(args, out, err);
  if (exit != c.exit)
    return std::string(c.name) + ": exit " + std::to_string(exit) + " != " + std::to_string(c.exit);
  std::ifstream in(dir + "/" + c.name + ".expected");
  if (!in.good()) return std::string(c.name) + ": missing expected file";
  std::ostringstream want;
  want << in.rdbuf();
  std::string got = out.str();
  replace_all(got, dir, "GOLDEN");
  if (got != want.str()) return std::string(c.name) + ": output diverged";
  return {};
}

}  // namespace golden
