#pragma once

// The golden CLI corpus: one row per documented invocation, with the expected
// stdout bytes stored under tests/golden/out/.  Shared between the unit suite
// and the acceptance runner.

#include <picard2/cli.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testsupport {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;  // argv tail; --in <file> is appended when input is set
  std::string input;              // file under golden/in/
  std::string expected;           // file under golden/out/; empty means empty stdout
  int code = 0;
  const char* cap_env = nullptr;  // PICARD2_CANDIDATE_CAP for this run only
};

inline std::string golden_dir() { return PICARD2_GOLDEN_DIR; }

inline std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> v;
  auto add = [&](std::string name, std::vector<std::string> args, std::string in,
                 int code, const char* cap = nullptr) {
    GoldenCase c;
    c.name = std::move(name);
    c.args = std::move(args);
    c.input = std::move(in);
    c.expected = code == 2 || code == 3 ? "" : c.name + ".txt";
    c.code = code;
    c.cap_env = cap;
    v.push_back(std::move(c));
  };

  add("pi0_times2", {"pi0"}, "sgp2_times2.json", 0);
  add("pi0_doubling4", {"pi0"}, "sgp2_doubling4.json", 0);
  add("pi1_doubling4", {"pi1"}, "sgp2_doubling4.json", 0);
  add("dis_z6", {"dis"}, "fgab_z6.json", 0);
  add("dis_z6_summary", {"dis", "--format", "summary"}, "fgab_z6.json", 0);
  add("check_faithful_id", {"check", "--predicate", "faithful"}, "sgp2hom_id_z2.json", 0);
  add("check_full_dis_times2", {"check", "--predicate", "full"}, "sgp2hom_dis_times2.json", 0);
  add("check_esssurj_dis_times2", {"check", "--predicate", "esssurj"},
      "sgp2hom_dis_times2.json", 1);
  add("check_chainhom_bad", {"check", "--predicate", "chainhom"}, "sgp2hom_notchain.json", 1);
  add("check_htpy_id", {"check", "--predicate", "htpy"}, "htpyprob_id.json", 0);
  add("kernel_ab", {"kernel"}, "abhom_sum.json", 0);
  add("cokernel_ab", {"cokernel"}, "abhom_times2.json", 0);
  add("kernel2_dis_times2", {"kernel"}, "sgp2hom_dis_times2.json", 0);
  add("cokernel2_dis_times2", {"cokernel"}, "sgp2hom_dis_times2.json", 0);
  add("exact2_ses", {"exact2"}, "seq2_ses.json", 0);
  add("exact2_zero", {"exact2"}, "seq2_zero.json", 1);
  add("extension_ses", {"extension"}, "seq2_ses.json", 0);
  add("present_doubling4", {"present"}, "sgp2_doubling4.json", 0);
  add("present_doubling4_summary", {"present", "--format", "summary"},
      "sgp2_doubling4.json", 0);
  add("present_mod_doubling4", {"present-mod"}, "mod2_doubling4.json", 0);
  add("pi0_mod_doubling4", {"pi0-mod"}, "mod2_doubling4.json", 0);
  add("pi0_ring_z2_z4", {"pi0-ring"}, "ring2_z2_z4.json", 0);
  add("lift_ab", {"lift"}, "liftprob_ab.json", 0);
  add("lift_sgp2", {"lift"}, "liftprob_sgp2.json", 0);
  add("lift_mod", {"lift-mod"}, "liftprob2_mod.json", 0);
  add("oracle_full_red42", {"oracle", "predicate", "--predicate", "full"},
      "sgp2hom_dis_red42.json", 1);
  add("oracle_verify_all_red42", {"oracle", "verify-all"}, "sgp2hom_dis_red42.json", 0);
  add("oracle_verify_all_red42_summary", {"oracle", "verify-all", "--format", "summary"},
      "sgp2hom_dis_red42.json", 0);
  add("oracle_lift_dis_z2", {"oracle", "lift"}, "liftprob_dis_z2.json", 0);
  add("oracle_lift_dis_z2_summary", {"oracle", "lift", "--format", "summary"},
      "liftprob_dis_z2.json", 0);
  add("oracle_lift_guard", {"oracle", "lift"}, "liftprob_dis_z2.json", 3, "1");
  add("bad_missing_rels", {"dis"}, "bad_missing_rels.json", 2);
  add("bad_float", {"dis"}, "bad_float.json", 2);
  add("bad_extra_key", {"dis"}, "bad_extra_key.json", 2);
  add("bad_bigint", {"dis"}, "bad_bigint.json", 2);
  add("bad_nothom", {"kernel"}, "bad_nothom.json", 2);
  add("bad_parse", {"pi0"}, "bad_parse.json", 2);
  add("bad_usage", {"pi0"}, "", 2);  // missing required --in
  return v;
}

struct RunResult {
  std::string out, err;
  int code = 0;
};

inline RunResult run_golden(const GoldenCase& c) {
  std::vector<std::string> args = c.args;
  if (!c.input.empty()) {
    args.push_back("--in");
    args.push_back(golden_dir() + "/in/" + c.input);
  }
  if (c.cap_env) ::setenv("PICARD2_CANDIDATE_CAP", c.cap_env, 1);
  std::istringstream in;
  std::ostringstream out, err;
  RunResult r;
  r.code = picard2::cli::run(args, in, out, err);
  if (c.cap_env) ::unsetenv("PICARD2_CANDIDATE_CAP");
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("golden: cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::string expected_output(const GoldenCase& c) {
  if (c.expected.empty()) return std::string();
  return read_file(golden_dir() + "/out/" + c.expected);
}

}  // namespace testsupport
