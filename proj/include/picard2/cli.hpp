#pragma once

// Command line front end.  Every subcommand reads one JSON document, writes
// one JSON document (or a one-line summary), and reports through the exit
// code: 0 success or true verdict, 1 false verdict, 2 invalid input or
// usage, 3 enumeration guard tripped.

#include "picard2/json_io.hpp"
#include "picard2/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace picard2 {
namespace cli {

struct Outcome {
  Json doc;
  int code = 0;
};

inline std::string pretty_group(const FinGenAbGroup& g) {
  Invariants inv = invariants(g);
  std::string s;
  for (const Int& d : inv.factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + d.str();
  }
  if (inv.rank > 0) {
    if (!s.empty()) s += " x ";
    s += "Z^" + std::to_string(inv.rank);
  }
  return s.empty() ? "0" : s;
}

inline const char* yn(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// Composite problem documents

struct Seq2 {
  ChainHom gamma, sigma;
  AbHom phi;
};

inline Seq2 read_seq2(const Json& j) {
  require_type(j, "seq2", "seq2");
  require_keys(j, {"type", "gamma", "sigma", "phi"}, "seq2");
  ChainHom gamma = read_sgp2hom(j["gamma"], "seq2.gamma");
  ChainHom sigma = read_sgp2hom(j["sigma"], "seq2.sigma");
  if (gamma.dst != sigma.src) throw invalid_input("seq2: gamma and sigma do not compose");
  require_type(j["phi"], "htpy", "seq2.phi");
  require_keys(j["phi"], {"type", "t"}, "seq2.phi");
  IntMatrix t = read_matrix(j["phi"]["t"], sigma.dst.c1.gens, gamma.src.c0.gens, "seq2.phi.t");
  AbHom phi = make_hom(gamma.src.c0, sigma.dst.c1, std::move(t));
  return Seq2{std::move(gamma), std::move(sigma), std::move(phi)};
}

// ---------------------------------------------------------------------------
// Handlers

inline Outcome handle_pi0(const Json& doc) {
  PicardComplex a = read_sgp2(doc);
  return {write_fgab(canonicalize(pi0(a).group).group), 0};
}

inline Outcome handle_pi1(const Json& doc) {
  PicardComplex a = read_sgp2(doc);
  return {write_fgab(canonicalize(pi1(a).group).group), 0};
}

inline Outcome handle_dis(const Json& doc) {
  return {write_sgp2(dis(read_fgab(doc))), 0};
}

inline Json verdict_doc(const std::string& predicate, bool verdict) {
  Json j;
  j["type"] = "verdict";
  j["predicate"] = predicate;
  j["verdict"] = verdict;
  return j;
}

inline Outcome handle_check(const Json& doc, const std::string& predicate) {
  if (predicate == "faithful" || predicate == "full" || predicate == "esssurj") {
    ChainHom f = read_sgp2hom(doc);
    bool v = predicate == "faithful" ? is_faithful(f)
             : predicate == "full"   ? is_full(f)
                                     : is_essentially_surjective(f);
    return {verdict_doc(predicate, v), v ? 0 : 1};
  }
  if (predicate == "chainhom") {
    // Structure (groups, shapes) must parse; the verdict is whether the two
    // matrices actually form a chain map.
    require_type(doc, "sgp2hom", "sgp2hom");
    require_keys(doc, {"type", "src", "dst", "f1", "f0"}, "sgp2hom");
    PicardComplex src = read_sgp2(doc["src"], "sgp2hom.src");
    PicardComplex dst = read_sgp2(doc["dst"], "sgp2hom.dst");
    IntMatrix f1 = read_matrix(doc["f1"], dst.c1.gens, src.c1.gens, "sgp2hom.f1");
    IntMatrix f0 = read_matrix(doc["f0"], dst.c0.gens, src.c0.gens, "sgp2hom.f0");
    bool v = hom_well_defined(src.c1, dst.c1, f1) && hom_well_defined(src.c0, dst.c0, f0);
    if (v) {
      AbHom h1{src.c1, dst.c1, f1}, h0{src.c0, dst.c0, f0};
      v = hom_equal(compose(h0, src.delta), compose(dst.delta, h1));
    }
    return {verdict_doc(predicate, v), v ? 0 : 1};
  }
  if (predicate == "htpy") {
    require_type(doc, "htpyprob", "htpyprob");
    require_keys(doc, {"type", "f", "g", "t"}, "htpyprob");
    ChainHom f = read_sgp2hom(doc["f"], "htpyprob.f");
    ChainHom g = read_sgp2hom(doc["g"], "htpyprob.g");
    if (f.src != g.src || f.dst != g.dst)
      throw invalid_input("htpyprob: f and g are not parallel");
    IntMatrix t = read_matrix(doc["t"], f.dst.c1.gens, f.src.c0.gens, "htpyprob.t");
    AbHom th = make_hom(f.src.c0, f.dst.c1, std::move(t));
    bool v = check_2morphism(make_homotopy(std::move(f), std::move(g), std::move(th)));
    return {verdict_doc(predicate, v), v ? 0 : 1};
  }
  throw invalid_input("check: unknown predicate '" + predicate + "'");
}

inline Outcome handle_kernel(const Json& doc) {
  std::string t = doc_type(doc);
  if (t == "abhom") {
    KernelResult k = kernel(read_abhom(doc));
    Json j;
    j["type"] = "kernelcert";
    j["K"] = write_fgab(k.group);
    j["incl"] = write_abhom(k.incl);
    return {std::move(j), 0};
  }
  if (t == "sgp2hom") {
    Kernel2Result k = kernel2(read_sgp2hom(doc));
    Json j;
    j["type"] = "kernel2cert";
    j["K"] = write_sgp2(k.k);
    j["incl"] = write_sgp2hom(k.incl);
    j["eps"] = write_htpy(k.eps);
    return {std::move(j), 0};
  }
  throw invalid_input("kernel: expected an abhom or sgp2hom document");
}

inline Outcome handle_cokernel(const Json& doc) {
  std::string t = doc_type(doc);
  if (t == "abhom") {
    CokernelResult c = cokernel(read_abhom(doc));
    Json j;
    j["type"] = "cokernelcert";
    j["Q"] = write_fgab(c.group);
    j["proj"] = write_abhom(c.proj);
    return {std::move(j), 0};
  }
  if (t == "sgp2hom") {
    Cokernel2Result c = cokernel2(read_sgp2hom(doc));
    Json j;
    j["type"] = "cokernel2cert";
    j["Q"] = write_sgp2(c.q);
    j["proj"] = write_sgp2hom(c.proj);
    j["pi"] = write_htpy(c.pi);
    return {std::move(j), 0};
  }
  throw invalid_input("cokernel: expected an abhom or sgp2hom document");
}

inline Outcome handle_exact2(const Json& doc) {
  Seq2 s = read_seq2(doc);
  TwoExactnessCert cert = two_exactness_witnesses(s.gamma, s.sigma, s.phi);
  Json j;
  j["type"] = "exact2cert";
  j["verdict"] = cert.condition1();
  j["condition1"] = cert.condition1();
  j["condition2"] = cert.condition2();
  j["gamma0"] = write_sgp2hom(cert.gamma0);
  j["sigma0"] = write_sgp2hom(cert.sigma0);
  j["flags"] = Json{{"gamma0_full", cert.gamma0_full},
                    {"gamma0_esssurj", cert.gamma0_esssurj},
                    {"sigma0_full", cert.sigma0_full},
                    {"sigma0_faithful", cert.sigma0_faithful}};
  return {std::move(j), cert.condition1() ? 0 : 1};
}

inline Outcome handle_extension(const Json& doc) {
  Seq2 s = read_seq2(doc);
  ExtensionReport r = extension_report(s.gamma, s.sigma, s.phi);
  Json j;
  j["type"] = "extensioncert";
  j["verdict"] = r.condition1;
  j["condition1"] = r.condition1;
  j["condition2"] = r.condition2;
  j["condition3"] = r.condition3;
  return {std::move(j), r.condition1 ? 0 : 1};
}

inline Outcome handle_present(const Json& doc) {
  Presentation p = projective_presentation(read_sgp2(doc));
  Json j;
  j["type"] = "presentcert";
  j["P"] = write_sgp2(p.p);
  j["F"] = write_sgp2hom(p.f);
  j["cert"] = Json{{"discrete_free", p.cert.discrete_free},
                   {"essentially_surjective", p.cert.essentially_surjective},
                   {"identity_homotopy", p.cert.identity_homotopy}};
  return {std::move(j), 0};
}

inline Outcome handle_present_mod(const Json& doc) {
  ModPresentation p = module_projective_presentation(read_mod2(doc));
  Json j;
  j["type"] = "presentmodcert";
  j["P"] = write_mod2(p.p);
  j["F"] = write_mod2hom(p.f);
  j["cert"] = Json{{"discrete_free", p.cert.discrete_free},
                   {"essentially_surjective", p.cert.essentially_surjective},
                   {"identity_homotopy", p.cert.identity_homotopy}};
  return {std::move(j), 0};
}

struct LiftProb {
  bool group_level = false;  // abhom rather than sgp2hom
  ChainHom g, f;
  AbHom ga, fa;
};

inline LiftProb read_liftprob(const Json& j) {
  require_type(j, "liftprob", "liftprob");
  require_keys(j, {"type", "g", "f"}, "liftprob");
  std::string tg = doc_type(j["g"]), tf = doc_type(j["f"]);
  if (tg != tf) throw invalid_input("liftprob: g and f must be the same document kind");
  LiftProb p;
  if (tg == "abhom") {
    p.group_level = true;
    p.ga = read_abhom(j["g"], "liftprob.g");
    p.fa = read_abhom(j["f"], "liftprob.f");
    if (p.ga.dst != p.fa.dst) throw invalid_input("liftprob: targets differ");
  } else if (tg == "sgp2hom") {
    p.g = read_sgp2hom(j["g"], "liftprob.g");
    p.f = read_sgp2hom(j["f"], "liftprob.f");
    if (p.g.dst != p.f.dst) throw invalid_input("liftprob: targets differ");
  } else {
    throw invalid_input("liftprob: g and f must be abhom or sgp2hom documents");
  }
  return p;
}

inline Outcome handle_lift(const Json& doc) {
  LiftProb p = read_liftprob(doc);
  Json j;
  j["type"] = "liftcert";
  if (p.group_level) {
    j["gprime"] = write_abhom(lift_free(p.ga, p.fa));
    return {std::move(j), 0};
  }
  LiftResult r = lift_discrete_free(p.g, p.f);
  j["gprime"] = write_sgp2hom(r.gprime);
  j["h"] = write_htpy(r.h);
  return {std::move(j), 0};
}

inline Outcome handle_lift_mod(const Json& doc) {
  require_type(doc, "liftprob2", "liftprob2");
  require_keys(doc, {"type", "g", "f"}, "liftprob2");
  Mod2Hom g = read_mod2hom(doc["g"], "liftprob2.g");
  Mod2Hom f = read_mod2hom(doc["f"], "liftprob2.f");
  ModLiftResult r = lift_discrete_free_mod(g, f);
  Json j;
  j["type"] = "liftmodcert";
  j["gprime"] = write_mod2hom(r.gprime);
  j["h"] = Json{{"type", "modhtpy"}, {"t", write_int_vector(r.h.t)}};
  return {std::move(j), 0};
}

inline Outcome handle_pi0_ring(const Json& doc) {
  return {write_finring(pi0_ring(read_ring2(doc)).ring), 0};
}

inline Outcome handle_pi0_mod(const Json& doc) {
  return {write_finmod(pi0_module(read_mod2(doc)).mod), 0};
}

inline Predicate parse_predicate(const std::string& p) {
  if (p == "faithful") return Predicate::Faithful;
  if (p == "full") return Predicate::Full;
  if (p == "esssurj") return Predicate::EssSurj;
  throw invalid_input("oracle: unknown predicate '" + p + "'");
}

inline Outcome handle_oracle_predicate(const Json& doc, const std::string& predicate) {
  ChainHom f = read_sgp2hom(doc);
  OracleVerdict v = oracle_predicate(f, parse_predicate(predicate));
  Json j;
  j["type"] = "oraclecert";
  j["predicate"] = predicate;
  j["verdict"] = v.verdict;
  j["objects"] = v.objects;
  j["morphisms"] = v.morphisms;
  return {std::move(j), v.verdict ? 0 : 1};
}

inline Outcome handle_oracle_lift(const Json& doc, const Int& cap, int jobs) {
  LiftProb p = read_liftprob(doc);
  if (p.group_level) throw invalid_input("oracle lift: expected sgp2hom documents");
  LiftSearchResult r = oracle_lift_search(p.g, p.f, cap, jobs);
  Json j;
  j["type"] = "oracleliftcert";
  j["found"] = r.found;
  j["candidates"] = write_int(r.candidates);
  j["space"] = write_int(r.space);
  if (r.found) {
    j["gprime"] = write_sgp2hom(r.gprime);
    j["h"] = write_htpy(r.h);
  }
  return {std::move(j), r.found ? 0 : 1};
}

inline Outcome handle_oracle_verify_all(const Json& doc) {
  ChainHom f = read_sgp2hom(doc);
  bool ff = is_faithful(f), fu = is_full(f), fe = is_essentially_surjective(f);
  OracleVerdict of = oracle_predicate(f, Predicate::Faithful);
  OracleVerdict ou = oracle_predicate(f, Predicate::Full);
  OracleVerdict oe = oracle_predicate(f, Predicate::EssSurj);
  bool agree = ff == of.verdict && fu == ou.verdict && fe == oe.verdict;
  Json j;
  j["type"] = "oracleagreement";
  j["faithful"] = Json{{"formula", ff}, {"oracle", of.verdict}};
  j["full"] = Json{{"formula", fu}, {"oracle", ou.verdict}};
  j["esssurj"] = Json{{"formula", fe}, {"oracle", oe.verdict}};
  j["objects"] = of.objects;
  j["morphisms"] = of.morphisms;
  j["agree"] = agree;
  return {std::move(j), agree ? 0 : 1};
}

// ---------------------------------------------------------------------------
// Summaries

inline std::string summarize(const Json& d) {
  std::string t = d.contains("type") && d["type"].is_string() ? d["type"].get<std::string>()
                                                              : std::string();
  std::ostringstream os;
  if (t == "fgab") {
    os << "fgab: " << pretty_group(read_fgab(d));
  } else if (t == "sgp2") {
    PicardComplex a = read_sgp2(d);
    os << "sgp2: pi0 = " << pretty_group(pi0(a).group) << ", pi1 = " << pretty_group(pi1(a).group);
  } else if (t == "verdict") {
    os << d["predicate"].get<std::string>() << ": " << yn(d["verdict"].get<bool>());
  } else if (t == "kernelcert") {
    os << "kernel: K = " << pretty_group(read_fgab(d["K"], "K"));
  } else if (t == "cokernelcert") {
    os << "cokernel: Q = " << pretty_group(read_fgab(d["Q"], "Q"));
  } else if (t == "kernel2cert") {
    PicardComplex k = read_sgp2(d["K"], "K");
    os << "kernel2: pi0(K) = " << pretty_group(pi0(k).group)
       << ", pi1(K) = " << pretty_group(pi1(k).group);
  } else if (t == "cokernel2cert") {
    PicardComplex q = read_sgp2(d["Q"], "Q");
    os << "cokernel2: pi0(Q) = " << pretty_group(pi0(q).group)
       << ", pi1(Q) = " << pretty_group(pi1(q).group);
  } else if (t == "exact2cert") {
    os << "2-exact: " << yn(d["verdict"].get<bool>())
       << " (condition2: " << yn(d["condition2"].get<bool>()) << ")";
  } else if (t == "extensioncert") {
    os << "extension: " << yn(d["verdict"].get<bool>()) << " (conditions "
       << yn(d["condition1"].get<bool>()) << "/" << yn(d["condition2"].get<bool>()) << "/"
       << yn(d["condition3"].get<bool>()) << ")";
  } else if (t == "presentcert") {
    os << "presentation: P = dis(Z^" << d["P"]["c0"]["gens"].get<int>() << "); cert "
       << yn(d["cert"]["discrete_free"].get<bool>()) << "/"
       << yn(d["cert"]["essentially_surjective"].get<bool>()) << "/"
       << yn(d["cert"]["identity_homotopy"].get<bool>());
  } else if (t == "presentmodcert") {
    os << "presentation: P free on " << d["P"]["m0"]["size"].get<int>() << " elements; cert "
       << yn(d["cert"]["discrete_free"].get<bool>()) << "/"
       << yn(d["cert"]["essentially_surjective"].get<bool>()) << "/"
       << yn(d["cert"]["identity_homotopy"].get<bool>());
  } else if (t == "liftcert") {
    os << "lift: gprime found" << (d.contains("h") ? " with homotopy" : "");
  } else if (t == "liftmodcert") {
    os << "lift-mod: gprime found with homotopy";
  } else if (t == "finring") {
    os << "finring: size " << d["size"].get<int>();
  } else if (t == "finmod") {
    os << "finmod: size " << d["size"].get<int>() << " over ring of size "
       << d["ring"]["size"].get<int>();
  } else if (t == "oraclecert") {
    os << "oracle " << d["predicate"].get<std::string>() << ": "
       << yn(d["verdict"].get<bool>()) << " (objects " << d["objects"].get<long long>()
       << ", morphisms " << d["morphisms"].get<long long>() << ")";
  } else if (t == "oracleliftcert") {
    if (d["found"].get<bool>())
      os << "oracle lift: found (candidate " << d["candidates"].dump() << " of "
         << d["space"].dump() << ")";
    else
      os << "oracle lift: not found (searched " << d["space"].dump() << ")";
  } else if (t == "oracleagreement") {
    auto part = [&](const char* k) {
      return std::string(yn(d[k]["formula"].get<bool>())) + "/" +
             yn(d[k]["oracle"].get<bool>());
    };
    os << "oracle agreement: faithful " << part("faithful") << ", full " << part("full")
       << ", esssurj " << part("esssurj") << " -> " << (d["agree"].get<bool>() ? "agree" : "DISAGREE");
  } else {
    os << d.dump();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Driver

inline Json load_doc(const std::string& path, std::istream& stdin_) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << stdin_.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw invalid_input("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input(std::string("JSON parse error: ") + e.what());
  }
}

inline Int candidate_cap_from_env() {
  const char* e = std::getenv("PICARD2_CANDIDATE_CAP");
  if (!e) return Int(10000000);
  std::string s(e);
  if (s.empty()) return Int(10000000);
  for (char c : s)
    if (c < '0' || c > '9') throw invalid_input("PICARD2_CANDIDATE_CAP: malformed value");
  return Int(s);
}

inline int run(const std::vector<std::string>& args, std::istream& stdin_, std::ostream& stdout_,
               std::ostream& stderr_) {
  CLI::App app{"exact calculator for symmetric 2-groups and strict 2-modules"};
  app.require_subcommand(1);

  std::string in_path = "-", out_path = "-", format = "json", predicate;
  int jobs = 1;
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "input document path, or - for stdin")->required();
    cmd->add_option("--out", out_path, "output path, or - for stdout");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "summary"}));
    return cmd;
  };

  std::vector<std::pair<CLI::App*, std::function<Outcome(const Json&)>>> handlers;

  handlers.emplace_back(add_io(app.add_subcommand("pi0", "pi0 of a complex")), handle_pi0);
  handlers.emplace_back(add_io(app.add_subcommand("pi1", "pi1 of a complex")), handle_pi1);
  handlers.emplace_back(add_io(app.add_subcommand("dis", "discrete complex on a group")),
                        handle_dis);

  CLI::App* check = add_io(app.add_subcommand("check", "evaluate a predicate"));
  check->add_option("--predicate", predicate, "faithful|full|esssurj|chainhom|htpy")
      ->required()
      ->check(CLI::IsMember({"faithful", "full", "esssurj", "chainhom", "htpy"}));
  handlers.emplace_back(check,
                        [&](const Json& d) { return handle_check(d, predicate); });

  handlers.emplace_back(add_io(app.add_subcommand("kernel", "kernel with inclusion")),
                        handle_kernel);
  handlers.emplace_back(add_io(app.add_subcommand("cokernel", "cokernel with projection")),
                        handle_cokernel);
  handlers.emplace_back(add_io(app.add_subcommand("exact2", "2-exactness certificate")),
                        handle_exact2);
  handlers.emplace_back(add_io(app.add_subcommand("extension", "extension certificate")),
                        handle_extension);
  handlers.emplace_back(add_io(app.add_subcommand("present", "projective presentation")),
                        handle_present);
  handlers.emplace_back(
      add_io(app.add_subcommand("present-mod", "projective presentation of a 2-module")),
      handle_present_mod);
  handlers.emplace_back(add_io(app.add_subcommand("lift", "lift through a surjection")),
                        handle_lift);
  handlers.emplace_back(add_io(app.add_subcommand("lift-mod", "lift for 2-modules")),
                        handle_lift_mod);
  handlers.emplace_back(add_io(app.add_subcommand("pi0-ring", "pi0 of a strict 2-ring")),
                        handle_pi0_ring);
  handlers.emplace_back(add_io(app.add_subcommand("pi0-mod", "pi0 of a strict 2-module")),
                        handle_pi0_mod);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force verification");
  oracle->require_subcommand(1);
  CLI::App* opred = add_io(oracle->add_subcommand("predicate", "predicate by enumeration"));
  opred->add_option("--predicate", predicate, "faithful|full|esssurj")
      ->required()
      ->check(CLI::IsMember({"faithful", "full", "esssurj"}));
  handlers.emplace_back(opred,
                        [&](const Json& d) { return handle_oracle_predicate(d, predicate); });

  CLI::App* olift = add_io(oracle->add_subcommand("lift", "exhaustive lift search"));
  olift->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  handlers.emplace_back(olift, [&](const Json& d) {
    return handle_oracle_lift(d, candidate_cap_from_env(), jobs);
  });

  CLI::App* oall =
      add_io(oracle->add_subcommand("verify-all", "compare formulas against enumeration"));
  handlers.emplace_back(oall, handle_oracle_verify_all);

  std::vector<const char*> argv;
  argv.push_back("picard2");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    stdout_ << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    stderr_ << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Json doc = load_doc(in_path, stdin_);
    for (auto& [cmd, fn] : handlers) {
      if (!cmd->parsed()) continue;
      Outcome r = fn(doc);
      std::string payload = format == "summary" ? summarize(r.doc) : r.doc.dump(2);
      payload += "\n";
      if (out_path == "-") {
        stdout_ << payload;
      } else {
        std::ofstream f(out_path);
        if (!f) throw invalid_input("cannot open output file: " + out_path);
        f << payload;
      }
      return r.code;
    }
    stderr_ << "error: no subcommand\n";
    return 2;
  } catch (const search_overflow& e) {
    stderr_ << "guard: " << e.what() << "\n";
    return 3;
  } catch (const invalid_input& e) {
    stderr_ << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    stderr_ << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace picard2
