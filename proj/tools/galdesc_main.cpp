// galdesc: exact Galois-descent calculator.
//
// Subcommands: verify | descend | artin | exactseq | selftest.
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error,
// 3 invalid datum / representation.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "galdesc/driver.hpp"

namespace {

using namespace galdesc;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

int emit(const Report& rep, const std::string& format, const std::string& out_path,
         double elapsed_ms) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << report_to_json(rep, elapsed_ms).dump(2) << "\n";
  }
  if (format == "json")
    std::cout << report_to_json(rep, elapsed_ms).dump(2) << "\n";
  else
    std::cout << report_to_text(rep);
  return rep.pass() ? 0 : 1;
}

std::shared_ptr<GroupRepSetting> load_pair(const std::string& arg) {
  if (arg == "s3") return s3_pair();
  if (arg == "d4") return d4_pair();
  GroupFile gf = group_from_json(load_json(arg));
  return make_grouprep(std::move(gf.group), std::move(gf.normal), std::move(gf.field));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Galois-descent calculator"};
  app.require_subcommand(1);

  std::string path, out_path, format = "text", pair_arg;
  uint32_t seed = 0;
  int cases = 10;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the JSON report to this file");
    sub->add_option("--format", format, "stdout format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* verify = app.add_subcommand("verify", "validate a descent setting / datum");
  verify->add_option("problem", path, "problem file (JSON)")->required();
  add_common(verify);

  CLI::App* descend = app.add_subcommand("descend", "run descent on a datum");
  descend->add_option("problem", path, "problem file (JSON)")->required();
  add_common(descend);

  CLI::App* artin = app.add_subcommand("artin", "invert a finite-group representation");
  artin->add_option("problem", path, "problem file (JSON)")->required();
  add_common(artin);

  CLI::App* exactseq = app.add_subcommand("exactseq", "exact-sequence diagnostics");
  exactseq->add_option("pair", pair_arg, "\"s3\", \"d4\", or a group file")->required();
  add_common(exactseq);

  CLI::App* selftest = app.add_subcommand("selftest", "deterministic property suite");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_option("--cases", cases, "descent cases per setting");
  add_common(selftest);

  CLI11_PARSE(app, argc, argv);

  try {
    auto started = std::chrono::steady_clock::now();
    Report rep;
    if (*verify)
      rep = cmd_verify(problem_from_json(load_json(path)));
    else if (*descend)
      rep = cmd_descend(problem_from_json(load_json(path)));
    else if (*artin)
      rep = cmd_artin(problem_from_json(load_json(path)));
    else if (*exactseq)
      rep = cmd_exactseq(load_pair(pair_arg));
    else
      rep = cmd_selftest(seed, cases);
    double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return emit(rep, format, out_path, elapsed_ms);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CocycleViolation& e) {
    std::cerr << "invalid datum: " << e.what() << "\n";
    return 3;
  } catch (const NotArtin& e) {
    std::cerr << "invalid representation: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  }
}
