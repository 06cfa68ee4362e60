// Command-line front end: chordality checks, invariants, and lambda-sequence queries.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "clutterlab/clutterlab.hpp"

namespace {

using namespace clutterlab;

constexpr int exit_chordal = 0;
constexpr int exit_not_chordal = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_input_error = 64;

int exit_for(Chordality status) {
  switch (status) {
    case Chordality::chordal: return exit_chordal;
    case Chordality::not_chordal: return exit_not_chordal;
    case Chordality::inconclusive: return exit_inconclusive;
  }
  return exit_input_error;
}

std::vector<Integer> parse_list(const std::string& text) {
  std::vector<Integer> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto b = token.find_first_not_of(" ()");
    const auto e = token.find_last_not_of(" ()");
    if (b == std::string::npos) continue;
    out.emplace_back(token.substr(b, e - b + 1));
  }
  return out;
}

std::string tuple(const std::vector<Integer>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

void emit(const nlohmann::json& j, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clutterlab: chordal clutters, simplicial orders and their invariants"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  std::size_t node_limit = 0;

  auto* check = app.add_subcommand("check", "decide chordality and print a simplicial order, multiset and lambda");
  bool co_chordal = false;
  check->add_option("FILE", path, "clutter file (text or JSON)")->required();
  check->add_flag("--json", json, "machine-readable output");
  check->add_option("--node-limit", node_limit, "search node budget; exceeding it reports inconclusive (0 = none)");
  check->add_flag("--co-chordal", co_chordal, "also search for a co-chordal sequence");

  auto* inv = app.add_subcommand("invariants", "f-vector, h-vector and Betti sequence of a chordal clutter");
  inv->set_help_flag("--help", "print this help message and exit");
  bool want_f = false;
  bool want_h = false;
  bool want_betti = false;
  bool verify = false;
  inv->add_option("FILE", path, "clutter file (text or JSON)")->required();
  inv->add_flag("--f", want_f, "f-vector");
  inv->add_flag("--h", want_h, "h-vector");
  inv->add_flag("--betti", want_betti, "Betti sequence");
  inv->add_flag("--verify", verify, "compare with direct face counts and Hochster's formula");
  inv->add_flag("--json", json, "machine-readable output");
  inv->add_option("--node-limit", node_limit, "search node budget (0 = none)");

  auto* lam = app.add_subcommand("lambda", "lambda-sequence bounds, profiles and validity");
  lam->require_subcommand(1);
  int n = 0;
  int d = 0;
  int index = 0;
  std::string lambda_text;
  auto* lam_max = lam->add_subcommand("max", "largest possible lambda_I");
  auto* lam_profile = lam->add_subcommand("profile", "lambda-sequence of any clutter attaining lambda max at I");
  auto* lam_complete = lam->add_subcommand("complete", "lambda-sequence of the complete clutter");
  auto* lam_validate = lam->add_subcommand("validate", "is LAMBDA the lambda-sequence of a chordal clutter?");
  for (auto* sub : {lam_max, lam_profile, lam_complete, lam_validate}) {
    sub->add_option("N", n)->required();
    sub->add_option("D", d)->required();
    sub->add_flag("--json", json, "machine-readable output");
  }
  lam_max->add_option("I", index)->required();
  lam_profile->add_option("I", index)->required();
  lam_validate->add_option("LAMBDA", lambda_text, "comma-separated lambda_1,lambda_2,...")->required();

  auto* gen = app.add_subcommand("generate", "write a clutter file");
  gen->require_subcommand(1);
  std::string out_path;
  auto* gen_complete = gen->add_subcommand("complete", "all D-subsets of [N]");
  auto* gen_extremal = gen->add_subcommand("extremal", "D-subsets of [N] not inside [N-I]");
  for (auto* sub : {gen_complete, gen_extremal}) {
    sub->add_option("N", n)->required();
    sub->add_option("D", d)->required();
    sub->add_option("-o,--output", out_path, "output file (default stdout)");
    sub->add_flag("--json", json, "write the JSON form");
  }
  gen_extremal->add_option("I", index)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input_error;
  }

  try {
    if (check->parsed() || inv->parsed()) {
      const Clutter c = read_clutter_file(path);
      AnalysisOptions options;
      options.search.node_limit = node_limit;
      options.limits = Limits::from_environment();
      options.co_chordal = co_chordal;
      if (check->parsed()) {
        const Report r = analyze(c, options);
        emit(to_json(r), json, to_table(r));
        return exit_for(r.chordal);
      }
      options.invariants = true;
      options.verify = verify;
      const Report r = analyze(c, options);
      if (r.chordal != Chordality::chordal) {
        std::cerr << "clutter is " << to_string(r.chordal) << "; invariants need a chordal clutter (see 'clutterlab check')\n";
        return exit_for(r.chordal);
      }
      ReportSections sections;
      if (want_f || want_h || want_betti) sections = {want_f, want_h, want_betti};
      nlohmann::json j = to_json(r);
      if (!sections.f) j.erase("f_vector");
      if (!sections.h) j.erase("h_vector");
      if (!sections.betti) {
        j.erase("betti");
        j.erase("projective_dimension");
      }
      emit(j, json, to_table(r, sections));
      return (r.oracle && !r.oracle->all_passed()) ? exit_not_chordal : 0;
    }

    if (lam_max->parsed()) {
      const Integer v = lambda_max(n, d, index);
      emit({{"n", n}, {"d", d}, {"i", index}, {"lambda_max", detail::integer_json(v)}}, json, v.str() + "\n");
      return 0;
    }
    if (lam_profile->parsed()) {
      const auto profile = extremal_lambda_profile(n, d, index);
      emit({{"n", n}, {"d", d}, {"i", index}, {"lambda", detail::integers_json(profile.values())}}, json, profile.to_string() + "\n");
      return 0;
    }
    if (lam_complete->parsed()) {
      const auto lambda = complete_lambda(n, d);
      emit({{"n", n}, {"d", d}, {"lambda", detail::integers_json(lambda.values())}}, json, lambda.to_string() + "\n");
      return 0;
    }
    if (lam_validate->parsed()) {
      const LambdaSequence lambda(n, d, parse_list(lambda_text));
      const auto validity = is_valid_lambda(n, d, lambda);
      nlohmann::json j = {{"n", n}, {"d", d}, {"lambda", detail::integers_json(lambda.values())}, {"valid", validity.valid}, {"diagnosis", validity.diagnosis}};
      std::string text = std::string(validity.valid ? "valid" : "invalid");
      if (validity.lsequence) {
        j["l_sequence"] = detail::integers_json(*validity.lsequence);
        text += ", l = " + tuple(*validity.lsequence);
      }
      if (!validity.valid) text += ": " + validity.diagnosis;
      emit(j, json, text + "\n");
      return validity.valid ? 0 : 1;
    }
    if (gen_complete->parsed() || gen_extremal->parsed()) {
      const Clutter c = gen_complete->parsed() ? complete_clutter(n, d) : extremal_clutter(n, d, index);
      std::ostringstream buffer;
      if (json) {
        buffer << to_json(c).dump() << '\n';
      } else {
        write_clutter_text(buffer, c);
      }
      if (out_path.empty()) {
        std::cout << buffer.str();
      } else {
        std::ofstream file(out_path);
        if (!file) throw ParseError(0, "cannot write '" + out_path + "'");
        file << buffer.str();
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const OracleBoundError& e) {
    std::cerr << "error: " << e.what() << " (raise CLUTTERLAB_MAX_N to override)\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}
