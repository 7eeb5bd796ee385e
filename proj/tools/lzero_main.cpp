#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lzero/cli.hpp"

namespace {

bool color_from_env() {
  const char* v = std::getenv("LZERO_COLOR");
  return v != nullptr && std::string(v) == "1";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lzero::cli;
  CLI::App app{"lzero: 0-solve equivalence invariants of oriented link diagrams"};
  app.require_subcommand(1);
  Options opt;
  opt.color = color_from_env();

  std::string file, file2, text;
  std::string out_path;
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Emit JSON"); };

  auto* inv = app.add_subcommand("invariants", "Linking matrix, Arf, triple linking and Sato-Levine invariants");
  inv->add_option("file", file, "Diagram file")->required();
  add_json(inv);

  auto* con = app.add_subcommand("conway", "Conway polynomial");
  con->add_option("file", file, "Diagram file")->required();
  add_json(con);

  auto* cls = app.add_subcommand("classify", "Class in Z2^m + Z^(m choose 3) + Z2^(m choose 2)");
  cls->add_option("file", file, "Diagram file")->required();
  add_json(cls);

  auto* sol = app.add_subcommand("solvable", "0-solvability with grope and Whitney tower flags");
  sol->add_option("file", file, "Diagram file")->required();
  add_json(sol);

  auto* eq = app.add_subcommand("equiv", "Decide 0-solve equivalence of two diagrams");
  eq->add_option("file1", file, "First diagram file")->required();
  eq->add_option("file2", file2, "Second diagram file")->required();
  add_json(eq);

  auto* rep = app.add_subcommand("rep", "Representative diagram of a class, e.g. \"m=2; a=0,0; b=; c=1\"");
  rep->add_option("class", text, "Class text")->required();
  rep->add_option("--out", out_path, "Write the diagram to this file");
  add_json(rep);

  auto* mv = app.add_subcommand("move", "Apply a Reidemeister or band-pass move, e.g. \"R2- crossings=3,4\"");
  mv->add_option("file", file, "Diagram file")->required();
  mv->add_option("site", text, "Move site")->required();
  mv->add_option("--out", out_path, "Write the diagram to this file");
  add_json(mv);

  auto* sites = app.add_subcommand("sites", "List removal, R3 and band-pass sites of a diagram");
  sites->add_option("file", file, "Diagram file")->required();
  add_json(sites);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!out_path.empty()) opt.out_path = out_path;

  CommandOutcome r;
  if (*inv) r = cmd_invariants(file, opt);
  else if (*con) r = cmd_conway(file, opt);
  else if (*cls) r = cmd_classify(file, opt);
  else if (*sol) r = cmd_solvable(file, opt);
  else if (*eq) r = cmd_equiv(file, file2, opt);
  else if (*rep) r = cmd_rep(text, opt);
  else if (*mv) r = cmd_move(file, text, opt);
  else r = cmd_sites(file, opt);

  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
