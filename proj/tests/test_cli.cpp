#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lzero/cli.hpp"
#include "support.hpp"

using namespace lzero::cli;
using lzero::testing::fixture_path;

namespace {

Options text_opts() { return {}; }
Options json_opts() { return {true, false, std::nullopt}; }

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() / ("lzero-test-" + stem + ".lz");
}

}  // namespace

TEST_CASE("invariants command") {
  auto r = cmd_invariants(fixture_path("borromean.lz"), text_opts());
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "components: 3\nlinking:\n  0 0 0\n  0 0 0\n  0 0 0\narf: 0 0 0\ntriple: (1,2,3)=+1\n"
        "sato_levine: (1,2)=0 (1,3)=0 (2,3)=0\n");
  auto j = nlohmann::json::parse(cmd_invariants(fixture_path("borromean.lz"), json_opts()).out);
  CHECK(j["m"] == 3);
  CHECK(j["triple"]["(1,2,3)"] == 1);

  auto h = cmd_invariants(fixture_path("hopf+.lz"), json_opts());
  CHECK(h.exit_code == 0);
  CHECK(nlohmann::json::parse(h.out)["triple"].is_null());
}

TEST_CASE("conway command") {
  auto r = cmd_conway(fixture_path("trefoil.lz"), text_opts());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + 1*z^2\n");
  auto j = nlohmann::json::parse(cmd_conway(fixture_path("fig8.lz"), json_opts()).out);
  CHECK(j["coefficients"]["0"] == 1);
  CHECK(j["coefficients"]["2"] == -1);
}

TEST_CASE("classify and solvable commands") {
  CHECK(cmd_classify(fixture_path("borromean.lz"), text_opts()).out == "m=3; a=0,0,0; b=+1; c=0,0,0\n");
  auto h = cmd_classify(fixture_path("hopf+.lz"), text_opts());
  CHECK(h.exit_code == 1);
  CHECK(h.err.rfind("not classifiable:", 0) == 0);

  auto s = cmd_solvable(fixture_path("trefoil.lz"), text_opts());
  CHECK(s.exit_code == 0);
  CHECK(s.out == "solvable: false\ngrope_class_2: false\nwhitney_order_2: false\nobstruction: Arf(K_1)=1\n");
  auto j = nlohmann::json::parse(cmd_solvable(fixture_path("unlink2.lz"), json_opts()).out);
  CHECK(j["solvable"] == true);
  CHECK(j["obstructions"].empty());

  Options color{false, true, std::nullopt};
  CHECK(cmd_solvable(fixture_path("unknot.lz"), color).out.find("\x1b[32mtrue\x1b[0m") != std::string::npos);
}

TEST_CASE("equiv command") {
  auto r = cmd_equiv(fixture_path("whitehead.lz"), fixture_path("unlink2.lz"), text_opts());
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("equivalent: false\n", 0) == 0);
  CHECK(cmd_equiv(fixture_path("trefoil.lz"), fixture_path("fig8.lz"), text_opts()).out.rfind("equivalent: true", 0) ==
        0);
  CHECK(cmd_equiv(fixture_path("trefoil.lz"), fixture_path("unlink2.lz"), text_opts()).exit_code == 1);
}

TEST_CASE("exit codes for bad input") {
  CHECK(cmd_classify("/nonexistent/file.lz", text_opts()).exit_code == 2);
  auto p = temp_file("garbage");
  {
    std::ofstream(p) << "this is not a diagram\n";
  }
  CHECK(cmd_invariants(p.string(), text_opts()).exit_code == 2);
  std::filesystem::remove(p);
  CHECK(cmd_rep("m=2; a=0; b=; c=1", text_opts()).exit_code == 2);
  CHECK(cmd_move(fixture_path("trefoil.lz"), "R9 nowhere", text_opts()).exit_code == 2);
  CHECK(cmd_move(fixture_path("trefoil.lz"), "R1- crossings=1", text_opts()).exit_code == 1);
}

TEST_CASE("rep output round-trips through classify") {
  auto p = temp_file("rep");
  Options o{false, false, p.string()};
  auto r = cmd_rep("m=3; a=1,0,0; b=-1; c=0,1,1", o);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "wrote " + p.string() + "\n");
  CHECK(cmd_classify(p.string(), text_opts()).out == "m=3; a=1,0,0; b=-1; c=0,1,1\n");
  std::filesystem::remove(p);

  auto j = nlohmann::json::parse(cmd_rep("m=2; a=0,0; b=; c=1", json_opts()).out);
  CHECK(j["crossings"] == 5);
  CHECK(j["diagram"].is_string());
}

TEST_CASE("move and sites commands") {
  auto s = cmd_sites(fixture_path("clasp-pair.lz"), text_opts());
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("BANDPASS crossings=8,7,5,6\n") != std::string::npos);

  auto p = temp_file("moved");
  Options o{false, false, p.string()};
  CHECK(cmd_move(fixture_path("clasp-pair.lz"), "BANDPASS crossings=8,7,5,6", o).exit_code == 0);
  auto e = cmd_equiv(p.string(), fixture_path("opposite-clasp.lz"), text_opts());
  CHECK(e.out.rfind("equivalent: true", 0) == 0);
  std::filesystem::remove(p);
}

TEST_CASE("output is deterministic") {
  for (const auto& name : lzero::testing::corpus()) {
    auto f = fixture_path(name);
    CHECK(cmd_invariants(f, json_opts()).out == cmd_invariants(f, json_opts()).out);
    CHECK(cmd_conway(f, text_opts()).out == cmd_conway(f, text_opts()).out);
  }
}
