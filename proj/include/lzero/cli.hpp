#pragma once

#include <optional>
#include <string>

namespace lzero::cli {

/// 0 success, 1 domain error, 2 usage or parse error.
struct CommandOutcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct Options {
  bool json = false;
  bool color = false;
  std::optional<std::string> out_path;
};

CommandOutcome cmd_invariants(const std::string& file, const Options& opt);
CommandOutcome cmd_conway(const std::string& file, const Options& opt);
CommandOutcome cmd_classify(const std::string& file, const Options& opt);
CommandOutcome cmd_solvable(const std::string& file, const Options& opt);
CommandOutcome cmd_equiv(const std::string& file1, const std::string& file2, const Options& opt);
CommandOutcome cmd_rep(const std::string& class_text, const Options& opt);
CommandOutcome cmd_move(const std::string& file, const std::string& site, const Options& opt);
/// Every removal, R3 and band-pass site of the diagram, one per line.
CommandOutcome cmd_sites(const std::string& file, const Options& opt);

}  // namespace lzero::cli
