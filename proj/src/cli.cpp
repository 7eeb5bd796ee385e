#include "lzero/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lzero/classify.hpp"
#include "lzero/conway.hpp"
#include "lzero/errors.hpp"
#include "lzero/indexing.hpp"
#include "lzero/invariants.hpp"
#include "lzero/moves.hpp"

namespace lzero::cli {

namespace {

using Json = nlohmann::ordered_json;

// Input that cannot be read or parsed: exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LinkDiagram load(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InputError(file + ": cannot open");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_diagram(text.str());
  } catch (const ParseError& e) {
    throw InputError(file + ": " + e.what());
  } catch (const DiagramError& e) {
    throw InputError(file + ": " + e.what());
  }
}

std::string paint(const Options& opt, bool good, const std::string& s) {
  if (!opt.color) return s;
  return (good ? "\x1b[32m" : "\x1b[31m") + s + "\x1b[0m";
}

std::string yes_no(const Options& opt, bool v) { return paint(opt, v, v ? "true" : "false"); }

std::string signed_str(std::int64_t v) { return (v > 0 ? "+" : "") + std::to_string(v); }

CommandOutcome emit(const Options& opt, const Json& j, const std::string& text) {
  return {0, opt.json ? j.dump(2) + "\n" : text, {}};
}

CommandOutcome write_diagram(const Options& opt, const LinkDiagram& d, Json meta) {
  std::string text = render_diagram(d);
  if (opt.out_path) {
    std::ofstream out(*opt.out_path, std::ios::binary);
    if (!out) return {1, {}, *opt.out_path + ": cannot write\n"};
    out << text;
    meta["path"] = *opt.out_path;
    return {0, opt.json ? meta.dump(2) + "\n" : "wrote " + *opt.out_path + "\n", {}};
  }
  if (opt.json) {
    meta["diagram"] = text;
    return {0, meta.dump(2) + "\n", {}};
  }
  return {0, text, {}};
}

CommandOutcome guarded(const std::function<CommandOutcome()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    return {2, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {2, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const InvariantUndefined& e) {
    return {1, {}, std::string("not classifiable: ") + e.what() + "\n"};
  } catch (const InternalError& e) {
    return {1, {}, std::string("internal error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, {}, std::string("error: ") + e.what() + "\n"};
  }
}

std::string invariants_text(const InvariantTuple& t) {
  std::ostringstream s;
  s << "components: " << t.m << "\nlinking:\n";
  for (const auto& row : t.linking) {
    s << " ";
    for (auto v : row) s << " " << v;
    s << "\n";
  }
  s << "arf:";
  for (int v : t.arf) s << " " << v;
  s << "\ntriple:";
  if (t.triple) {
    auto idx = component_triples(t.m);
    for (std::size_t n = 0; n < idx.size(); ++n) s << " " << index_label(idx[n]) << "=" << signed_str((*t.triple)[n]);
  } else {
    s << " undefined (nonzero linking)";
  }
  s << "\nsato_levine:";
  if (t.sato_levine) {
    auto idx = component_pairs(t.m);
    for (std::size_t n = 0; n < idx.size(); ++n) s << " " << index_label(idx[n]) << "=" << (*t.sato_levine)[n];
  } else {
    s << " undefined (nonzero linking)";
  }
  s << "\n";
  return s.str();
}

}  // namespace

CommandOutcome cmd_invariants(const std::string& file, const Options& opt) {
  return guarded([&] {
    auto t = invariant_tuple(load(file));
    return emit(opt, to_json(t), invariants_text(t));
  });
}

CommandOutcome cmd_conway(const std::string& file, const Options& opt) {
  return guarded([&] {
    auto p = conway_polynomial(load(file));
    Json j;
    j["polynomial"] = p.to_string();
    Json coeffs = Json::object();
    for (const auto& [deg, c] : p.terms()) {
      if (c <= std::numeric_limits<std::int64_t>::max() && c >= std::numeric_limits<std::int64_t>::min())
        coeffs[std::to_string(deg)] = c.convert_to<std::int64_t>();
      else
        coeffs[std::to_string(deg)] = c.str();
    }
    j["coefficients"] = coeffs;
    return emit(opt, j, p.to_string() + "\n");
  });
}

CommandOutcome cmd_classify(const std::string& file, const Options& opt) {
  return guarded([&] {
    auto g = classify(load(file));
    return emit(opt, to_json(g), to_string(g) + "\n");
  });
}

CommandOutcome cmd_solvable(const std::string& file, const Options& opt) {
  return guarded([&] {
    auto r = is_zero_solvable(load(file));
    Json j;
    j["solvable"] = r.solvable;
    j["grope_class_2"] = r.grope_class_2;
    j["whitney_order_2"] = r.whitney_order_2;
    j["obstructions"] = r.obstructions;
    std::string text = "solvable: " + yes_no(opt, r.solvable) + "\ngrope_class_2: " + yes_no(opt, r.grope_class_2) +
                       "\nwhitney_order_2: " + yes_no(opt, r.whitney_order_2) + "\n";
    for (const auto& o : r.obstructions) text += "obstruction: " + o + "\n";
    return emit(opt, j, text);
  });
}

CommandOutcome cmd_equiv(const std::string& file1, const std::string& file2, const Options& opt) {
  return guarded([&] {
    auto d1 = load(file1);
    auto d2 = load(file2);
    if (d1.m != d2.m)
      return CommandOutcome{1, {}, "error: " + file1 + " has " + std::to_string(d1.m) + " components, " + file2 +
                                       " has " + std::to_string(d2.m) + "\n"};
    auto g1 = classify(d1);
    auto g2 = classify(d2);
    Json j;
    j["equivalent"] = g1 == g2;
    j["first"] = to_json(g1);
    j["second"] = to_json(g2);
    return emit(opt, j,
                "equivalent: " + yes_no(opt, g1 == g2) + "\nfirst: " + to_string(g1) + "\nsecond: " + to_string(g2) +
                    "\n");
  });
}

CommandOutcome cmd_rep(const std::string& class_text, const Options& opt) {
  return guarded([&] {
    ZeroSolveClass g = parse_class(class_text);
    LinkDiagram d = representative(g);
    Json meta;
    meta["class"] = to_json(g);
    meta["crossings"] = d.crossings.size();
    return write_diagram(opt, d, meta);
  });
}

CommandOutcome cmd_move(const std::string& file, const std::string& site_text, const Options& opt) {
  return guarded([&] {
    auto d = load(file);
    MoveSite site;
    try {
      site = parse_move_site(site_text);
    } catch (const std::exception& e) {
      throw InputError("move site '" + site_text + "': " + e.what());
    }
    auto out = apply_move(d, site);
    out.name = d.name;
    Json meta;
    meta["move"] = to_string(site);
    meta["crossings"] = out.crossings.size();
    return write_diagram(opt, out, meta);
  });
}

CommandOutcome cmd_sites(const std::string& file, const Options& opt) {
  return guarded([&] {
    auto d = load(file);
    Json j = Json::array();
    std::string text;
    for (MoveKind k : {MoveKind::r1_remove, MoveKind::r2_remove, MoveKind::r3, MoveKind::band_pass})
      for (const auto& s : find_sites(d, k)) {
        j.push_back(to_string(s));
        text += to_string(s) + "\n";
      }
    return emit(opt, j, text);
  });
}

}  // namespace lzero::cli
