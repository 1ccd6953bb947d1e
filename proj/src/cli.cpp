#include "ssg/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ssg/classify.hpp"
#include "ssg/serialize.hpp"

namespace ssg::cli {

namespace {

struct Flags {
  std::string format = "text";
  Int bound = kDefaultBound;
  int max_rank = 4;
  int depth = kDefaultDepth;
  std::string output;
  bool parallel = false;
};

std::string join_element(const Element& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s;
}

Weight dominant_arg(const RootSystem& rs, const std::string& text) {
  Weight w = parse_weight(text, rs.rank());
  if (!w.is_dominant()) throw ParseError("weight " + text + " is not dominant");
  return w;
}

void print_entry_text(std::ostream& out, const AtlasEntry& e) {
  out << "type: " << format_cartan_type(e.cartan_type) << "\n";
  if (e.error) {
    out << "error: " << *e.error << "\n";
    if (e.diagrams.empty()) return;
  }
  out << "fundamental group: " << format_group(e.fundamental_group) << "\n";
  out << "diagrams:\n";
  std::map<Int, int> intermediates_by_order;
  for (std::size_t i = 0; i < e.diagrams.size(); ++i) {
    const AtlasDiagram& d = e.diagrams[i];
    out << "  " << i << "  " << d.label << "  subgroup " << format_generators(d.diagram.subgroup) << "  center "
        << format_group(d.center) << "\n";
    if (!d.diagram.is_simply_connected() && !d.diagram.is_adjoint()) ++intermediates_by_order[d.diagram.subgroup.order()];
  }
  out << "isogeny edges:";
  for (std::size_t k = 0; k < e.isogeny_edges.size(); ++k)
    out << (k ? ", " : " ") << e.isogeny_edges[k].first << "->" << e.isogeny_edges[k].second;
  out << "\n";
  if (e.grading) {
    out << "grading (bound " << e.grading->bound << "): " << format_group(e.grading->invariant_factors);
    if (e.grading->free_rank) out << " + Z^" << e.grading->free_rank;
    out << ", matches fundamental group: " << (e.grading->matches_fundamental_group ? "yes" : "no") << "\n";
  }
  for (const auto& [order, count] : intermediates_by_order) {
    if (count > 1) {
      out << "note: intermediate diagrams of equal order are listed separately even when a Dynkin diagram "
             "automorphism exchanges them\n";
      break;
    }
  }
}

int dispatch(const std::string& verb, const std::vector<std::string>& pos, const Flags& flags, std::ostream& out) {
  const bool json = flags.format == "json";

  if (verb == "atlas") {
    AtlasOptions opts;
    opts.bound = flags.bound;
    const auto entries = flags.parallel ? build_atlas(flags.max_rank, opts) : build_atlas_serial(flags.max_rank, opts);
    std::ostringstream buf;
    if (json) {
      buf << dump(atlas_to_json(entries, flags.max_rank, flags.bound));
    } else {
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) buf << "\n";
        print_entry_text(buf, entries[i]);
      }
    }
    if (!flags.output.empty()) {
      std::ofstream f(flags.output, std::ios::binary);
      if (!f) throw ComputationError("cannot write " + flags.output);
      f << buf.str();
    } else {
      out << buf.str();
    }
    bool any_error = false;
    for (const auto& e : entries) any_error = any_error || e.error.has_value();
    return any_error ? kExitComputation : kExitOk;
  }

  const CartanType type = parse_cartan_type(pos.at(0));
  const RootSystem rs(type);
  const std::string type_name = format_cartan_type(type);

  if (verb == "roots") {
    if (json) {
      Json roots = Json::array();
      for (const Root& r : rs.positive_roots())
        roots.push_back({{"simple_coords", r.simple_coords}, {"weight", to_json(r.weight)}});
      Json j;
      j["type"] = type_name;
      j["rank"] = rs.rank();
      j["cartan_matrix"] = rs.cartan_matrix();
      j["root_count"] = rs.roots().size();
      j["positive_roots"] = std::move(roots);
      out << dump(j);
    } else {
      out << "type: " << type_name << "\nrank: " << rs.rank() << "\nroots: " << rs.roots().size()
          << "\npositive roots: " << rs.positive_roots().size() << "\n";
      for (const Root& r : rs.positive_roots())
        out << "  " << join_element(r.simple_coords) << "  weight " << format_weight(r.weight) << "\n";
    }
    return kExitOk;
  }

  if (verb == "weights" || verb == "dim") {
    const Weight lam = dominant_arg(rs, pos.at(1));
    const Int dim = weyl_dim(rs, lam);
    if (verb == "dim") {
      if (json)
        out << dump(Json{{"type", type_name}, {"highest_weight", to_json(lam)}, {"dimension", dim}});
      else
        out << dim << "\n";
      return kExitOk;
    }
    const WeightMultiset ws = weight_multiplicities(rs, lam);
    if (json) {
      out << dump(Json{{"type", type_name}, {"highest_weight", to_json(lam)}, {"dimension", dim}, {"weights", to_json(ws)}});
    } else {
      for (auto it = ws.rbegin(); it != ws.rend(); ++it) out << format_weight(it->first) << ":" << it->second << "\n";
    }
    return kExitOk;
  }

  if (verb == "tensor") {
    const Weight lam = dominant_arg(rs, pos.at(1));
    const Weight mu = dominant_arg(rs, pos.at(2));
    const Decomposition d = tensor_decompose(rs, lam, mu);
    if (json)
      out << dump(Json{{"type", type_name}, {"left", to_json(lam)}, {"right", to_json(mu)}, {"decomposition", to_json(d)}});
    else
      out << format_decomposition(d) << "\n";
    return kExitOk;
  }

  if (verb == "grade") {
    const Weight w = parse_weight(pos.at(1), rs.rank());
    const Element cls = grading_class(rs, w);
    const FiniteAbelianGroup g = fundamental_group(type);
    if (json)
      out << dump(Json{{"type", type_name}, {"weight", to_json(w)}, {"fundamental_group", to_json(g)}, {"class", cls}});
    else
      out << "class: [" << join_element(cls) << "] in " << format_group(g) << "\n";
    return kExitOk;
  }

  if (verb == "equiv") {
    const Weight a = dominant_arg(rs, pos.at(1));
    const Weight b = dominant_arg(rs, pos.at(2));
    const EquivalenceResult r = tensor_equivalent(rs, a, b, flags.bound, flags.depth);
    if (json) {
      Json cert = Json::array();
      for (const Weight& w : r.certificate) cert.push_back(to_json(w));
      out << dump(Json{{"type", type_name},
                       {"a", to_json(a)},
                       {"b", to_json(b)},
                       {"bound", flags.bound},
                       {"depth", flags.depth},
                       {"found", r.found},
                       {"certificate", std::move(cert)}});
    } else if (r.found) {
      out << "equivalent: ";
      for (std::size_t i = 0; i < r.certificate.size(); ++i) out << (i ? " x " : "") << format_weight(r.certificate[i]);
      out << "\n";
    } else {
      out << "not found (bound " << flags.bound << ", depth " << flags.depth << ")\n";
    }
    return kExitOk;
  }

  if (verb == "classify") {
    AtlasOptions opts;
    opts.bound = flags.bound;
    const AtlasEntry e = build_entry(type, opts);
    if (json)
      out << dump(to_json(e));
    else
      print_entry_text(out, e);
    return e.error ? kExitComputation : kExitOk;
  }

  throw ParseError("unknown verb " + verb);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Split semisimple groups: root systems, representations, gradings and diagrams", "ssg"};
  app.fallthrough();
  app.require_subcommand(1);

  Flags flags;
  app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", flags.bound, "Coordinate-sum bound on generating weights")->check(CLI::NonNegativeNumber);
  app.add_option("--max-rank", flags.max_rank, "Largest rank in the atlas")->check(CLI::PositiveNumber);
  app.add_option("--depth", flags.depth, "Longest tensor word searched by equiv")->check(CLI::PositiveNumber);

  std::vector<std::string> positional;
  struct VerbSpec {
    const char* name;
    const char* help;
    std::vector<const char*> args;
  };
  const std::vector<VerbSpec> verbs = {
      {"roots", "List the positive roots", {"TYPE"}},
      {"weights", "Weight multiplicities of V(LAMBDA)", {"TYPE", "LAMBDA"}},
      {"dim", "Dimension of V(LAMBDA)", {"TYPE", "LAMBDA"}},
      {"tensor", "Decompose V(LAMBDA) x V(MU)", {"TYPE", "LAMBDA", "MU"}},
      {"grade", "Class of LAMBDA in P/Q", {"TYPE", "LAMBDA"}},
      {"equiv", "Search for a tensor word containing both weights", {"TYPE", "LAMBDA", "MU"}},
      {"classify", "Diagrams, centres and isogeny order of TYPE", {"TYPE"}},
      {"atlas", "Classification atlas of all irreducible types up to --max-rank", {}},
  };
  std::vector<std::vector<std::string>> slots(verbs.size());
  std::vector<CLI::App*> subs;
  for (std::size_t v = 0; v < verbs.size(); ++v) {
    CLI::App* sub = app.add_subcommand(verbs[v].name, verbs[v].help);
    slots[v].resize(verbs[v].args.size());
    for (std::size_t a = 0; a < verbs[v].args.size(); ++a) sub->add_option(verbs[v].args[a], slots[v][a])->required();
    if (std::string(verbs[v].name) == "atlas") {
      sub->add_option("--output", flags.output, "Write the atlas to a file");
      sub->add_flag("--parallel", flags.parallel, "Build atlas entries concurrently");
    }
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::size_t chosen = 0;
  while (!subs[chosen]->parsed()) ++chosen;
  try {
    return dispatch(verbs[chosen].name, slots[chosen], flags, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << subs[chosen]->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace ssg::cli
