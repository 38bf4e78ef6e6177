#include "osg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "osg/classify.hpp"
#include "osg/format.hpp"
#include "osg/ideals.hpp"
#include "osg/powerset.hpp"
#include "osg/relations.hpp"
#include "osg/report.hpp"
#include "osg/search.hpp"
#include "osg/theorems.hpp"

namespace osg::cli {

namespace {

  // Either a loaded structure or the exit code to return.
  struct Loaded {
    std::optional<OrderedSemigroup> structure;
    int                             code = kOk;
  };

  Loaded load(const std::string& path, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
      err << "error: cannot open '" << path << "'\n";
      return {std::nullopt, kUsage};
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    RawStructure raw;
    try {
      raw = parse_osg(buffer.str());
    } catch (const ParseError& e) {
      err << path << ": parse error: " << e.what() << '\n';
      return {std::nullopt, kUsage};
    }
    auto result = validate(raw);
    if (auto* report = std::get_if<ValidationReport>(&result)) {
      const bool format = report->has(ViolationKind::Format);
      err << path << ": " << (format ? "malformed structure" : "not an ordered semigroup")
          << " (" << report->violations.size() << " violation"
          << (report->violations.size() == 1 ? "" : "s") << ")\n"
          << describe(*report, raw.names);
      return {std::nullopt, format ? kUsage : kNegative};
    }
    return {std::get<OrderedSemigroup>(std::move(result)), kOk};
  }

  std::optional<IdealKind> parse_kind(const std::string& text) {
    for (auto kind : kAllIdealKinds) {
      if (text == to_string(kind)) {
        return kind;
      }
    }
    return std::nullopt;
  }

  int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    auto loaded = load(path, err);
    if (loaded.structure) {
      out << path << ": valid ordered semigroup with " << loaded.structure->size()
          << " elements\n";
    }
    return loaded.code;
  }

  int cmd_analyze(const std::string& path, bool json, std::ostream& out,
                  std::ostream& err) {
    auto loaded = load(path, err);
    if (!loaded.structure) {
      return loaded.code;
    }
    auto report = build_report(*loaded.structure);
    if (json) {
      out << nlohmann::json(report).dump(2) << '\n';
    } else {
      out << render_text(report);
    }
    return kOk;
  }

  int cmd_ideals(const std::string& path, const std::string& kind_text, bool minimal,
                 bool json, std::ostream& out, std::ostream& err) {
    std::vector<IdealKind> kinds;
    if (kind_text == "all") {
      kinds.assign(std::begin(kAllIdealKinds), std::end(kAllIdealKinds));
    } else if (auto kind = parse_kind(kind_text)) {
      kinds.push_back(*kind);
    } else {
      err << "error: unknown ideal kind '" << kind_text << "'\n";
      return kUsage;
    }
    auto loaded = load(path, err);
    if (!loaded.structure) {
      return loaded.code;
    }
    const auto&    s = *loaded.structure;
    nlohmann::json j = nlohmann::json::object();
    for (auto kind : kinds) {
      auto list = minimal ? minimal_ideals(s, kind) : enumerate_ideals(s, kind);
      auto& arr = j[std::string(to_string(kind))] = nlohmann::json::array();
      if (!json) {
        out << (minimal ? "minimal " : "") << to_string(kind) << " ideals ("
            << list.items.size() << "):";
      }
      for (const auto& item : list.items) {
        nlohmann::json labels = nlohmann::json::array();
        for (Element x : item) {
          labels.push_back(s.name(x));
        }
        arr.push_back(labels);
        if (!json) {
          out << ' ' << s.format(item);
        }
      }
      if (!json) {
        out << '\n';
      }
    }
    if (json) {
      out << j.dump(2) << '\n';
    }
    return kOk;
  }

  int cmd_green(const std::string& path, bool json, std::ostream& out,
                std::ostream& err) {
    auto loaded = load(path, err);
    if (!loaded.structure) {
      return loaded.code;
    }
    const auto&    s = *loaded.structure;
    nlohmann::json j;
    for (auto rel : kAllRelationKinds) {
      auto  p   = relation_partition(s, rel);
      auto& arr = j["partitions"][std::string(to_string(rel))] = nlohmann::json::array();
      if (!json) {
        out << to_string(rel) << ":";
      }
      for (const auto& block : p.blocks) {
        nlohmann::json labels = nlohmann::json::array();
        for (Element x : block) {
          labels.push_back(s.name(x));
        }
        arr.push_back(labels);
        if (!json) {
          out << ' ' << s.format(block);
        }
      }
      if (!json) {
        out << '\n';
      }
    }
    auto cmp = beta_vs_h(s);
    j["beta_subset_of_h"] = cmp.beta_subset_of_h;
    j["beta_equals_h"]    = cmp.equal;
    if (cmp.witness) {
      j["witness"] = {s.name(cmp.witness->first), s.name(cmp.witness->second)};
    }
    if (json) {
      out << j.dump(2) << '\n';
    } else {
      out << "beta within H: " << (cmp.beta_subset_of_h ? "yes" : "no")
          << ", beta = H: " << (cmp.equal ? "yes" : "no");
      if (cmp.witness) {
        out << " (witness " << s.name(cmp.witness->first) << ", "
            << s.name(cmp.witness->second) << ")";
      }
      out << '\n';
    }
    return kOk;
  }

  int cmd_classify(const std::string& path, bool json, std::ostream& out,
                   std::ostream& err) {
    auto loaded = load(path, err);
    if (!loaded.structure) {
      return loaded.code;
    }
    const auto& s      = *loaded.structure;
    auto        report = build_report(s, false);
    auto        h      = relation_partition(s, RelationKind::GreenH);
    nlohmann::json witnesses = nlohmann::json::object();
    for (Element a = 0; a < s.size(); ++a) {
      if (auto w = cr_witness(s, a, h)) {
        witnesses[s.name(a)]
            = {{"h", s.name(w->h)}, {"e", s.name(w->e)}, {"f", s.name(w->f)}};
      } else {
        witnesses[s.name(a)] = nullptr;
      }
    }
    if (json) {
      nlohmann::json j = {{"flags", report.flags},
                          {"idempotents", report.idempotents},
                          {"regular_elements", report.regular_elements},
                          {"completely_regular_elements",
                           report.completely_regular_elements},
                          {"cr_witnesses", witnesses}};
      out << j.dump(2) << '\n';
      return kOk;
    }
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "regular: " << yn(report.flags.regular) << '\n'
        << "completely regular: " << yn(report.flags.completely_regular) << '\n'
        << "left simple: " << yn(report.flags.left_simple) << '\n'
        << "right simple: " << yn(report.flags.right_simple) << '\n'
        << "simple: " << yn(report.flags.simple) << '\n'
        << "t-simple: " << yn(report.flags.t_simple) << '\n'
        << "bi-simple: " << yn(report.flags.bi_simple) << '\n'
        << "ordered idempotents: " << s.format(ordered_idempotents(s)) << '\n';
    for (Element a = 0; a < s.size(); ++a) {
      const auto& w = witnesses[s.name(a)];
      out << "witness for " << s.name(a) << ": ";
      if (w.is_null()) {
        out << "none\n";
      } else {
        out << "h = " << w["h"].get<std::string>() << ", e = ah = "
            << w["e"].get<std::string>() << ", f = ha = " << w["f"].get<std::string>()
            << '\n';
      }
    }
    return kOk;
  }

  void print_verdict(const OrderedSemigroup& s, const TheoremVerdict& v,
                     std::ostream& out) {
    out << v.theorem_id << ": " << to_string(v.status);
    if (!v.detail.empty()) {
      out << " - " << v.detail;
    }
    if (v.witness) {
      out << " [witness";
      for (Element x : v.witness->elements) {
        out << ' ' << s.name(x);
      }
      for (const auto& sub : v.witness->subsets) {
        if (sub.capacity() == s.size()) {
          out << ' ' << s.format(sub);
        }
      }
      out << ']';
    }
    out << '\n';
  }

  int cmd_theorems(const std::string& path, const std::string& id, bool list,
                   std::ostream& out, std::ostream& err) {
    if (list) {
      for (const auto& info : theorem_registry()) {
        out << info.id << "  " << info.statement << '\n';
      }
      return kOk;
    }
    if (path.empty()) {
      err << "error: a structure file is required unless --list is given\n";
      return kUsage;
    }
    if (!id.empty() && !is_known_theorem(id)) {
      err << "error: unknown theorem id '" << id << "' (see --list)\n";
      return kUsage;
    }
    auto loaded = load(path, err);
    if (!loaded.structure) {
      return loaded.code;
    }
    const auto& s = *loaded.structure;
    std::vector<TheoremVerdict> verdicts;
    if (id.empty()) {
      verdicts = check_all_theorems(s);
    } else {
      verdicts.push_back(check_theorem(s, id));
    }
    int code = kOk;
    for (const auto& v : verdicts) {
      print_verdict(s, v, out);
      if (v.status == VerdictStatus::Counterexample) {
        code = kNegative;
      }
    }
    return code;
  }

  int cmd_powerset(const std::string& path, const std::string& output, std::size_t cap,
                   std::ostream& out, std::ostream& err) {
    auto loaded = load(path, err);
    if (!loaded.structure) {
      return loaded.code;
    }
    if (loaded.structure->size() > cap) {
      err << "error: powerset refuses n = " << loaded.structure->size() << " (cap "
          << cap << "; pass --cap to override)\n";
      return kUsage;
    }
    auto text = emit_osg(powerset_semigroup(*loaded.structure, cap).result);
    if (output.empty() || output == "-") {
      out << text;
      return kOk;
    }
    std::ofstream file(output);
    if (!file) {
      err << "error: cannot write '" << output << "'\n";
      return kUsage;
    }
    file << text;
    return kOk;
  }

  struct EnumerateOptions {
    std::size_t              order = 1;
    bool                     up_to_iso = false;
    std::vector<std::string> filters;
    std::optional<std::size_t> limit;
    std::string              hunt_id;
    bool                     count_only = false;
    std::string              out_dir;
    unsigned                 threads = 1;
  };

  int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
    if (!opt.hunt_id.empty()) {
      if (!is_known_theorem(opt.hunt_id)) {
        err << "error: unknown theorem id '" << opt.hunt_id << "'\n";
        return kUsage;
      }
      auto result = hunt(opt.hunt_id, opt.order);
      if (result.exhausted()) {
        out << opt.hunt_id << ": exhausted orders 1.." << opt.order
            << ", no counterexample (" << result.verified << " verified, "
            << result.vacuous << " vacuous)\n";
        return kOk;
      }
      out << opt.hunt_id << ": counterexample after " << result.verified
          << " verified, " << result.vacuous << " vacuous\n";
      print_verdict(*result.counterexample, *result.verdict, out);
      out << emit_osg(*result.counterexample);
      return kNegative;
    }

    EnumerationSpec spec;
    spec.order     = opt.order;
    spec.up_to_iso = opt.up_to_iso;
    spec.limit     = opt.limit;
    spec.threads   = opt.threads;
    for (const auto& f : opt.filters) {
      if (f == "regular") {
        spec.filters.push_back(StructureFilter::Regular);
      } else if (f == "completely-regular") {
        spec.filters.push_back(StructureFilter::CompletelyRegular);
      } else if (f == "t-simple") {
        spec.filters.push_back(StructureFilter::TSimple);
      } else {
        err << "error: unknown filter '" << f << "'\n";
        return kUsage;
      }
    }
    if (!opt.out_dir.empty()) {
      std::filesystem::create_directories(opt.out_dir);
    }
    std::size_t count = 0;
    for_each_structure(spec, [&](const OrderedSemigroup& s) {
      ++count;
      if (opt.count_only) {
        return true;
      }
      if (!opt.out_dir.empty()) {
        std::ostringstream name;
        name << "osg" << opt.order << "_" << std::setw(6) << std::setfill('0') << count
             << ".osg";
        std::ofstream(std::filesystem::path(opt.out_dir) / name.str()) << emit_osg(s);
        return true;
      }
      if (count > 1) {
        out << "---\n";
      }
      out << emit_osg(s);
      return true;
    });
    if (opt.count_only) {
      out << count << '\n';
    } else {
      err << count << " structure" << (count == 1 ? "" : "s") << '\n';
    }
    return kOk;
  }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ordered semigroup analysis"};
  app.require_subcommand(1);

  std::string path;
  bool        json = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the ordered-semigroup axioms");
  validate_cmd->add_option("file", path, ".osg file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "full report");
  analyze_cmd->add_option("file", path, ".osg file")->required();
  analyze_cmd->add_flag("--json", json, "machine-readable output");

  std::string kind = "all";
  bool        minimal = false;
  auto*       ideals_cmd = app.add_subcommand("ideals", "enumerate ideals");
  ideals_cmd->add_option("file", path, ".osg file")->required();
  ideals_cmd->add_option("--kind", kind, "left, right, two-sided, bi or all");
  ideals_cmd->add_flag("--minimal", minimal, "only minimal ideals");
  ideals_cmd->add_flag("--json", json, "machine-readable output");

  auto* green_cmd = app.add_subcommand("green", "Green's relations and beta");
  green_cmd->add_option("file", path, ".osg file")->required();
  green_cmd->add_flag("--json", json, "machine-readable output");

  auto* classify_cmd = app.add_subcommand("classify", "regularity and simplicity");
  classify_cmd->add_option("file", path, ".osg file")->required();
  classify_cmd->add_flag("--json", json, "machine-readable output");

  std::string id;
  bool        list = false;
  auto*       theorems_cmd = app.add_subcommand("theorems", "run the theorem registry");
  theorems_cmd->add_option("file", path, ".osg file");
  theorems_cmd->add_option("--id", id, "check a single registry id");
  theorems_cmd->add_flag("--list", list, "print the registry");

  std::string output;
  std::size_t cap = kDefaultPowersetCap;
  auto*       powerset_cmd = app.add_subcommand("powerset", "emit P(S) as .osg");
  powerset_cmd->add_option("file", path, ".osg file")->required();
  powerset_cmd->add_option("-o,--output", output, "output file (default stdout)");
  powerset_cmd->add_option("--cap", cap, "largest accepted base order");

  EnumerateOptions eopt;
  auto*            enumerate_cmd
      = app.add_subcommand("enumerate", "enumerate ordered semigroups of one order");
  enumerate_cmd->add_option("--order", eopt.order, "number of elements")->required();
  enumerate_cmd->add_flag("--up-to-iso", eopt.up_to_iso, "one per isomorphism class");
  enumerate_cmd->add_option("--filter", eopt.filters,
                            "regular, completely-regular or t-simple (repeatable)");
  enumerate_cmd->add_option("--limit", eopt.limit, "stop after this many");
  enumerate_cmd->add_option("--hunt", eopt.hunt_id,
                            "search orders 1..n for a counterexample to a registry id");
  enumerate_cmd->add_flag("--count", eopt.count_only, "print only the count");
  enumerate_cmd->add_option("--out-dir", eopt.out_dir, "write one .osg per structure");
  enumerate_cmd->add_option("--threads", eopt.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) {
      return cmd_validate(path, out, err);
    }
    if (*analyze_cmd) {
      return cmd_analyze(path, json, out, err);
    }
    if (*ideals_cmd) {
      return cmd_ideals(path, kind, minimal, json, out, err);
    }
    if (*green_cmd) {
      return cmd_green(path, json, out, err);
    }
    if (*classify_cmd) {
      return cmd_classify(path, json, out, err);
    }
    if (*theorems_cmd) {
      return cmd_theorems(path, id, list, out, err);
    }
    if (*powerset_cmd) {
      return cmd_powerset(path, output, cap, out, err);
    }
    if (*enumerate_cmd) {
      return cmd_enumerate(eopt, out, err);
    }
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace osg::cli
