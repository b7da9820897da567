#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cca/catalog.hpp"
#include "cca/cayley.hpp"
#include "cca/classify.hpp"
#include "cca/colour_aut.hpp"
#include "cca/decompose.hpp"
#include "cca/errors.hpp"
#include "cca/group.hpp"
#include "cca/report.hpp"
#include "cca/verify.hpp"

namespace cca::cli {
namespace {

std::vector<Element> parse_csv(const std::string& text, const char* what) {
  std::vector<Element> out;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    field.erase(std::remove_if(field.begin(), field.end(), [](unsigned char c) { return std::isspace(c); }),
                field.end());
    Element value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw ParseError(std::string("invalid ") + what + " entry \"" + field + "\"");
    }
    out.push_back(value);
  }
  return out;
}

std::string format_elements(std::span<const Element> xs) {
  std::string out = "[";
  for (std::size_t t = 0; t < xs.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(xs[t]);
  }
  return out + "]";
}

std::shared_ptr<const FiniteGroup> load_group(const std::string& spec) {
  return std::make_shared<const FiniteGroup>(build_group(spec, max_order_from_env()));
}

struct GraphChoice {
  bool complete = false;
  std::string set;
};

void add_graph_options(CLI::App* cmd, GraphChoice& choice) {
  auto* complete = cmd->add_flag("--complete", choice.complete, "Use the complete Cayley graph K_G (default)");
  auto* set = cmd->add_option("--set", choice.set, "Connection set as comma-separated element indices");
  complete->excludes(set);
}

CayleyGraph make_graph(const std::shared_ptr<const FiniteGroup>& G, const GraphChoice& choice) {
  if (choice.set.empty()) return complete_cayley(G);
  std::vector<Element> S = parse_csv(choice.set, "--set");
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return build_cayley(G, S);
}

int cmd_build(const std::string& spec, const std::string& format, std::ostream& out) {
  const auto G = load_group(spec);
  if (format == "json") {
    out << group_json(*G) << '\n';
    return kOk;
  }
  out << "group: " << G->name() << '\n'
      << "order: " << G->order() << '\n'
      << "abelian: " << (G->is_abelian() ? "true" : "false") << '\n'
      << "centre_size: " << centre(*G).size() << '\n';
  for (Element x = 0; x < G->order(); ++x)
    out << x << ' ' << G->label(x) << " order=" << G->element_order(x) << '\n';
  return kOk;
}

int cmd_classify(const std::string& spec, bool check, const std::string& format, std::ostream& out) {
  const auto G = load_group(spec);
  const CompleteClassification c = predict_stabilizer(*G, G->order());
  const CompleteVerdict verdict = complete_cca_verdict(*G);
  std::optional<bool> agreement;
  if (check) {
    const CayleyGraph K = complete_cayley(G);
    const AutomorphismSet brute = enumerate_stabilizer(K, AutMode::ColourPreserving, G->order());
    const CcaStatus status = cca_status(K, {.check_normal = false, .max_order = G->order()});
    agreement = brute.maps == c.predicted_stabilizer.maps && status.cca == verdict.cca &&
                status.strongly_cca == verdict.strongly_cca;
  }
  if (format == "json") {
    out << classification_json(*G, c, verdict, agreement) << '\n';
  } else {
    out << "group=" << G->name() << " kind=" << to_string(c.kind) << " stabilizer=" << c.predicted_stabilizer.size()
        << " cca=" << (verdict.cca ? "true" : "false") << " strongly_cca=" << (verdict.strongly_cca ? "true" : "false");
    if (agreement) out << " agreement=" << (*agreement ? "true" : "false");
    out << '\n';
  }
  return agreement.value_or(true) ? kOk : kVerificationFailed;
}

int cmd_enum(const std::string& spec, const std::string& mode_name, const GraphChoice& choice, bool translations,
             const std::string& format, std::ostream& out) {
  const auto mode = parse_aut_mode(mode_name);
  if (!mode) throw ParseError("unknown mode \"" + mode_name + "\"");
  const auto G = load_group(spec);
  const CayleyGraph X = make_graph(G, choice);
  AutomorphismSet set = enumerate_stabilizer(X, *mode, G->order());
  if (translations) set = with_translations(X, set);
  if (format == "json") {
    out << to_json(set) << '\n';
    return kOk;
  }
  out << "mode=" << to_string(set.mode) << " stabilized=" << (set.stabilized ? "true" : "false")
      << " count=" << set.size() << '\n';
  for (const GroupMap& phi : set.maps) out << format_elements(phi.image()) << '\n';
  return kOk;
}

int cmd_decompose(const std::string& spec, const std::string& map_text, bool translations, const std::string& format,
                  std::ostream& out) {
  const auto G = load_group(spec);
  const CayleyGraph K = complete_cayley(G);
  std::vector<GroupMap> maps;
  if (!map_text.empty()) {
    std::vector<Element> image = parse_csv(map_text, "--map");
    if (image.size() != G->order()) throw ParseError("--map needs exactly " + std::to_string(G->order()) + " entries");
    maps.emplace_back(std::move(image));
  } else {
    AutomorphismSet set = enumerate_stabilizer(K, AutMode::ColourPermuting, G->order());
    if (translations) set = with_translations(K, set);
    maps = std::move(set.maps);
  }
  std::size_t verified = 0;
  for (const GroupMap& phi : maps) {
    const Decomposition d = decompose_colour_permuting(K, phi);
    const bool ok = verify_decomposition(K, d);
    verified += ok ? 1 : 0;
    if (format == "json") {
      out << to_json(K, d) << '\n';
    } else {
      out << "phi=" << format_elements(d.original.image()) << " beta=" << format_elements(d.beta.image())
          << " psi=" << format_elements(d.psi.image()) << (ok ? " ok" : " FAILED") << '\n';
    }
  }
  if (format != "json") out << "verified " << verified << "/" << maps.size() << '\n';
  return verified == maps.size() ? kOk : kVerificationFailed;
}

int cmd_verify(const std::string& suite, std::optional<std::size_t> max_order, const std::string& group,
               std::uint64_t seed, std::ostream& out) {
  if (std::find(std::begin(kSuiteNames), std::end(kSuiteNames), suite) == std::end(kSuiteNames)) {
    throw ParseError("unknown suite \"" + suite + "\"");
  }
  SuiteOptions options;
  options.max_order = max_order.value_or(suite == "normal-search" ? 16 : 32);
  options.seed = seed;
  if (!group.empty()) {
    const auto G = load_group(group);
    options.group = group;
    options.max_order = std::max(options.max_order, G->order());
  }
  Report report(&out);
  run_suite(suite, report, options);
  out << suite << ": " << report.passed() << " passed, " << report.failed() << " failed\n";
  if (const auto first = report.first_failure()) {
    out << "first failure: " << first->name;
    if (!first->detail.empty()) out << ": " << first->detail;
    out << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_export(const std::string& spec, const GraphChoice& choice, const std::string& format,
               const std::string& out_path, std::ostream& out) {
  const auto G = load_group(spec);
  const CayleyGraph X = make_graph(G, choice);
  std::string text;
  if (format == "dot") {
    text = to_dot(X);
  } else if (format == "json") {
    text = to_json(X);
  } else {
    std::ostringstream s;
    s << "group: " << G->name() << '\n' << "vertices: " << X.order() << '\n';
    for (const ColourClass& c : X.colours()) {
      s << "colour " << c.id << ": {" << G->label(c.lo);
      if (!c.is_singleton()) s << ", " << G->label(c.hi);
      s << "}\n";
    }
    for (Element u = 0; u < X.order(); ++u)
      for (Element v = u + 1; v < X.order(); ++v)
        if (X.adjacent(u, v)) s << u << " -- " << v << " colour " << X.edge_colour(u, v) << '\n';
    text = s.str();
  }
  if (out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ParseError("cannot open \"" + out_path + "\" for writing");
  file << text;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colour-permuting automorphisms of Cayley graphs", "cca"};
  app.require_subcommand(1);

  std::string spec, format = "text", mode = "colour-preserving", map_text, suite, group, out_path;
  bool check = false, translations = false;
  std::optional<std::size_t> max_order;
  std::uint64_t seed = SuiteOptions{}.seed;
  GraphChoice graph;

  const auto text_or_json = CLI::IsMember({"text", "json"});

  auto* build = app.add_subcommand("build", "Construct a group and print its elements");
  build->add_option("group", spec, "Group spec, e.g. Q8xZ2")->required();
  build->add_option("--format", format, "text or json")->check(text_or_json);

  auto* classify = app.add_subcommand("classify", "Predict the colour-preserving stabilizer of K_G");
  classify->add_option("group", spec)->required();
  classify->add_flag("--check", check, "Compare the prediction with a brute-force search");
  classify->add_option("--format", format)->check(text_or_json);

  auto* enumerate = app.add_subcommand("enum", "Enumerate automorphisms fixing 1");
  enumerate->add_option("group", spec)->required();
  enumerate->add_option("--mode", mode, "colour-preserving, colour-permuting, graph or group");
  add_graph_options(enumerate, graph);
  enumerate->add_flag("--translations", translations, "Include every left translate");
  enumerate->add_option("--format", format)->check(text_or_json);

  auto* decompose = app.add_subcommand("decompose", "Factor colour-permuting maps of K_G as beta o psi");
  decompose->add_option("group", spec)->required();
  decompose->add_option("--map", map_text, "One map as comma-separated images of 0..n-1");
  decompose->add_flag("--translations", translations, "Use every translate, not just the stabilizer");
  decompose->add_option("--format", format)->check(text_or_json);

  auto* verify = app.add_subcommand("verify", "Run a verification suite over the catalog");
  verify->add_option("suite", suite, "lemmas, classif, decomposition, d12 or normal-search")->required();
  verify->add_option("--max-order", max_order, "Largest group order to include");
  verify->add_option("--group", group, "Run on this group instead of the catalog");
  verify->add_option("--seed", seed, "Seed for random connection sets");

  auto* exporter = app.add_subcommand("export", "Write a Cayley graph as DOT, JSON or text");
  exporter->add_option("group", spec)->required();
  add_graph_options(exporter, graph);
  exporter->add_option("--format", format, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));
  exporter->add_option("--out", out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(spec, format, out);
    if (*classify) return cmd_classify(spec, check, format, out);
    if (*enumerate) return cmd_enum(spec, mode, graph, translations, format, out);
    if (*decompose) return cmd_decompose(spec, map_text, translations, format, out);
    if (*verify) return cmd_verify(suite, max_order, group, seed, out);
    if (*exporter) return cmd_export(spec, graph, format, out_path, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ProofStepError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace cca::cli
