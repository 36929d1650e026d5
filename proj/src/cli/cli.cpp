#include "hlink/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hlink/bounds.hpp"
#include "hlink/connectivity.hpp"
#include "hlink/constructions.hpp"
#include "hlink/dot.hpp"
#include "hlink/errors.hpp"
#include "hlink/graph6.hpp"
#include "hlink/instance_json.hpp"
#include "hlink/linkage.hpp"
#include "json.hpp"

namespace hlink::cli {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("error while writing " + path);
}

std::string sidecar_path(const std::string& graph_path) {
  return std::filesystem::path(graph_path).replace_extension(".json").string();
}

/// A graph file plus whatever its metadata sidecar provides.
struct LoadedGraph {
  Graph graph;
  VertexLabels labels;   // empty without a sidecar
  std::optional<Json> metadata;
};

LoadedGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream lines(text);
  std::string line;
  std::string record;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      record = line;
      break;
    }
  }
  if (record.empty()) throw ParseError(0, path + " holds no graph6 record");
  LoadedGraph loaded{decode_graph6(record), {}, std::nullopt};

  const std::string meta_path = sidecar_path(path);
  if (meta_path != path && std::filesystem::exists(meta_path)) {
    Json meta;
    try {
      meta = Json::parse(read_file(meta_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.byte, meta_path + ": " + e.what());
    }
    if (meta.contains("labels") && meta["labels"].is_array()) {
      const auto labels = meta["labels"].get<std::vector<std::string>>();
      if (static_cast<int>(labels.size()) != loaded.graph.vertex_count())
        throw ParseError(0, meta_path + ": label count does not match the graph");
      loaded.labels = labels;
    }
    loaded.metadata = std::move(meta);
  }
  return loaded;
}

std::uint64_t parse_budget(const std::string& text) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(value >= 0) ||
      value != std::floor(value) || value > 1.8e19)
    throw UsageError("--budget expects a non-negative integer, got '" + text + "'");
  return static_cast<std::uint64_t>(value);
}

unsigned resolve_thread_flag(const std::optional<unsigned>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HLINK_THREADS"); env && *env) {
    unsigned value = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw UsageError("HLINK_THREADS must be a non-negative integer");
    return value;
  }
  return 0;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::string> params;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("--param expects key=value, got '" + item + "'");
    if (!params.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
      throw UsageError("parameter '" + item.substr(0, eq) + "' given twice");
  }
  return params;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char c) { return std::isspace(c); }),
               part.end());
    parts.push_back(part);
  }
  return parts;
}

Vertex resolve_vertex(const std::string& token, const LoadedGraph& g) {
  if (!g.labels.empty()) {
    const auto it = std::find(g.labels.begin(), g.labels.end(), token);
    if (it != g.labels.end()) return static_cast<Vertex>(it - g.labels.begin());
  }
  Vertex v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw UsageError("unknown vertex '" + token + "'");
  if (v < 0 || v >= g.graph.vertex_count())
    throw UsageError("vertex index " + token + " out of range");
  return v;
}

Json vertex_list(const std::vector<Vertex>& vs) { return Json(vs); }

Json label_list(const std::vector<Vertex>& vs, const VertexLabels& labels) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(labels.at(v));
  return out;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalars) {
      out << prefix << ":";
      for (const auto& x : j) out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
      out << '\n';
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "text")
    flatten(j, "", out);
  else
    out << j.dump(2) << '\n';
}

/// Flags shared by the reporting subcommands.
struct Common {
  std::string format = "json";
  std::string budget = "10000000";
  std::optional<unsigned> threads;
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

void add_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "Search node budget; 0 means unbounded")
      ->capture_default_str();
}

void add_threads(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads,
                  "Worker threads; 0 uses every core (falls back to HLINK_THREADS)");
}

int run_construct(const std::string& family, const std::vector<std::string>& raw_params,
                  const std::string& out_path, const Common& c, std::ostream& out) {
  const auto inst = construct_family(family, parse_params(raw_params));
  const std::string g6 = encode_graph6(inst.graph);
  if (!out_path.empty()) {
    if (sidecar_path(out_path) == out_path) throw UsageError("--out must not end in .json");
    write_file(out_path, g6 + "\n");
    write_file(sidecar_path(out_path), instance_metadata(inst).dump(2) + "\n");
  }
  Json j;
  j["graph6"] = g6;
  const Json meta = instance_metadata(inst);
  for (const auto& [key, value] : meta.items()) j[key] = value;
  emit(out, j, c.format);
  return kOk;
}

int run_verify(const std::string& family, const std::vector<std::string>& raw_params,
               bool timings, const Common& c, std::ostream& out) {
  const auto inst = construct_family(family, parse_params(raw_params));
  const auto report = verify_construction(inst, SearchBudget::from_flag(parse_budget(c.budget)));
  emit(out, to_json(report, timings), c.format);
  if (!report.pass()) return kRefuted;
  return report.witness_verdict == WitnessVerdict::NoLinkage ? kOk : kInconclusive;
}

int run_linkage(const std::string& graph_path, std::string pattern, const std::string& map,
                bool use_witness, const Common& c, std::ostream& out) {
  const auto g = load_graph(graph_path);
  std::vector<std::string> tokens;
  if (use_witness) {
    if (!g.metadata || !g.metadata->contains("witness"))
      throw UsageError("--witness needs a metadata sidecar with a witness entry");
    const Json& w = (*g.metadata)["witness"];
    pattern = w.at("pattern").get<std::string>();
    tokens = w.at("tau_by_label").get<std::vector<std::string>>();
  } else {
    if (pattern.empty() || map.empty()) throw UsageError("linkage needs --pattern and --map, or --witness");
    tokens = split_commas(map);
  }
  const auto h = make_pattern(pattern);
  TerminalInjection tau;
  for (const auto& t : tokens) tau.images.push_back(resolve_vertex(t, g));
  const auto outcome = solve_linkage(g.graph, h, tau, SearchBudget::from_flag(parse_budget(c.budget)));

  Json j;
  j["pattern"] = pattern;
  j["tau"] = vertex_list(tau.images);
  if (!g.labels.empty()) j["tau_by_label"] = label_list(tau.images, g.labels);
  j["verdict"] = to_string(outcome.verdict);
  j["nodes_expanded"] = outcome.nodes_expanded;
  if (outcome.paths) {
    Json paths = Json::array();
    for (const auto& p : outcome.paths->paths) paths.push_back(vertex_list(p));
    j["paths"] = paths;
    if (!g.labels.empty()) {
      Json named = Json::array();
      for (const auto& p : outcome.paths->paths) named.push_back(label_list(p, g.labels));
      j["paths_by_label"] = named;
    }
  } else {
    j["paths"] = nullptr;
  }
  emit(out, j, c.format);
  return outcome.verdict == Verdict::BudgetExceeded ? kInconclusive : kOk;
}

int run_hlinked(const std::string& graph_path, const std::string& pattern, const Common& c,
                std::ostream& out) {
  const auto g = load_graph(graph_path);
  const auto h = make_pattern(pattern);
  const auto r = is_h_linked(g.graph, h, SearchBudget::from_flag(parse_budget(c.budget)),
                             resolve_thread_flag(c.threads));
  Json j;
  j["pattern"] = pattern;
  j["decision"] = to_string(r.decision);
  j["witness"] = r.witness ? vertex_list(r.witness->images) : Json(nullptr);
  if (!g.labels.empty() && r.witness) j["witness_by_label"] = label_list(r.witness->images, g.labels);
  j["injections_checked"] = r.injections_checked;
  j["nodes_expanded"] = r.nodes_expanded;
  emit(out, j, c.format);
  return r.decision == Decision::Unknown ? kInconclusive : kOk;
}

int run_connectivity(const std::string& graph_path, const Common& c, std::ostream& out) {
  const auto g = load_graph(graph_path);
  if (g.graph.vertex_count() == 0) throw UsageError("the graph has no vertices");
  const auto report = vertex_connectivity(g.graph);
  Json j;
  j["n"] = g.graph.vertex_count();
  j["edges"] = g.graph.edge_count();
  j["min_degree"] = report.min_degree;
  j["kappa"] = report.kappa;
  j["witness_cut"] = report.witness_cut ? vertex_list(*report.witness_cut) : Json(nullptr);
  if (!g.labels.empty() && report.witness_cut)
    j["witness_cut_by_label"] = label_list(*report.witness_cut, g.labels);
  emit(out, j, c.format);
  return kOk;
}

int run_bounds(int k, const std::string& pattern, int n, const Common& c, std::ostream& out) {
  const HId id = parse_hid(pattern);
  const auto range = paper_bounds(k, id, n);
  Json j;
  j["k"] = k;
  j["pattern"] = to_string(id);
  j["n"] = n;
  j["available"] = range.has_value();
  if (range) {
    const Json fields = to_json(*range);
    for (const auto& [key, value] : fields.items()) j[key] = value;
  } else {
    j["message"] = "no tabulated bound";
  }
  emit(out, j, c.format);
  return kOk;
}

int run_delta_exact(int k, const std::string& pattern, int n, int max_n, const Common& c,
                    std::ostream& out) {
  const auto h = make_pattern(pattern);
  const auto r = delta_exact(k, h, n, SearchBudget::from_flag(parse_budget(c.budget)),
                             {max_n, resolve_thread_flag(c.threads)});
  Json j;
  j["k"] = k;
  j["pattern"] = pattern;
  j["n"] = n;
  const Json fields = to_json(r);
  for (const auto& [key, value] : fields.items()) j[key] = value;
  emit(out, j, c.format);
  return kOk;
}

int run_export(const std::string& graph_path, const std::string& out_path, std::ostream& out) {
  const auto g = load_graph(graph_path);
  const std::string dot = export_dot(g.graph, g.labels);
  if (out_path.empty())
    out << dot;
  else
    write_file(out_path, dot);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal H-linkage toolkit: constructions, linkage search and degree bounds", "hlink"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hlink 1.0.0");

  Common common;
  std::string family, graph_path, pattern, map, out_path, export_format = "dot";
  std::vector<std::string> params;
  int k = 0, n = 0, max_n = 7;
  bool timings = false, use_witness = false;

  auto* construct = app.add_subcommand("construct", "Build a construction; print graph6 and metadata");
  construct->add_option("--family", family, "Family name")->required()->check(CLI::IsMember(family_names()));
  construct->add_option("--param", params, "Parameter key=value (repeatable)");
  construct->add_option("--out", out_path, "Write PATH (graph6) and its .json metadata sidecar");
  add_format(construct, common);

  auto* verify = app.add_subcommand("verify", "Check a construction's claimed N, degree, connectivity and witness");
  verify->add_option("--family", family, "Family name")->required()->check(CLI::IsMember(family_names()));
  verify->add_option("--param", params, "Parameter key=value (repeatable)");
  verify->add_flag("--with-timings", timings, "Include wall-clock timings in the report");
  add_budget(verify, common);
  add_format(verify, common);

  auto* linkage = app.add_subcommand("linkage", "Search for an H-linkage under a fixed terminal map");
  linkage->add_option("--graph", graph_path, "graph6 file")->required();
  auto* pattern_opt = linkage->add_option("--pattern", pattern, "Pattern expression");
  auto* map_opt = linkage->add_option("--map", map, "Comma-separated terminal images (labels or indices)");
  auto* witness_opt =
      linkage->add_flag("--witness", use_witness, "Take pattern and map from the metadata sidecar");
  witness_opt->excludes(pattern_opt)->excludes(map_opt);
  add_budget(linkage, common);
  add_format(linkage, common);

  auto* hlinked = app.add_subcommand("hlinked", "Decide whether a graph is H-linked");
  hlinked->add_option("--graph", graph_path, "graph6 file")->required();
  hlinked->add_option("--pattern", pattern, "Pattern expression")->required();
  add_budget(hlinked, common);
  add_threads(hlinked, common);
  add_format(hlinked, common);

  auto* connectivity = app.add_subcommand("connectivity", "Minimum degree and vertex connectivity");
  connectivity->add_option("--graph", graph_path, "graph6 file")->required();
  add_format(connectivity, common);

  auto* bounds = app.add_subcommand("bounds", "Tabulated bounds on the minimum degree threshold");
  bounds->add_option("--k", k, "Connectivity k")->required();
  bounds->add_option("--pattern", pattern, "Pattern family, e.g. p4, k2+p3, 3*k2")->required();
  bounds->add_option("--n", n, "Number of vertices N")->required();
  add_format(bounds, common);

  auto* exact = app.add_subcommand("delta-exact", "Exact threshold by enumerating all labeled graphs");
  exact->add_option("--k", k, "Connectivity k")->required();
  exact->add_option("--pattern", pattern, "Pattern expression")->required();
  exact->add_option("--n", n, "Number of vertices")->required();
  exact->add_option("--max-n", max_n, "Enumeration guard")->capture_default_str();
  add_budget(exact, common);
  add_threads(exact, common);
  add_format(exact, common);

  auto* exporter = app.add_subcommand("export", "Convert a graph6 file to DOT");
  exporter->add_option("--graph", graph_path, "graph6 file")->required();
  exporter->add_option("--format", export_format, "Output format")
      ->check(CLI::IsMember({"dot"}))
      ->capture_default_str();
  exporter->add_option("--out", out_path, "Output file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return run_construct(family, params, out_path, common, out);
    if (*verify) return run_verify(family, params, timings, common, out);
    if (*linkage) return run_linkage(graph_path, pattern, map, use_witness, common, out);
    if (*hlinked) return run_hlinked(graph_path, pattern, common, out);
    if (*connectivity) return run_connectivity(graph_path, common, out);
    if (*bounds) return run_bounds(k, pattern, n, common, out);
    if (*exact) return run_delta_exact(k, pattern, n, max_n, common, out);
    if (*exporter) return run_export(graph_path, out_path, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const PartialResultError& e) {
    err << "inconclusive: " << e.what() << " after " << e.graphs_scanned() << " graphs\n";
    return kInconclusive;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hlink::cli
