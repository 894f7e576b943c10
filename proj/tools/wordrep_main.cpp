#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wordrep/catalog.hpp"
#include "wordrep/completion.hpp"
#include "wordrep/edgelist_io.hpp"
#include "wordrep/qcbo.hpp"
#include "wordrep/table.hpp"
#include "wordrep/words.hpp"

namespace {

using wordrep::Graph;

struct GraphSource {
  std::string catalog_name;
  std::vector<int> params;
  std::string file;
  std::string config_path;
  std::string data_dir;
};

void add_source_options(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--catalog", src.catalog_name, "built-in graph name (see the catalog verb)");
  cmd->add_option("--param", src.params, "integer parameters for --catalog");
  cmd->add_option("--file", src.file, "edge list file (\"n m\" header, one \"u v\" per line)");
  cmd->add_option("--config", src.config_path, "JSON file mapping graph names to edge list paths");
  cmd->add_option("--data-dir", src.data_dir, "directory searched for <name>.edges files");
}

std::string default_data_dir() {
  if (const char* env = std::getenv("WORDREP_DATA_DIR")) return env;
  return "data";
}

std::map<std::string, std::string> load_config(const std::string& path) {
  std::map<std::string, std::string> files;
  if (path.empty()) return files;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("Cannot open file: " + path);
  nlohmann::json j;
  in >> j;
  for (const auto& [key, value] : j.items()) files[key] = value.get<std::string>();
  return files;
}

bool is_catalog_name(const std::string& name) {
  for (const auto& entry : wordrep::catalog_entries()) {
    if (entry.name == name) return true;
  }
  return false;
}

// Catalog names win; other names fall back to the config map, then to
// <data-dir>/<name>.edges.
Graph resolve_graph(const GraphSource& src, std::string& display_name) {
  if (!src.file.empty()) {
    display_name = std::filesystem::path(src.file).stem().string();
    return wordrep::load_edge_list(src.file);
  }
  if (src.catalog_name.empty()) {
    throw std::runtime_error("no graph given: use --catalog or --file");
  }
  display_name = src.catalog_name;
  if (!src.params.empty()) {
    display_name += "(";
    for (size_t i = 0; i < src.params.size(); ++i) {
      if (i > 0) display_name += ",";
      display_name += std::to_string(src.params[i]);
    }
    display_name += ")";
  }
  if (is_catalog_name(src.catalog_name)) {
    return wordrep::catalog_build(src.catalog_name, src.params);
  }
  const auto config = load_config(src.config_path);
  if (const auto it = config.find(src.catalog_name); it != config.end()) {
    return wordrep::load_edge_list(it->second);
  }
  const std::string dir = src.data_dir.empty() ? default_data_dir() : src.data_dir;
  const std::string candidate = dir + "/" + src.catalog_name + ".edges";
  if (std::ifstream(candidate).good()) return wordrep::load_edge_list(candidate);
  throw std::runtime_error("unknown graph: " + src.catalog_name);
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) {
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("Cannot open file: " + path);
  out << content;
}

int cmd_run(const GraphSource& src, const wordrep::DecideOptions& opts, bool emit_dot,
            bool emit_lp, const std::string& json_out) {
  std::string name;
  const Graph g = resolve_graph(src, name);
  wordrep::RowRequest req{name, g, wordrep::reference_sto(name)};
  const wordrep::DecisionRow row = wordrep::run_row(req, opts);
  const std::string record = wordrep::decision_to_json(row.decision);
  if (json_out.empty()) {
    std::cout << record << "\n";
  } else {
    write_file(json_out, record + "\n");
    std::cout << name << ": qcbo " << to_string(row.decision.qcbo_status) << ", verified_3sto "
              << (row.verified_3sto ? "yes" : "no") << ", record written to " << json_out << "\n";
  }
  const std::string prefix = sanitize(name);
  if (emit_dot) {
    write_file(prefix + ".dot", wordrep::to_dot(g));
    const Graph lg = wordrep::line_graph(g);
    const auto labels = wordrep::line_graph_labels(g);
    write_file(prefix + "_line.dot", wordrep::to_dot(lg, labels));
    if (!row.decision.spins.empty()) {
      const auto part = wordrep::partial_orientation_from_spins(lg, row.decision.spins);
      write_file(prefix + "_partial.dot", part.orientation.to_dot(labels));
    }
    if (row.decision.orientation.has_value()) {
      write_file(prefix + "_oriented.dot", row.decision.orientation->to_dot(labels));
    }
  }
  if (emit_lp) {
    write_file(prefix + ".lp", wordrep::export_lp(wordrep::build_qcbo(g)));
  }
  return 0;
}

int cmd_table(const GraphSource& src, const wordrep::DecideOptions& opts,
              const std::vector<std::string>& only, const std::string& csv_out,
              const std::string& json_out) {
  const std::string dir = src.data_dir.empty() ? default_data_dir() : src.data_dir;
  std::vector<wordrep::RowRequest> requests = wordrep::default_rows(dir);
  if (!only.empty()) {
    std::vector<wordrep::RowRequest> kept;
    for (auto& req : requests) {
      for (const auto& pat : only) {
        if (req.name == pat || req.name.rfind(pat + "(", 0) == 0) {
          kept.push_back(std::move(req));
          break;
        }
      }
    }
    requests = std::move(kept);
  }
  std::vector<wordrep::DecisionRow> rows;
  rows.reserve(requests.size());
  for (const auto& req : requests) rows.push_back(wordrep::run_row(req, opts));
  std::cout << wordrep::table_text(rows);
  if (!csv_out.empty()) write_file(csv_out, wordrep::table_csv(rows));
  if (!json_out.empty()) write_file(json_out, wordrep::table_json(rows) + "\n");
  return 0;
}

int cmd_verify(const GraphSource& src, const std::string& word_text,
               const std::string& word_file, bool search, int uniform_k, int letter_bound) {
  std::string name;
  const Graph g = resolve_graph(src, name);
  if (search) {
    const auto found = wordrep::search_representant(g, uniform_k, letter_bound);
    if (found.has_value()) {
      std::cout << name << ": found " << uniform_k << "-uniform representant: "
                << wordrep::serialize_word(*found) << "\n";
    } else {
      std::cout << name << ": no " << uniform_k << "-uniform representant\n";
    }
    return 0;
  }
  std::string text = word_text;
  if (!word_file.empty()) {
    std::ifstream in(word_file);
    if (!in) throw std::runtime_error("Cannot open file: " + word_file);
    std::string line, all;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] == '#') continue;
      all += line + " ";
    }
    text = all;
  }
  if (text.empty()) throw std::runtime_error("no word given: use --word or --word-file");
  const wordrep::Word w = wordrep::parse_word(text, g.vertex_count());
  const bool ok = wordrep::word_represents(w, g);
  std::cout << name << ": represents = " << (ok ? "yes" : "no") << "\n";
  if (!ok) {
    const Graph h = wordrep::alternation_graph(w);
    for (const auto& [u, v] : h.edges()) {
      if (!g.has_edge(u, v)) {
        std::cout << "  extra alternation: {" << u << "," << v << "}\n";
      }
    }
    for (const auto& [u, v] : g.edges()) {
      if (!h.has_edge(u, v)) {
        std::cout << "  missing alternation: {" << u << "," << v << "}\n";
      }
    }
  }
  return 0;
}

int cmd_export_lp(const GraphSource& src, const std::string& out_path) {
  std::string name;
  const Graph g = resolve_graph(src, name);
  const std::string text = wordrep::export_lp(wordrep::build_qcbo(g));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
    std::cout << name << ": model written to " << out_path << "\n";
  }
  return 0;
}

int cmd_catalog() {
  for (const auto& entry : wordrep::catalog_entries()) {
    std::cout << entry.name;
    if (!entry.params_doc.empty()) std::cout << " " << entry.params_doc;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-semi-transitive orientation toolkit for line graphs"};
  app.require_subcommand(1);

  wordrep::DecideOptions opts;
  GraphSource src;
  bool emit_dot = false;
  bool emit_lp = false;
  bool optimize = false;
  std::string json_out;
  std::string csv_out;
  std::vector<std::string> only;
  std::string word_text;
  std::string word_file;
  bool search_word = false;
  int uniform_k = 2;
  int letter_bound = 14;
  std::string lp_out;

  const auto add_budget_options = [&opts, &optimize](CLI::App* cmd) {
    cmd->add_option("--solver-budget", opts.solver_budget, "node cap for the spin search");
    cmd->add_option("--search-budget", opts.search_budget, "node cap for the completion search");
    cmd->add_option("--completion-budget", opts.completion_budget,
                    "placement cap for the greedy completion");
    cmd->add_option("--exhaustive-bound", opts.exhaustive_bound,
                    "max line-graph edges for the full orientation search");
    cmd->add_flag("--optimize", optimize, "minimize the objective instead of stopping at feasible");
  };

  CLI::App* run = app.add_subcommand("run", "decide one graph and emit its record");
  add_source_options(run, src);
  add_budget_options(run);
  run->add_flag("--emit-dot", emit_dot, "write graph/line/partial/oriented DOT files");
  run->add_flag("--emit-lp", emit_lp, "write the LP model next to the DOT files");
  run->add_option("--json", json_out, "write the decision record to this file");

  CLI::App* table = app.add_subcommand("table", "run the default graph set and print the table");
  add_source_options(table, src);
  add_budget_options(table);
  table->add_option("--only", only, "keep rows whose name matches (repeatable)");
  table->add_option("--csv", csv_out, "write the table as CSV to this file");
  table->add_option("--json", json_out, "write the table as JSON to this file");

  CLI::App* verify = app.add_subcommand("verify", "check a word against a graph");
  add_source_options(verify, src);
  verify->add_option("--word", word_text, "whitespace-separated letters over vertex ids");
  verify->add_option("--word-file", word_file, "file holding the word ('#' comments allowed)");
  verify->add_flag("--search-representant", search_word,
                   "search for a uniform representant instead of checking a word");
  verify->add_option("--uniform-k", uniform_k, "occurrences per letter for the search");
  verify->add_option("--letter-bound", letter_bound, "max total letters for the search");

  CLI::App* export_lp = app.add_subcommand("export-lp", "print or write the LP model");
  add_source_options(export_lp, src);
  export_lp->add_option("--out", lp_out, "write the model to this file instead of stdout");

  CLI::App* catalog = app.add_subcommand("catalog", "list built-in graph constructors");

  CLI11_PARSE(app, argc, argv);
  opts.optimize = optimize;

  try {
    if (run->parsed()) return cmd_run(src, opts, emit_dot, emit_lp, json_out);
    if (table->parsed()) return cmd_table(src, opts, only, csv_out, json_out);
    if (verify->parsed()) {
      return cmd_verify(src, word_text, word_file, search_word, uniform_k, letter_bound);
    }
    if (export_lp->parsed()) return cmd_export_lp(src, lp_out);
    if (catalog->parsed()) return cmd_catalog();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
