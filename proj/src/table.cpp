#include "wordrep/table.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wordrep/catalog.hpp"
#include "wordrep/edgelist_io.hpp"

namespace wordrep {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_string(StoExpected s) {
  switch (s) {
    case StoExpected::Yes: return "yes";
    case StoExpected::No: return "no";
    case StoExpected::Unknown: return "unknown";
  }
  return "";
}

StoExpected reference_sto(const std::string& name) {
  if (name == "wheel(5)") return StoExpected::No;
  if (name == "goldner_harary") return StoExpected::Unknown;
  static const char* known_yes[] = {
      "path(6)", "cycle(6)",   "wheel(4)",       "wheel(6)",    "hex_lattice(2,3)",
      "tutte",   "herschel",   "medial_herschel", "petersen",   "complete(3)",
      "complete(4)", "complete(5)", "complete(6)", "complete(7)",
  };
  for (const char* n : known_yes) {
    if (name == n) return StoExpected::Yes;
  }
  return StoExpected::Unknown;
}

std::vector<RowRequest> default_rows(const std::string& data_dir) {
  std::vector<RowRequest> rows;
  const auto add = [&rows](const std::string& name, Graph g) {
    rows.push_back(RowRequest{name, std::move(g), reference_sto(name)});
  };
  const int six[] = {6};
  const int five[] = {5};
  const int four[] = {4};
  const int hex[] = {2, 3};
  add("path(6)", catalog_build("path", six));
  add("cycle(6)", catalog_build("cycle", six));
  add("wheel(5)", catalog_build("wheel", five));
  add("wheel(4)", catalog_build("wheel", four));
  add("wheel(6)", catalog_build("wheel", six));
  add("hex_lattice(2,3)", catalog_build("hex_lattice", hex));
  add("tutte", catalog_build("tutte", {}));
  add("goldner_harary", catalog_build("goldner_harary", {}));
  add("herschel", catalog_build("herschel", {}));
  const std::string medial_path = data_dir + "/medial_herschel.edges";
  if (std::ifstream(medial_path).good()) {
    add("medial_herschel", load_edge_list(medial_path));
  }
  add("petersen", catalog_build("petersen", {}));
  for (int n = 3; n <= 7; ++n) {
    const int params[] = {n};
    add("complete(" + std::to_string(n) + ")", catalog_build("complete", params));
  }
  return rows;
}

DecisionRow run_row(const RowRequest& req, const DecideOptions& opts) {
  DecisionRow row;
  row.name = req.name;
  row.sto_expected = req.sto_expected;
  const GraphStats stats = graph_stats(req.graph);
  row.nodes = stats.nodes;
  row.edges = stats.edges;
  row.chromatic_info = stats.chromatic_info();
  row.max_degree = stats.max_degree;
  row.decision = decide_line_graph_3sto(req.graph, opts);
  row.decision.graph_name = req.name;
  row.qcbo_solvable = row.decision.qcbo_status == SolveStatus::Feasible;
  row.verified_3sto = row.decision.verified_3sto;
  row.elapsed_ms = row.decision.elapsed_ms;
  return row;
}

std::string table_text(const std::vector<DecisionRow>& rows) {
  const std::vector<std::string> header = {"name",     "nodes", "edges", "chromatic",
                                           "max_deg",  "sto",   "qcbo",  "verified_3sto",
                                           "elapsed_ms"};
  std::vector<std::vector<std::string>> cells;
  cells.push_back(header);
  for (const auto& r : rows) {
    cells.push_back({r.name, std::to_string(r.nodes), std::to_string(r.edges),
                     r.chromatic_info, std::to_string(r.max_degree), to_string(r.sto_expected),
                     yes_no(r.qcbo_solvable), yes_no(r.verified_3sto),
                     std::to_string(r.elapsed_ms)});
  }
  std::vector<size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    for (size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::string table_csv(const std::vector<DecisionRow>& rows) {
  std::ostringstream out;
  out << "name,nodes,edges,chromatic,max_degree,sto_expected,qcbo_solvable,"
         "verified_3sto,elapsed_ms\n";
  for (const auto& r : rows) {
    out << csv_field(r.name) << ',' << r.nodes << ',' << r.edges << ','
        << csv_field(r.chromatic_info) << ',' << r.max_degree << ','
        << to_string(r.sto_expected) << ',' << yes_no(r.qcbo_solvable) << ','
        << yes_no(r.verified_3sto) << ',' << r.elapsed_ms << "\n";
  }
  return out.str();
}

std::string table_json(const std::vector<DecisionRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["nodes"] = r.nodes;
    j["edges"] = r.edges;
    j["chromatic"] = r.chromatic_info;
    j["max_degree"] = r.max_degree;
    j["sto_expected"] = to_string(r.sto_expected);
    j["qcbo_solvable"] = r.qcbo_solvable;
    j["qcbo_status"] = to_string(r.decision.qcbo_status);
    j["verified_3sto"] = r.verified_3sto;
    j["verified_sto"] = r.decision.verified_sto;
    j["certification"] = r.decision.certification;
    j["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace wordrep
