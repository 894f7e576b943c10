#pragma once

#include <string>
#include <vector>

#include "wordrep/completion.hpp"
#include "wordrep/stats.hpp"

namespace wordrep {

// Reference verdict for semi-transitivity of the root graph itself, carried
// alongside the computed columns; Unknown where no verdict is recorded.
enum class StoExpected { Yes, No, Unknown };

std::string to_string(StoExpected s);

// One summary row: graph features plus the pipeline outcome on its line
// graph. qcbo_solvable is status == Feasible of the stored decision.
struct DecisionRow {
  std::string name;
  int nodes = 0;
  int edges = 0;
  std::string chromatic_info;
  int max_degree = 0;
  StoExpected sto_expected = StoExpected::Unknown;
  bool qcbo_solvable = false;
  bool verified_3sto = false;
  long long elapsed_ms = 0;
  Decision decision;
};

struct RowRequest {
  std::string name;
  Graph graph;
  StoExpected sto_expected = StoExpected::Unknown;
};

// Verdict for the named default rows; Unknown for anything else.
StoExpected reference_sto(const std::string& name);

// Display-ordered catalog rows: path(6), cycle(6), wheel(5), wheel(4),
// wheel(6), hex_lattice(2,3), tutte, goldner_harary, herschel,
// medial_herschel (only when data_dir holds its edge list), petersen,
// complete(3) through complete(7).
std::vector<RowRequest> default_rows(const std::string& data_dir);

DecisionRow run_row(const RowRequest& req, const DecideOptions& opts = {});

// Emitters are deterministic byte for byte, except the elapsed_ms field.
std::string table_text(const std::vector<DecisionRow>& rows);
std::string table_csv(const std::vector<DecisionRow>& rows);
std::string table_json(const std::vector<DecisionRow>& rows);

}  // namespace wordrep
