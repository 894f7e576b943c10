#pragma once

#include <array>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Spin assignment, one entry per edge of the root graph, values +1 / -1.
using SpinVector = std::vector<int>;

// Quadratic form over spins x in {-1,+1}^m with not-all-equal side constraints:
// q is the adjacency matrix of the line graph (symmetric, zero diagonal) and
// each constraint triple {a,b,c} demands |x_a + x_b + x_c| = 1.
struct QcboProblem {
  Matrix q;
  std::vector<std::array<int, 3>> constraints;

  int variables() const { return q.rows; }
};

// q = incidence(g)^T * incidence(g) - 2I, constraints = line-graph triangles.
// Throws std::invalid_argument when g has no edges.
QcboProblem build_qcbo(const Graph& g);

// True when every entry is +1 or -1, the length matches, and every constraint
// triple is not all equal.
bool spins_feasible(const QcboProblem& p, const SpinVector& x);

// x^T q x over all ordered pairs; throws std::invalid_argument on bad input.
long long spin_objective(const QcboProblem& p, const SpinVector& x);

enum class SolveStatus { Feasible, Infeasible, BudgetExceeded };

std::string to_string(SolveStatus s);

struct QcboSolution {
  SolveStatus status = SolveStatus::Infeasible;
  SpinVector spins;             // empty unless Feasible
  long long objective = 0;      // meaningful only when Feasible
  long long nodes_explored = 0; // decision nodes expanded by the search
};

struct SolveOptions {
  bool optimize = false;             // false: first feasible; true: minimize objective
  long long node_budget = 5'000'000; // decision-node cap before BudgetExceeded
};

// Deterministic depth-first search with unit propagation over the constraint
// triples; in optimize mode a branch-and-bound pass proves optimality. A
// blown budget yields BudgetExceeded, except in optimize mode with an
// incumbent already found, which is reported Feasible without an optimality
// claim.
QcboSolution solve_qcbo(const QcboProblem& p, const SolveOptions& opts = {});

// Single-flip descent: repeatedly flips the lowest-index spin whose flip
// strictly lowers the objective while keeping every constraint satisfied,
// until no such flip exists. Requires a feasible input.
SpinVector improve_spins(const QcboProblem& p, const SpinVector& x);

// Equivalent 0/1 form under x = 2y - 1:
//   x^T q x = y^T quadratic y + linear^T y + constant
struct QuboForm {
  Matrix quadratic;              // 4q
  std::vector<long long> linear; // -4 * (q * ones)
  long long constant = 0;        // ones^T q ones
  std::vector<std::array<int, 3>> constraints;
};

QuboForm to_qubo(const QcboProblem& p);

// y^T quadratic y + linear^T y + constant for y in {0,1}^m.
long long qubo_value(const QuboForm& f, const std::vector<int>& y);

// LP-format model of the 0/1 form: quadratic objective in a [ ... ] / 2
// block, each triple as a pair of linear rows 1 <= y_a+y_b+y_c <= 2, and all
// variables declared binary.
std::string export_lp(const QcboProblem& p);

struct LpModel {
  int variables = 0;
  Matrix quadratic;              // assembled symmetric coefficient of y_i y_j
  std::vector<long long> linear;
  long long constant = 0;
  std::vector<std::array<int, 3>> constraints;
};

// Reads the dialect emitted by export_lp; throws std::runtime_error on
// anything it does not recognize.
LpModel parse_lp(const std::string& text);

std::string problem_to_json(const QcboProblem& p);
QcboProblem problem_from_json(const std::string& text);

}  // namespace wordrep
