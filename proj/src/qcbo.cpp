#include "wordrep/qcbo.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wordrep {

namespace {

void require_spins(const QcboProblem& p, const SpinVector& x, const char* who) {
  if (static_cast<int>(x.size()) != p.variables()) {
    throw std::invalid_argument(std::string(who) + ": spin vector length mismatch");
  }
  for (int s : x) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument(std::string(who) + ": spins must be +1 or -1");
    }
  }
}

// Depth-first search over spin assignments in ascending variable order, +1
// branch first, with unit propagation on the not-all-equal triples: two equal
// fixed spins in a triple force the third to the opposite sign. In optimize
// mode the search keeps going past the first leaf and prunes on the bound
// partial + pending_min >= best, where pending_min charges every pair with an
// unassigned endpoint its cheapest possible contribution -2|q_ij|.
struct SpinSearch {
  const QcboProblem& p;
  const SolveOptions& opts;
  int m;
  std::vector<std::vector<std::pair<int, int>>> nbr;  // var -> (other var, q entry)
  std::vector<std::vector<int>> var_cons;             // var -> constraint indices
  std::vector<int> val;                               // 0 unassigned, else +1 / -1
  std::vector<int> trail;
  long long nodes = 0;
  long long partial = 0;
  long long pending_min = 0;
  long long best_obj = 0;
  SpinVector best;
  bool found = false;
  bool out_of_budget = false;

  SpinSearch(const QcboProblem& prob, const SolveOptions& options)
      : p(prob), opts(options), m(prob.variables()) {
    nbr.assign(static_cast<size_t>(m), {});
    var_cons.assign(static_cast<size_t>(m), {});
    val.assign(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const int q = p.q.at(i, j);
        if (q != 0) nbr[static_cast<size_t>(i)].push_back({j, q});
      }
    }
    for (int c = 0; c < static_cast<int>(p.constraints.size()); ++c) {
      for (int v : p.constraints[static_cast<size_t>(c)]) {
        var_cons[static_cast<size_t>(v)].push_back(c);
      }
    }
    for (int i = 0; i < m; ++i) {
      for (auto [j, q] : nbr[static_cast<size_t>(i)]) {
        if (j > i) pending_min -= 2 * std::abs(static_cast<long long>(q));
      }
    }
  }

  void place(int v, int s) {
    val[static_cast<size_t>(v)] = s;
    trail.push_back(v);
    for (auto [u, q] : nbr[static_cast<size_t>(v)]) {
      if (val[static_cast<size_t>(u)] != 0) {
        partial += 2ll * q * s * val[static_cast<size_t>(u)];
        pending_min += 2 * std::abs(static_cast<long long>(q));
      }
    }
  }

  void unwind(size_t mark) {
    while (trail.size() > mark) {
      const int v = trail.back();
      trail.pop_back();
      const int s = val[static_cast<size_t>(v)];
      val[static_cast<size_t>(v)] = 0;
      for (auto [u, q] : nbr[static_cast<size_t>(v)]) {
        if (val[static_cast<size_t>(u)] != 0) {
          partial -= 2ll * q * s * val[static_cast<size_t>(u)];
          pending_min -= 2 * std::abs(static_cast<long long>(q));
        }
      }
    }
  }

  // Assign v = s, then fix every spin the triples force. False on conflict.
  bool assign(int v, int s) {
    std::vector<std::pair<int, int>> queue = {{v, s}};
    while (!queue.empty()) {
      auto [w, t] = queue.back();
      queue.pop_back();
      if (val[static_cast<size_t>(w)] != 0) {
        if (val[static_cast<size_t>(w)] != t) return false;
        continue;
      }
      place(w, t);
      for (int c : var_cons[static_cast<size_t>(w)]) {
        const auto& tri = p.constraints[static_cast<size_t>(c)];
        int unset = -1, sum = 0, count = 0;
        for (int u : tri) {
          if (val[static_cast<size_t>(u)] == 0) {
            unset = u;
          } else {
            sum += val[static_cast<size_t>(u)];
            ++count;
          }
        }
        if (count == 3 && std::abs(sum) == 3) return false;
        if (count == 2 && std::abs(sum) == 2) queue.push_back({unset, -sum / 2});
      }
    }
    return true;
  }

  // Returns true when the whole search should stop.
  bool dfs() {
    int v = -1;
    for (int i = 0; i < m; ++i) {
      if (val[static_cast<size_t>(i)] == 0) {
        v = i;
        break;
      }
    }
    if (v < 0) {
      if (!found || partial < best_obj) {
        found = true;
        best_obj = partial;
        best = val;
      }
      return !opts.optimize;
    }
    for (int s : {1, -1}) {
      if (++nodes > opts.node_budget) {
        out_of_budget = true;
        return true;
      }
      const size_t mark = trail.size();
      if (assign(v, s)) {
        const bool pruned = opts.optimize && found && partial + pending_min >= best_obj;
        if (!pruned && dfs()) return true;
      }
      unwind(mark);
    }
    return false;
  }
};

std::string lp_number(long long value) { return std::to_string(value); }

void lp_append_term(std::ostringstream& out, bool& first, long long coef,
                    const std::string& body) {
  if (first) {
    if (coef < 0) out << "- ";
    first = false;
  } else {
    out << (coef < 0 ? " - " : " + ");
  }
  out << lp_number(std::abs(coef)) << " " << body;
}

struct LpTokens {
  std::vector<std::string> toks;
  size_t pos = 0;

  bool done() const { return pos >= toks.size(); }
  const std::string& peek() const {
    if (done()) throw std::runtime_error("parse_lp: unexpected end of input");
    return toks[pos];
  }
  std::string next() {
    std::string t = peek();
    ++pos;
    return t;
  }
  void expect(const std::string& want) {
    std::string t = next();
    if (t != want) {
      throw std::runtime_error("parse_lp: expected '" + want + "', got '" + t + "'");
    }
  }
};

LpTokens lp_tokenize(const std::string& text) {
  LpTokens tk;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] == '\\') continue;
    std::istringstream words(line);
    std::string w;
    while (words >> w) tk.toks.push_back(w);
  }
  return tk;
}

bool lp_is_number(const std::string& t) {
  if (t.empty()) return false;
  size_t i = t[0] == '-' ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  }
  return true;
}

int lp_var_index(const std::string& t, int limit) {
  if (t.size() < 2 || t[0] != 'y' || !lp_is_number(t.substr(1))) {
    throw std::runtime_error("parse_lp: expected variable, got '" + t + "'");
  }
  const long long idx = std::stoll(t.substr(1));
  if (idx < 0 || (limit >= 0 && idx >= limit)) {
    throw std::runtime_error("parse_lp: variable out of range: " + t);
  }
  return static_cast<int>(idx);
}

}  // namespace

QcboProblem build_qcbo(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("build_qcbo: graph has no edges");
  }
  QcboProblem p;
  p.q = edge_adjacency(g);
  p.constraints = triangles(line_graph(g));
  return p;
}

bool spins_feasible(const QcboProblem& p, const SpinVector& x) {
  if (static_cast<int>(x.size()) != p.variables()) return false;
  for (int s : x) {
    if (s != 1 && s != -1) return false;
  }
  for (const auto& tri : p.constraints) {
    const int sum = x[static_cast<size_t>(tri[0])] + x[static_cast<size_t>(tri[1])] +
                    x[static_cast<size_t>(tri[2])];
    if (std::abs(sum) != 1) return false;
  }
  return true;
}

long long spin_objective(const QcboProblem& p, const SpinVector& x) {
  require_spins(p, x, "spin_objective");
  long long total = 0;
  for (int i = 0; i < p.q.rows; ++i) {
    for (int j = 0; j < p.q.cols; ++j) {
      total += static_cast<long long>(p.q.at(i, j)) * x[static_cast<size_t>(i)] *
               x[static_cast<size_t>(j)];
    }
  }
  return total;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Feasible: return "Feasible";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "";
}

QcboSolution solve_qcbo(const QcboProblem& p, const SolveOptions& opts) {
  if (p.q.rows != p.q.cols) throw std::invalid_argument("solve_qcbo: q must be square");
  for (const auto& tri : p.constraints) {
    for (int v : tri) {
      if (v < 0 || v >= p.variables()) {
        throw std::invalid_argument("solve_qcbo: constraint index out of range");
      }
    }
  }
  SpinSearch search(p, opts);
  search.dfs();
  QcboSolution sol;
  sol.nodes_explored = search.nodes;
  if (search.out_of_budget && !(opts.optimize && search.found)) {
    // In optimize mode a feasible incumbent survives a blown budget; it is
    // reported as Feasible without an optimality claim.
    sol.status = SolveStatus::BudgetExceeded;
    return sol;
  }
  if (!search.found) {
    sol.status = SolveStatus::Infeasible;
    return sol;
  }
  sol.status = SolveStatus::Feasible;
  sol.spins = search.best;
  sol.objective = search.best_obj;
  return sol;
}

SpinVector improve_spins(const QcboProblem& p, const SpinVector& x) {
  require_spins(p, x, "improve_spins");
  if (!spins_feasible(p, x)) {
    throw std::invalid_argument("improve_spins: input spins violate a constraint");
  }
  const int m = p.variables();
  std::vector<std::vector<int>> var_cons(static_cast<size_t>(m));
  for (int c = 0; c < static_cast<int>(p.constraints.size()); ++c) {
    for (int v : p.constraints[static_cast<size_t>(c)]) {
      var_cons[static_cast<size_t>(v)].push_back(c);
    }
  }
  SpinVector cur = x;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < m; ++i) {
      long long row = 0;
      for (int j = 0; j < m; ++j) {
        row += static_cast<long long>(p.q.at(i, j)) * cur[static_cast<size_t>(j)];
      }
      const long long delta = -4ll * cur[static_cast<size_t>(i)] * row;
      if (delta >= 0) continue;
      bool ok = true;
      cur[static_cast<size_t>(i)] = -cur[static_cast<size_t>(i)];
      for (int c : var_cons[static_cast<size_t>(i)]) {
        const auto& tri = p.constraints[static_cast<size_t>(c)];
        const int sum = cur[static_cast<size_t>(tri[0])] + cur[static_cast<size_t>(tri[1])] +
                        cur[static_cast<size_t>(tri[2])];
        if (std::abs(sum) != 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        changed = true;
      } else {
        cur[static_cast<size_t>(i)] = -cur[static_cast<size_t>(i)];
      }
    }
  }
  return cur;
}

QuboForm to_qubo(const QcboProblem& p) {
  const int m = p.variables();
  QuboForm f;
  f.quadratic = Matrix(m, m);
  f.linear.assign(static_cast<size_t>(m), 0);
  f.constraints = p.constraints;
  for (int i = 0; i < m; ++i) {
    long long row = 0;
    for (int j = 0; j < m; ++j) {
      const int q = p.q.at(i, j);
      f.quadratic.at(i, j) = 4 * q;
      row += q;
      f.constant += q;
    }
    f.linear[static_cast<size_t>(i)] = -4 * row;
  }
  return f;
}

long long qubo_value(const QuboForm& f, const std::vector<int>& y) {
  if (static_cast<int>(y.size()) != f.quadratic.rows) {
    throw std::invalid_argument("qubo_value: assignment length mismatch");
  }
  for (int b : y) {
    if (b != 0 && b != 1) throw std::invalid_argument("qubo_value: entries must be 0 or 1");
  }
  long long total = f.constant;
  for (int i = 0; i < f.quadratic.rows; ++i) {
    if (y[static_cast<size_t>(i)] == 0) continue;
    total += f.linear[static_cast<size_t>(i)];
    for (int j = 0; j < f.quadratic.cols; ++j) {
      if (y[static_cast<size_t>(j)] == 1) total += f.quadratic.at(i, j);
    }
  }
  return total;
}

std::string export_lp(const QcboProblem& p) {
  const int m = p.variables();
  const QuboForm f = to_qubo(p);
  std::ostringstream out;
  out << "\\ 0/1 model of the spin problem under x = 2y - 1\n";
  out << "\\ variables: " << m << "  triples: " << p.constraints.size() << "\n";
  out << "Minimize\n obj: ";
  bool first = true;
  bool any_quadratic = false;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (p.q.at(i, j) != 0) any_quadratic = true;
    }
  }
  if (any_quadratic) {
    out << "[ ";
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const int q = p.q.at(i, j);
        if (q == 0) continue;
        // bracket contents are halved, so 16q yields the 8q y_i y_j term
        lp_append_term(out, first, 16ll * q, "y" + std::to_string(i) + " * y" + std::to_string(j));
      }
    }
    out << " ] / 2";
    first = false;
  }
  for (int i = 0; i < m; ++i) {
    if (f.linear[static_cast<size_t>(i)] != 0) {
      lp_append_term(out, first, f.linear[static_cast<size_t>(i)], "y" + std::to_string(i));
    }
  }
  if (f.constant != 0) {
    if (first) {
      out << (f.constant < 0 ? "- " : "") << lp_number(std::abs(f.constant));
    } else {
      out << (f.constant < 0 ? " - " : " + ") << lp_number(std::abs(f.constant));
    }
    first = false;
  }
  if (first) out << "0 y0";
  out << "\nSubject To\n";
  for (size_t t = 0; t < p.constraints.size(); ++t) {
    const auto& tri = p.constraints[t];
    const std::string row = "y" + std::to_string(tri[0]) + " + y" + std::to_string(tri[1]) +
                            " + y" + std::to_string(tri[2]);
    out << " nae" << t << "_lo: " << row << " >= 1\n";
    out << " nae" << t << "_hi: " << row << " <= 2\n";
  }
  out << "Binaries\n";
  for (int i = 0; i < m; ++i) {
    out << " y" << i;
    if (i % 10 == 9 || i == m - 1) out << "\n";
  }
  out << "End\n";
  return out.str();
}

LpModel parse_lp(const std::string& text) {
  LpTokens tk = lp_tokenize(text);
  tk.expect("Minimize");
  tk.expect("obj:");

  struct Term {
    long long coef;
    int i;
    int j;  // -1 for linear, -2 for constant
  };
  std::vector<Term> terms;
  bool in_bracket = false;
  long long bracket_divisor = 1;
  std::vector<Term> bracket_terms;

  while (!tk.done() && tk.peek() != "Subject") {
    int sign = 1;
    if (tk.peek() == "+") {
      tk.next();
    } else if (tk.peek() == "-") {
      sign = -1;
      tk.next();
    }
    if (tk.peek() == "[") {
      if (in_bracket || !bracket_terms.empty()) throw std::runtime_error("parse_lp: stray '['");
      if (sign < 0) throw std::runtime_error("parse_lp: negated bracket unsupported");
      tk.next();
      in_bracket = true;
      continue;
    }
    if (tk.peek() == "]") {
      if (!in_bracket) throw std::runtime_error("parse_lp: stray ']'");
      tk.next();
      tk.expect("/");
      std::string d = tk.next();
      if (!lp_is_number(d)) throw std::runtime_error("parse_lp: bad bracket divisor");
      bracket_divisor = std::stoll(d);
      in_bracket = false;
      continue;
    }
    std::string num = tk.next();
    if (!lp_is_number(num)) throw std::runtime_error("parse_lp: expected coefficient, got '" + num + "'");
    long long coef = sign * std::stoll(num);
    if (tk.done() || tk.peek() == "Subject" || tk.peek() == "+" || tk.peek() == "-" ||
        tk.peek() == "]") {
      terms.push_back({coef, -1, -2});  // bare constant
      continue;
    }
    const int a = lp_var_index(tk.next(), -1);
    if (!tk.done() && tk.peek() == "*") {
      tk.next();
      const int b = lp_var_index(tk.next(), -1);
      if (a == b) throw std::runtime_error("parse_lp: squared variables unsupported");
      (in_bracket ? bracket_terms : terms).push_back({coef, a, b});
    } else {
      if (in_bracket) throw std::runtime_error("parse_lp: linear term inside bracket");
      terms.push_back({coef, a, -1});
    }
  }
  if (in_bracket) throw std::runtime_error("parse_lp: unterminated bracket");

  tk.expect("Subject");
  tk.expect("To");
  std::vector<std::array<int, 3>> constraints;
  while (!tk.done() && tk.peek() != "Binaries") {
    auto read_row = [&](const char* rel, int bound) {
      std::string name = tk.next();
      if (name.empty() || name.back() != ':') {
        throw std::runtime_error("parse_lp: expected row name, got '" + name + "'");
      }
      std::array<int, 3> tri{};
      tri[0] = lp_var_index(tk.next(), -1);
      tk.expect("+");
      tri[1] = lp_var_index(tk.next(), -1);
      tk.expect("+");
      tri[2] = lp_var_index(tk.next(), -1);
      tk.expect(rel);
      tk.expect(std::to_string(bound));
      return tri;
    };
    const auto lo = read_row(">=", 1);
    const auto hi = read_row("<=", 2);
    if (lo != hi) throw std::runtime_error("parse_lp: mismatched constraint row pair");
    constraints.push_back(lo);
  }
  tk.expect("Binaries");
  std::vector<std::string> names;
  while (!tk.done() && tk.peek() != "End") names.push_back(tk.next());
  tk.expect("End");

  LpModel model;
  model.variables = static_cast<int>(names.size());
  for (int i = 0; i < model.variables; ++i) {
    if (names[static_cast<size_t>(i)] != "y" + std::to_string(i)) {
      throw std::runtime_error("parse_lp: binaries must be y0..y" +
                               std::to_string(model.variables - 1) + " in order");
    }
  }
  model.quadratic = Matrix(model.variables, model.variables);
  model.linear.assign(static_cast<size_t>(model.variables), 0);
  model.constraints = constraints;
  for (const auto& t : bracket_terms) {
    if (t.i >= model.variables || t.j >= model.variables) {
      throw std::runtime_error("parse_lp: objective references undeclared variable");
    }
    // coef/divisor is the full y_i y_j coefficient, split across (i,j), (j,i)
    const long long full = t.coef / bracket_divisor;
    if (full * bracket_divisor != t.coef || full % 2 != 0) {
      throw std::runtime_error("parse_lp: quadratic coefficient does not split evenly");
    }
    model.quadratic.at(t.i, t.j) += static_cast<int>(full / 2);
    model.quadratic.at(t.j, t.i) += static_cast<int>(full / 2);
  }
  for (const auto& t : terms) {
    if (t.j == -2) {
      model.constant += t.coef;
    } else if (t.j == -1) {
      if (t.i >= model.variables) {
        throw std::runtime_error("parse_lp: objective references undeclared variable");
      }
      model.linear[static_cast<size_t>(t.i)] += t.coef;
    } else {
      throw std::runtime_error("parse_lp: quadratic term outside bracket");
    }
  }
  for (const auto& tri : model.constraints) {
    for (int v : tri) {
      if (v >= model.variables) {
        throw std::runtime_error("parse_lp: constraint references undeclared variable");
      }
    }
  }
  return model;
}

std::string problem_to_json(const QcboProblem& p) {
  nlohmann::ordered_json j;
  j["variables"] = p.variables();
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < p.q.rows; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < p.q.cols; ++c) row.push_back(p.q.at(i, c));
    rows.push_back(std::move(row));
  }
  j["q"] = std::move(rows);
  auto cons = nlohmann::ordered_json::array();
  for (const auto& tri : p.constraints) cons.push_back({tri[0], tri[1], tri[2]});
  j["constraints"] = std::move(cons);
  return j.dump(2);
}

QcboProblem problem_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int m = j.at("variables").get<int>();
  if (m < 0) throw std::runtime_error("problem json: negative variable count");
  QcboProblem p;
  p.q = Matrix(m, m);
  const auto& rows = j.at("q");
  if (static_cast<int>(rows.size()) != m) {
    throw std::runtime_error("problem json: q must have one row per variable");
  }
  for (int i = 0; i < m; ++i) {
    const auto& row = rows.at(static_cast<size_t>(i));
    if (static_cast<int>(row.size()) != m) {
      throw std::runtime_error("problem json: q rows must be square");
    }
    for (int c = 0; c < m; ++c) p.q.at(i, c) = row.at(static_cast<size_t>(c)).get<int>();
  }
  for (int i = 0; i < m; ++i) {
    if (p.q.at(i, i) != 0) throw std::runtime_error("problem json: q diagonal must be zero");
    for (int c = 0; c < m; ++c) {
      if (p.q.at(i, c) != p.q.at(c, i)) {
        throw std::runtime_error("problem json: q must be symmetric");
      }
    }
  }
  for (const auto& tri : j.at("constraints")) {
    if (tri.size() != 3) throw std::runtime_error("problem json: constraints must be triples");
    std::array<int, 3> t{tri.at(0).get<int>(), tri.at(1).get<int>(), tri.at(2).get<int>()};
    for (int v : t) {
      if (v < 0 || v >= m) throw std::runtime_error("problem json: constraint index out of range");
    }
    if (!(t[0] < t[1] && t[1] < t[2])) {
      throw std::runtime_error("problem json: constraint triples must be strictly increasing");
    }
    p.constraints.push_back(t);
  }
  return p;
}

}  // namespace wordrep
