#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdnet/pdnet.hpp"

using nlohmann::json;
using namespace pdnet;

namespace {

enum Exit : int {
  ok = 0,
  input_error = 2,
  no_ldu = 3,
  size_guard = 4,
  inconsistent = 5,
};

// Failure that maps straight to an exit code.
struct CliFailure {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw CliFailure{input_error, "cannot read '" + path + "'"};
  buf << in.rdbuf();
  return buf.str();
}

Matrix read_matrix(const std::string& path) {
  const Matrix m = io::matrix_from_json(read_input(path));
  if (!m.is_square()) throw CliFailure{input_error, "expected a square matrix"};
  return m;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json values_json(const std::vector<GaussianRational>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(z.to_string());
  return out;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw CliFailure{inconsistent, "self-check failed: " + what};
}

// factor -------------------------------------------------------------------

int cmd_factor(const std::string& input, bool ldu_form) {
  const Matrix m = read_matrix(input);
  FactorSequence fs;
  try {
    fs = ldu_form ? factorize_ldu_form(m) : factorize_general(m);
  } catch (const NoLduError& e) {
    throw CliFailure{no_ldu, std::string(e.what()) + " (k = " + std::to_string(e.k()) + ")"};
  }
  require(factors_product(fs, m.rows()) == m, "factor product differs from the input");
  std::cout << io::factors_to_json(fs);
  return ok;
}

// network ------------------------------------------------------------------

int cmd_network(const std::string& input, bool dot) {
  const Matrix m = read_matrix(input);
  FactorSequence fs;
  try {
    fs = factorize_ldu_form(m);
  } catch (const NoLduError&) {
    fs = factorize_general(m);
  }
  const PlanarNetwork net = network_from_factors(fs, m.rows());
  require(weight_matrix(net) == m, "network weight matrix differs from the input");
  std::cout << (dot ? network_to_dot(net) : io::network_to_json(net));
  return ok;
}

// minors -------------------------------------------------------------------

constexpr std::size_t kAllMinorsLimit = 5;

int cmd_minors(const std::string& input, bool all, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
  const Matrix m = read_matrix(input);
  const std::size_t n = m.rows();
  if (!rows.empty() || !cols.empty()) {
    json out;
    out["minors"][index_label(rows, cols)] = minor(m, rows, cols).to_string();
    emit(out);
    return ok;
  }
  if (all) {
    if (n > kAllMinorsLimit) {
      throw CliFailure{size_guard, "--all is limited to n <= " + std::to_string(kAllMinorsLimit)};
    }
    json out;
    out["minors"] = json::object();
    for (std::size_t k = 1; k <= n; ++k)
      for (const IndexSet& r : subsets_of_size(n, k))
        for (const IndexSet& c : subsets_of_size(n, k)) out["minors"][index_label(r, c)] = minor(m, r, c).to_string();
    emit(out);
    return ok;
  }
  emit(json{{"leading_principal_minors", values_json(leading_principal_minors(m))}});
  return ok;
}

// pd-check -----------------------------------------------------------------

json verdict_json(const char* method, const Verdict& v) {
  json out{{"method", method}, {"is_pd", v.is_pd}, {"reason", reason_name(v.reason)}};
  out["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  return out;
}

int cmd_pd_check(const std::string& input, const std::string& method, std::size_t depth) {
  const Matrix m = read_matrix(input);
  const bool all = method == "all";
  json verdicts = json::array();
  std::set<bool> answers;

  if (all || method == "oracle") {
    const OracleVerdict v = pd_oracle(m);
    json j = verdict_json("oracle", v);
    j["evidence"] = {{"leading_minors", values_json(v.leading_minors)}};
    verdicts.push_back(std::move(j));
    answers.insert(v.is_pd);
  }
  if (all || method == "network") {
    NetworkVerdict v;
    try {
      v = pd_check_network(m);
    } catch (const std::logic_error& e) {
      throw CliFailure{inconsistent, e.what()};
    }
    json j = verdict_json("network", v);
    j["evidence"] = {{"line_weights", v.line_weights ? values_json(*v.line_weights) : json(nullptr)}};
    verdicts.push_back(std::move(j));
    answers.insert(v.is_pd);
  }
  if (all || method == "cluster") {
    const ClusterVerdict v = pd_check_cluster(m, depth);
    json j = verdict_json("cluster", v);
    j["evidence"] = {{"checked_labels", v.checked_labels},
                     {"checked_values", values_json(v.checked_values)},
                     {"explore_depth", v.explore_depth},
                     {"explored_seeds", v.explored_seeds},
                     {"explored_non_positive", v.explored_non_positive},
                     {"zero_encounters", v.zero_encounters}};
    verdicts.push_back(std::move(j));
    answers.insert(v.is_pd);
  }

  const bool consistent = answers.size() == 1;
  emit(json{{"n", m.rows()}, {"consistent", consistent}, {"is_pd", *answers.begin()}, {"verdicts", verdicts}});
  if (!consistent) {
    std::cerr << "pdnet: methods disagree on positive definiteness\n";
    return inconsistent;
  }
  return ok;
}

// wiring -------------------------------------------------------------------

int cmd_wiring(std::optional<std::size_t> n_flag, const std::string& diagram_path, const std::string& matrix_path,
               bool dot) {
  DoubleWiringDiagram d;
  if (!diagram_path.empty()) {
    d = io::diagram_from_json(read_input(diagram_path));
    if (auto v = validate_diagram(d)) {
      throw CliFailure{input_error, "invalid diagram at crossing " + std::to_string(v->index) + ": " + v->message};
    }
    if (n_flag && *n_flag != d.n) throw CliFailure{input_error, "--n does not match the diagram"};
  } else {
    d = standard_pd_diagram(n_flag.value_or(3));
  }

  const WiringQuiver wq = build_quiver(d);
  if (dot) {
    std::cout << wiring_to_dot(wq);
    return ok;
  }

  std::optional<Matrix> m;
  if (!matrix_path.empty()) {
    m = read_matrix(matrix_path);
    if (m->rows() != d.n) throw CliFailure{input_error, "matrix size does not match the diagram"};
  }
  json chambers_out = json::array();
  for (std::size_t k = 0; k < wq.vertices.size(); ++k) {
    const Chamber& c = wq.vertices[k];
    json j{{"id", "v" + std::to_string(k)}, {"label", c.label()}, {"row", c.row}, {"mutable", c.bounded}};
    if (m) j["value"] = minor(*m, c.blue, c.red).to_string();
    chambers_out.push_back(std::move(j));
  }
  json out{{"diagram", json::parse(io::diagram_to_json(d))}, {"chambers", chambers_out}};
  emit(out);
  return ok;
}

// explore ------------------------------------------------------------------

constexpr std::size_t kTableLimit = 4;

int cmd_explore(const std::string& input, std::size_t depth, bool table, bool subalgebra) {
  const Matrix m = read_matrix(input);
  const std::size_t n = m.rows();
  if (table && n > kTableLimit) {
    throw CliFailure{size_guard, "minor-table checking is limited to n <= " + std::to_string(kTableLimit) +
                                     " (use --no-table)"};
  }
  const Seed start = subalgebra ? pd_subalgebra_seed(m) : wiring_seed(standard_pd_diagram(n), m);
  const ExploreResult r = explore(start, depth);

  std::map<std::string, std::vector<std::string>> minor_labels;
  if (table) {
    for (std::size_t k = 1; k <= n; ++k)
      for (const IndexSet& rows : subsets_of_size(n, k))
        for (const IndexSet& cols : subsets_of_size(n, k))
          minor_labels[minor(m, rows, cols).to_string()].push_back(index_label(rows, cols));
  }

  std::map<std::string, bool> reached;  // value -> seen at a mutable vertex
  std::size_t mutable_slots = 0, positive_slots = 0;
  for (const ExploredSeed& s : r.seeds) {
    for (std::size_t v = 0; v < s.seed.values.size(); ++v) {
      const bool mut = s.seed.quiver.is_mutable(v);
      reached[s.seed.values[v].to_string()] |= mut;
      if (!mut) continue;
      ++mutable_slots;
      if (s.seed.values[v].is_positive_real()) ++positive_slots;
    }
  }

  json values = json::array();
  std::size_t non_minors = 0;
  for (const auto& [value, mut] : reached) {
    json j{{"value", value}, {"mutable", mut}};
    if (table) {
      const auto it = minor_labels.find(value);
      j["is_minor"] = it != minor_labels.end();
      j["minor_labels"] = it != minor_labels.end() ? json(it->second) : json::array();
      if (it == minor_labels.end()) ++non_minors;
    }
    values.push_back(std::move(j));
  }
  json zeros = json::array();
  for (const ZeroEncounter& z : r.zero_encounters) zeros.push_back({{"path", z.path}, {"vertex", z.vertex}});

  json out{{"depth", depth},
           {"start", subalgebra ? "subalgebra" : "wiring"},
           {"reached_seeds", r.seeds.size()},
           {"distinct_values", reached.size()},
           {"values", values},
           {"zero_encounters", zeros},
           {"positivity",
            {{"mutable_values", mutable_slots},
             {"positive", positive_slots},
             {"all_positive", mutable_slots == positive_slots}}}};
  out["table_checked"] = table;
  if (table) out["all_minors"] = non_minors == 0;
  emit(out);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact planar-network and cluster tools for positive definiteness"};
  app.require_subcommand(1);

  std::string input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "matrix JSON file, or - for standard input")->required();
  };

  auto* factor = app.add_subcommand("factor", "factor a matrix into generalized elementary Jacobi matrices");
  add_input(factor);
  bool ldu_form = false;
  factor->add_flag("--ldu-form", ldu_form, "group the factors as descending, diagonal, ascending");

  auto* network = app.add_subcommand("network", "planar network whose weight matrix is the input");
  add_input(network);
  bool net_dot = false, net_json = false;
  auto* dot_flag = network->add_flag("--dot", net_dot, "Graphviz output");
  network->add_flag("--json", net_json, "JSON output (default)")->excludes(dot_flag);

  auto* minors = app.add_subcommand("minors", "exact minors");
  add_input(minors);
  bool all_minors = false, leading = false;
  std::vector<std::size_t> rows, cols;
  auto* all_flag = minors->add_flag("--all", all_minors, "every minor (n <= 5)");
  auto* lead_flag = minors->add_flag("--leading", leading, "leading principal minors (default)");
  auto* i_opt = minors->add_option("-I", rows, "row indices, 1-based");
  auto* j_opt = minors->add_option("-J", cols, "column indices, 1-based");
  i_opt->needs(j_opt);
  j_opt->needs(i_opt);
  all_flag->excludes(lead_flag)->excludes(i_opt);
  lead_flag->excludes(i_opt);

  auto* pd = app.add_subcommand("pd-check", "positive definiteness by leading minors, networks and clusters");
  add_input(pd);
  std::string method = "all";
  std::size_t pd_depth = 2;
  pd->add_option("--method", method, "oracle, network, cluster or all")
      ->check(CLI::IsMember({"oracle", "network", "cluster", "all"}));
  pd->add_option("--depth", pd_depth, "mutation depth explored by the cluster method");

  auto* wiring = app.add_subcommand("wiring", "standard double wiring diagram, its chambers and quiver");
  std::optional<std::size_t> wiring_n;
  std::string diagram_path, matrix_path;
  bool quiver = false, quiver_dot = false;
  wiring->add_option("--n", wiring_n, "matrix size (default 3)")->check(CLI::PositiveNumber);
  wiring->add_option("--diagram", diagram_path, "diagram JSON instead of the standard diagram");
  wiring->add_option("--matrix", matrix_path, "evaluate the chamber minors on this matrix");
  wiring->add_flag("--quiver", quiver, "Graphviz rendering of the quiver");
  wiring->add_flag("--dot", quiver_dot, "same as --quiver");

  auto* expl = app.add_subcommand("explore", "mutate the wiring seed of a matrix");
  add_input(expl);
  std::size_t explore_depth = 2;
  bool no_table = false, subalgebra = false;
  expl->add_option("--depth", explore_depth, "breadth-first mutation depth");
  expl->add_flag("--no-table", no_table, "skip checking values against the minor table");
  expl->add_flag("--subalgebra", subalgebra, "start from the positive-definiteness subalgebra seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }

  try {
    if (factor->parsed()) return cmd_factor(input, ldu_form);
    if (network->parsed()) return cmd_network(input, net_dot);
    if (minors->parsed()) return cmd_minors(input, all_minors, rows, cols);
    if (pd->parsed()) return cmd_pd_check(input, method, pd_depth);
    if (wiring->parsed()) return cmd_wiring(wiring_n, diagram_path, matrix_path, quiver || quiver_dot);
    if (expl->parsed()) return cmd_explore(input, explore_depth, !no_table, subalgebra);
  } catch (const CliFailure& f) {
    std::cerr << "pdnet: " << f.message << '\n';
    return f.code;
  } catch (const pdnet::Error& e) {
    std::cerr << "pdnet: " << e.what() << '\n';
    return input_error;
  } catch (const std::logic_error& e) {
    std::cerr << "pdnet: internal inconsistency: " << e.what() << '\n';
    return inconsistent;
  }
  return input_error;
}
