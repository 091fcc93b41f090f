#include "laga/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "laga/algebra_view.hpp"
#include "laga/b_algebra.hpp"
#include "laga/builders.hpp"
#include "laga/combinatorics.hpp"
#include "laga/error.hpp"
#include "laga/gr_algebra.hpp"
#include "laga/graph_io.hpp"
#include "laga/reconstruct.hpp"

namespace laga::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
std::string list(const std::vector<T>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

std::string vec(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_all(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

json read_json(const std::string& path, std::istream& in) {
  try {
    return json::parse(read_all(path, in));
  } catch (const json::parse_error& e) {
    throw UsageError(path + " is not valid JSON: " + e.what());
  }
}

LayeredGraph load_graph(const std::string& path, std::istream& in) {
  auto j = read_json(path, in);
  try {
    return graph_from_json(j);
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

Field parse_field(const std::string& text) {
  try {
    return Field::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      long value = std::stol(part, &used);
      if (used != part.size() || value < 0) throw std::invalid_argument(part);
      out.push_back(static_cast<std::size_t>(value));
    } catch (const std::logic_error&) {
      throw UsageError("expected comma separated sizes, got " + text);
    }
  }
  if (out.empty()) throw UsageError("expected comma separated sizes, got " + text);
  return out;
}

std::size_t parse_count(const std::string& text) {
  auto v = parse_sizes(text);
  if (v.size() != 1) throw UsageError("expected a single number, got " + text);
  return v[0];
}

void require_level(const LayeredGraph& g, std::size_t n) {
  if (n == 0 || n > g.top_level())
    throw UsageError("level must lie in 1.." + std::to_string(g.top_level()));
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string s;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    s += line + "\n";
  }
  return s;
}

std::string table_text(const std::vector<std::vector<std::size_t>>& table) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"m\\n"};
  for (std::size_t n = 0; n < table.front().size(); ++n) header.push_back(std::to_string(n));
  rows.push_back(header);
  for (std::size_t m = 0; m < table.size(); ++m) {
    std::vector<std::string> row{std::to_string(m)};
    for (auto x : table[m]) row.push_back(std::to_string(x));
    rows.push_back(row);
  }
  return aligned(rows);
}

std::vector<std::size_t> k_profile(const LayeredGraph& g, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.level_size(n); ++v) out.push_back(class_partition(g, n, {{n, v}}).k());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> outdegrees(const LayeredGraph& g, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.level_size(n); ++v) out.push_back(g.out_degree({n, v}));
  std::sort(out.begin(), out.end());
  return out;
}

json graph_summary(const LayeredGraph& g) {
  json j;
  j["levels"] = g.levels();
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["unique_minimal"] = g.flags().unique_minimal;
  j["positive_outdegree"] = g.flags().positive_outdegree;
  auto uniform = is_uniform(g);
  j["uniform"] = uniform.uniform;
  auto nesting = is_non_nesting(g);
  j["non_nesting"] = nesting.non_nesting;
  if (nesting.witness)
    j["nesting_witness"] = {to_string(nesting.witness->first), to_string(nesting.witness->second)};
  j["atomic_lattice"] = is_atomic_lattice(g);
  auto degrees = json::array();
  for (std::size_t n = 1; n <= g.top_level(); ++n) degrees.push_back(outdegrees(g, n));
  j["outdegrees"] = degrees;
  return j;
}

struct Options {
  std::string graph, graph2, output = "", view = "-", reference, family, algebra = "B", max = "3,8",
                     field = "Q", view_field = "F3";
  std::vector<std::string> build_args;
  std::size_t level = 0, n = 0;
  std::uint32_t q = 2;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool json_out = false, dot = false;
};

int cmd_build(const Options& o, std::ostream& out) {
  const auto& a = o.build_args;
  if (a.empty()) throw UsageError("build needs a family: boolean N | subspace Q N | complete s,s,...");
  LayeredGraph g = [&] {
    if (a[0] == "boolean" && a.size() == 2) return build_boolean(parse_count(a[1]));
    if (a[0] == "subspace" && a.size() == 3) {
      auto q = parse_count(a[1]);
      if (!is_prime_number(q)) throw UsageError("q must be prime");
      return build_subspace_lattice(static_cast<std::uint32_t>(q), parse_count(a[2]));
    }
    if (a[0] == "complete" && a.size() == 2) return build_complete_layered(parse_sizes(a[1]));
    throw UsageError("build needs a family: boolean N | subspace Q N | complete s,s,...");
  }();
  write_text(o.output, o.dot ? graph_to_dot(g) : graph_to_json(g).dump(2) + "\n", out);
  return 0;
}

int cmd_info(const Options& o, std::istream& in, std::ostream& out) {
  auto g = load_graph(o.graph, in);
  auto j = graph_summary(g);
  if (o.json_out) {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "level sizes " << list(g.levels()) << "\n";
  out << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << "\n";
  out << "unique minimal " << yes_no(g.flags().unique_minimal) << ", positive out-degree "
      << yes_no(g.flags().positive_outdegree) << "\n";
  out << "uniform " << yes_no(j["uniform"]) << "\n";
  out << "non-nesting " << yes_no(j["non_nesting"]);
  if (j.contains("nesting_witness"))
    out << " (S" << j["nesting_witness"][0].get<std::string>() << " inside S"
        << j["nesting_witness"][1].get<std::string>() << ")";
  out << "\n";
  out << "atomic lattice " << yes_no(j["atomic_lattice"]) << "\n";
  for (std::size_t n = 1; n <= g.top_level(); ++n) out << "out-degrees level " << n << " " << list(outdegrees(g, n)) << "\n";
  return 0;
}

int cmd_hilbert(const Options& o, std::istream& in, std::ostream& out) {
  auto g = load_graph(o.graph, in);
  auto max = parse_sizes(o.max);
  if (max.size() != 2) throw UsageError("--max expects m,n");
  std::vector<std::vector<std::size_t>> table;
  Field field = parse_field(o.field);
  if (o.algebra == "B")
    table = hilbert_table_B(g, max[0], max[1], field);
  else if (o.algebra == "grA")
    table = hilbert_table_grA(g, max[0], max[1]);
  else
    throw UsageError("--algebra is B or grA");
  if (o.json_out) {
    json j{{"algebra", o.algebra}, {"max", max}, {"table", table}};
    if (o.algebra == "B") j["field"] = field.name();
    out << j.dump(2) << "\n";
  } else {
    out << "dim " << (o.algebra == "B" ? "B" : "gr A") << "[m,n]" << (o.algebra == "B" ? " over " + field.name() : "")
        << "\n"
        << table_text(table);
  }
  return 0;
}

int cmd_kappa(const Options& o, std::istream& in, std::ostream& out) {
  auto g = load_graph(o.graph, in);
  require_level(g, o.level);
  Field field = parse_field(o.field);
  auto rows = json::array();
  std::vector<std::vector<std::string>> text{{"vertex", "out-degree", "k", "k touching", "kappa basis"}};
  for (std::size_t v = 0; v < g.level_size(o.level); ++v) {
    VertexId id{o.level, v};
    auto part = class_partition(g, o.level, {id});
    auto kappa = kappa_combinatorial(g, o.level, {id}, field);
    std::string basis;
    for (std::size_t r = 0; r < kappa.dim(); ++r) basis += (r ? " " : "") + vec(kappa.basis().row(r));
    text.push_back({g.label(id), std::to_string(g.out_degree(id)), std::to_string(part.k()),
                    std::to_string(part.k_touching()), basis});
    rows.push_back({{"vertex", g.label(id)},
                    {"out_degree", g.out_degree(id)},
                    {"k", part.k()},
                    {"k_touching", part.k_touching()},
                    {"classes", part.classes},
                    {"kappa", kappa.to_json()}});
  }
  if (o.json_out)
    out << json{{"level", o.level}, {"field", field.name()}, {"vertices", rows}}.dump(2) << "\n";
  else
    out << aligned(text);
  return 0;
}

int cmd_uniform(const Options& o, std::istream& in, std::ostream& out) {
  auto g = load_graph(o.graph, in);
  auto report = is_uniform(g);
  bool downup = is_uniform_downup(g);
  if (downup != report.uniform) throw Error(ErrorKind::VerificationFailed, "uniformity checks disagree");
  if (o.json_out) {
    json j{{"uniform", report.uniform}};
    if (report.witness) j["witness"] = to_string(*report.witness), j["split_classes"] = report.split_classes;
    out << j.dump(2) << "\n";
  } else if (report.uniform) {
    out << "uniform\n";
  } else {
    out << "not uniform: successors of " << g.label(*report.witness) << " split into";
    for (const auto& c : report.split_classes) out << " " << list(c);
    out << "\n";
  }
  return 0;
}

int cmd_dual(const Options& o, std::istream& in, std::ostream& out) {
  auto g = load_graph(o.graph, in);
  Field field = parse_field(o.field);
  bool all = true;
  auto rows = json::array();
  std::vector<std::vector<std::string>> text{{"level", "dim R_B", "dim R_grA", "ambient", "annihilator", "complement"}};
  for (std::size_t n = 1; n <= g.top_level(); ++n) {
    auto r = quadratic_dual_check(g, n, field);
    all = all && r.annihilator_matches && r.dims_complement();
    text.push_back({std::to_string(n), std::to_string(r.relation_dim), std::to_string(r.gr_dim),
                    std::to_string(r.ambient), yes_no(r.annihilator_matches), yes_no(r.dims_complement())});
    rows.push_back({{"level", n},
                    {"relation_dim", r.relation_dim},
                    {"gr_dim", r.gr_dim},
                    {"ambient", r.ambient},
                    {"annihilator_matches", r.annihilator_matches},
                    {"dims_complement", r.dims_complement()}});
  }
  if (o.json_out)
    out << json{{"field", field.name()}, {"levels", rows}, {"passed", all}}.dump(2) << "\n";
  else
    out << aligned(text) << (all ? "duality holds on every level\n" : "duality FAILS\n");
  return all ? 0 : 3;
}

int cmd_scramble(const Options& o, std::istream& in, std::ostream& out) {
  auto g = load_graph(o.graph, in);
  auto view = algebra_view(g, parse_field(o.view_field), o.seed);
  write_text(o.output, view.to_json().dump() + "\n", out);
  return 0;
}

int cmd_reconstruct(const Options& o, std::istream& in, std::ostream& out) {
  AlgebraView view = [&] {
    auto j = read_json(o.view, in);
    try {
      return AlgebraView::from_json(j);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  ScanOptions scan{std::max(1u, o.threads), default_budget()};
  Reconstruction result = [&] {
    if (o.family == "nonnesting") {
      std::optional<LayeredGraph> reference;
      if (!o.reference.empty()) reference = load_graph(o.reference, in);
      return reconstruct_nonnesting(view, reference, scan);
    }
    if (o.n == 0) throw UsageError("-n is required for the " + o.family + " family");
    if (o.family == "boolean") return reconstruct_boolean(view, o.n, scan);
    if (o.family == "subspace") {
      if (!is_prime_number(o.q)) throw UsageError("--q must be prime");
      return reconstruct_subspace(view, o.q, o.n, scan);
    }
    throw UsageError("--family is nonnesting, boolean or subspace");
  }();
  if (!o.output.empty()) write_text(o.output, graph_to_json(result.graph).dump(2) + "\n", out);
  bool has_reference = o.family != "nonnesting" || !o.reference.empty();
  if (o.json_out) {
    out << result.report.dump(2) << "\n";
  } else {
    out << "family " << o.family << ", field " << view.field.name() << ", view levels " << list(view.level_dims)
        << "\n";
    for (const auto& b : result.bases)
      if (b.level != 0) out << "level " << b.level << " upper basis k " << list(b.ks) << "\n";
    out << "recovered levels " << list(result.graph.levels()) << ", " << result.graph.edge_count() << " edges\n";
    if (result.certified)
      out << "CERTIFIED isomorphic\n";
    else if (has_reference)
      out << "NOT isomorphic to the reference\n";
    else
      out << "not certified (no reference graph)\n";
  }
  return has_reference && !result.certified ? 3 : 0;
}

int cmd_compare(const Options& o, std::istream& in, std::ostream& out) {
  auto g1 = load_graph(o.graph, in);
  auto g2 = load_graph(o.graph2, in);
  std::vector<std::vector<std::string>> text{{"invariant", "first", "second", "verdict"}};
  auto rows = json::array();
  bool agree = true;
  auto add = [&](const std::string& name, const json& a, const json& b, const std::string& sa, const std::string& sb) {
    bool equal = a == b;
    agree = agree && equal;
    text.push_back({name, sa, sb, equal ? "equal" : "unequal"});
    rows.push_back({{"invariant", name}, {"first", a}, {"second", b}, {"equal", equal}});
  };
  add("level sizes", g1.levels(), g2.levels(), list(g1.levels()), list(g2.levels()));
  const std::size_t top = std::max(g1.top_level(), g2.top_level());
  for (std::size_t n = 1; n <= top; ++n) {
    auto k1 = n <= g1.top_level() ? k_profile(g1, n) : std::vector<std::size_t>{};
    auto k2 = n <= g2.top_level() ? k_profile(g2, n) : std::vector<std::size_t>{};
    add("level " + std::to_string(n) + " k profile", k1, k2, list(k1), list(k2));
    auto d1 = n <= g1.top_level() ? outdegrees(g1, n) : std::vector<std::size_t>{};
    auto d2 = n <= g2.top_level() ? outdegrees(g2, n) : std::vector<std::size_t>{};
    add("level " + std::to_string(n) + " out-degrees", d1, d2, list(d1), list(d2));
  }
  auto u1 = is_uniform(g1).uniform, u2 = is_uniform(g2).uniform;
  add("uniform", u1, u2, yes_no(u1), yes_no(u2));
  const std::size_t max_m = 3, max_n = 3 * top;
  auto b1 = hilbert_table_B(g1, max_m, max_n), b2 = hilbert_table_B(g2, max_m, max_n);
  std::string tag = " (m<=" + std::to_string(max_m) + ", n<=" + std::to_string(max_n) + ")";
  auto total = [](const std::vector<std::vector<std::size_t>>& t) {
    std::size_t s = 0;
    for (const auto& row : t)
      for (auto x : row) s += x;
    return std::to_string(s) + " total";
  };
  add("dim B" + tag, b1, b2, total(b1), total(b2));
  auto a1 = hilbert_table_grA(g1, max_m, max_n), a2 = hilbert_table_grA(g2, max_m, max_n);
  add("dim gr A" + tag, a1, a2, total(a1), total(a2));
  auto q1 = is_quadratic_to_degree(g1, 4).quadratic, q2 = is_quadratic_to_degree(g2, 4).quadratic;
  add("quadratic to length 4", q1, q2, yes_no(q1), yes_no(q2));

  json notes = json::array();
  if (g1.levels() == g2.levels()) {
    bool same = true;
    for (std::size_t n = 1; n <= g1.top_level(); ++n) same = same && relation_space(g1, n) == relation_space(g2, n);
    notes.push_back(std::string("relation spaces in vertex coordinates: ") + (same ? "identical" : "different"));
  }
  bool iso = are_isomorphic(g1, g2).has_value();
  notes.push_back(iso ? "the graphs are isomorphic" : "the graphs are not isomorphic");
  std::string verdict = agree ? "invariants agree" : "invariants differ";
  if (o.json_out) {
    out << json{{"invariants", rows}, {"verdict", verdict}, {"isomorphic", iso}, {"notes", notes}}.dump(2) << "\n";
  } else {
    out << aligned(text);
    for (const auto& note : notes) out << "note: " << note.get<std::string>() << "\n";
    out << verdict << "\n";
  }
  return agree ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Layered graph algebra workbench", "laga"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads for ray scans")->check(CLI::PositiveNumber);

  auto* build = app.add_subcommand("build", "build boolean N | subspace Q N | complete s,s,...");
  build->add_option("family", o.build_args, "family and parameters")->required();
  build->add_option("-o,--output", o.output, "write to a file instead of stdout");
  build->add_flag("--dot", o.dot, "emit Graphviz DOT instead of JSON");

  auto* info = app.add_subcommand("info", "summarize a graph");
  info->add_option("graph", o.graph)->required();
  info->add_flag("--json", o.json_out);

  auto* hilbert = app.add_subcommand("hilbert", "bigraded dimension table");
  hilbert->add_option("graph", o.graph)->required();
  hilbert->add_option("--algebra", o.algebra, "B or grA");
  hilbert->add_option("--max", o.max, "m,n");
  hilbert->add_option("--field", o.field, "Q or F<p>, for B");
  hilbert->add_flag("--json", o.json_out);

  auto* kappa = app.add_subcommand("kappa", "kappa profile of one level");
  kappa->add_option("graph", o.graph)->required();
  kappa->add_option("--level", o.level)->required();
  kappa->add_option("--field", o.field);
  kappa->add_flag("--json", o.json_out);

  auto* uniform = app.add_subcommand("uniform", "uniformity check");
  uniform->add_option("graph", o.graph)->required();
  uniform->add_flag("--json", o.json_out);

  auto* dual = app.add_subcommand("dual-check", "compare both relation spaces on every level");
  dual->add_option("graph", o.graph)->required();
  dual->add_option("--field", o.field);
  dual->add_flag("--json", o.json_out);

  auto* scramble = app.add_subcommand("scramble", "algebra view in a random certified basis");
  scramble->add_option("graph", o.graph)->required();
  scramble->add_option("--seed", o.seed)->required();
  scramble->add_option("--field", o.view_field, "prime field, F3 by default");
  scramble->add_option("-o,--output", o.output);

  auto* reconstruct = app.add_subcommand("reconstruct", "rebuild a graph from an algebra view");
  reconstruct->add_option("view", o.view, "view JSON, - for stdin");
  reconstruct->add_option("--family", o.family, "nonnesting, boolean or subspace")->required();
  reconstruct->add_option("-n", o.n);
  reconstruct->add_option("--q", o.q);
  reconstruct->add_option("--reference", o.reference, "graph to certify against (nonnesting)");
  reconstruct->add_option("-o,--output", o.output, "write the recovered graph");
  reconstruct->add_flag("--json", o.json_out);

  auto* compare = app.add_subcommand("compare", "algebra invariants of two graphs side by side");
  compare->add_option("first", o.graph)->required();
  compare->add_option("second", o.graph2)->required();
  compare->add_flag("--json", o.json_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (info->parsed()) return cmd_info(o, in, out);
    if (hilbert->parsed()) return cmd_hilbert(o, in, out);
    if (kappa->parsed()) return cmd_kappa(o, in, out);
    if (uniform->parsed()) return cmd_uniform(o, in, out);
    if (dual->parsed()) return cmd_dual(o, in, out);
    if (scramble->parsed()) return cmd_scramble(o, in, out);
    if (reconstruct->parsed()) return cmd_reconstruct(o, in, out);
    if (compare->parsed()) return cmd_compare(o, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace laga::cli
