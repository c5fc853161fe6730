// gt-agkz: command line front end.
//
// Exit codes: 0 success, 1 a check failed or the computation degenerated,
// 2 usage error.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gtagkz/gtagkz.hpp"

using namespace gtagkz;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "gt-agkz/1";
constexpr int kLatticeMaxRank = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string format = "json";
  std::string out;
  unsigned long seed = 42;
  int matrices = 20;
};

void emit(const Settings& s, const Json& j, const std::string& text) {
  std::string body = s.format == "json" ? j.dump(2) + "\n" : text;
  if (s.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(s.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + s.out);
  f << body;
}

NormalizedTopRow parse_weight(const std::string& text) {
  Weight w;
  try {
    w = Weight::parse(text);
  } catch (const std::exception&) {
    throw UsageError("malformed weight '" + text + "'");
  }
  if (w.size() < 1 || w.size() > kMaxRank) throw UsageError("weight must have 1.." + std::to_string(kMaxRank) + " components");
  if (!is_dominant(w)) throw UsageError("weight " + w.to_string() + " is not dominant");
  return normalize_top_row(w);
}

Json weight_json(const Weight& w) { return Json(w.components); }

Json header(const std::string& command) { return Json{{"schema", kSchema}, {"command", command}}; }

void add_weight_fields(Json& j, const std::string& input, const NormalizedTopRow& nt) {
  j["weight"] = input;
  j["top_row"] = weight_json(nt.top_row);
  j["full_minor_power"] = nt.full_minor_power;
}

std::string weight_note(const NormalizedTopRow& nt) {
  if (nt.full_minor_power == 0) return "";
  return "  (times A[1.." + std::to_string(nt.top_row.size()) + "]^" + std::to_string(nt.full_minor_power) + ")";
}

Json exponent_json(const ExponentVector& e, const SubsetUniverse& u) {
  Json out = Json::object();
  for (int i = 0; i < e.dimension(); ++i)
    if (e[i] != 0) out[u.subset(i).to_string()] = e[i];
  return out;
}

std::string exponent_text(const ExponentVector& e, const SubsetUniverse& u) {
  std::string out;
  for (int i = 0; i < e.dimension(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += "A[" + u.subset(i).to_string() + "]^" + std::to_string(e[i]);
  }
  return out.empty() ? "0" : out;
}

std::string poly_text(const Polynomial& f, const SubsetUniverse& u) { return f.is_zero() ? "0" : to_text(f, u); }

int cmd_lattice(const Settings& s, int n) {
  if (n < 1 || n > kLatticeMaxRank) throw UsageError("n must be in 1.." + std::to_string(kLatticeMaxRank));
  GTLattice lat(n);
  const auto& u = lat.universe();
  Json j = header("lattice");
  j["n"] = n;
  j["dimension"] = lat.dimension();
  j["k"] = lat.basis_size();
  Json vars = Json::array();
  for (const auto& x : u.subsets()) vars.push_back(x.to_string());
  j["variables"] = vars;
  std::ostringstream t;
  t << "n=" << n << "  variables=" << lat.dimension() << "  k=" << lat.basis_size() << "\n";
  bool orthogonal = true;
  Json basis = Json::array();
  int alpha = 0;
  for (const auto& b : lat.basis()) {
    ++alpha;
    for (auto [p, q] : chi_pairs(n)) orthogonal &= chi_apply(p, q, b.v, u) == 0;
    basis.push_back(Json{{"alpha", alpha},
                         {"i", b.i},
                         {"j", b.j},
                         {"x", b.x},
                         {"X", b.tail.elements()},
                         {"v", b.v.entries()},
                         {"r", b.r.entries()},
                         {"v_plus", exponent_json(b.v_plus, u)},
                         {"v_minus", exponent_json(b.v_minus, u)},
                         {"v_zero", exponent_json(b.v_zero, u)}});
    t << "v" << alpha << " " << b.label() << "  v=" << b.v.to_string() << "  r=" << b.r.to_string() << "\n";
  }
  j["basis"] = basis;
  j["chi_orthogonal"] = orthogonal;
  t << "chi-orthogonal: " << (orthogonal ? "yes" : "no") << "\n";
  emit(s, j, t.str());
  return orthogonal ? 0 : 1;
}

int cmd_diagrams(const Settings& s, const std::string& weight) {
  const auto nt = parse_weight(weight);
  const auto ds = enumerate_diagrams(nt.top_row);
  Json j = header("diagrams");
  add_weight_fields(j, weight, nt);
  j["count"] = ds.size();
  Json list = Json::array();
  std::ostringstream t;
  t << "top row " << nt.top_row.to_string() << weight_note(nt) << "  count=" << ds.size() << "\n";
  for (const auto& d : ds) {
    const auto w = diagram_weight(d);
    list.push_back(Json{{"diagram", d.to_string()}, {"weight", weight_json(w)}});
    t << d.to_string() << "  weight " << w.to_string() << "\n";
  }
  j["diagrams"] = list;
  emit(s, j, t.str());
  return 0;
}

int cmd_basis(const Settings& s, const std::string& weight) {
  const auto nt = parse_weight(weight);
  const auto b = RepresentationBasis::build(nt.top_row);
  const auto& u = b->universe();
  const auto table = coefficient_table(*b);
  const auto g = gt_functions(*b, table);
  const auto summary = summary_table(*b, g);

  Json j = header("basis");
  add_weight_fields(j, weight, nt);
  j["dimension"] = b->size();
  j["ambiguities"] = b->ambiguities();
  std::ostringstream t;
  t << "top row " << nt.top_row.to_string() << weight_note(nt) << "  dimension=" << b->size() << "\n";
  for (const auto& a : b->ambiguities()) t << "ambiguity: " << a << "\n";
  Json entries = Json::array();
  for (std::size_t i = 0; i < b->size(); ++i) {
    const auto& e = b->entries()[i];
    const auto& ec = table.entries[i];
    Json coeffs = Json::array();
    for (std::size_t k = 0; k < ec.orders.size(); ++k)
      coeffs.push_back(Json{{"l", ec.orders[k]}, {"C", to_string(ec.C[k])}, {"S", to_string(ec.S[k])}});
    entries.push_back(Json{{"diagram", e.diagram.to_string()},
                           {"weight", weight_json(summary[i].weight)},
                           {"shift", exponent_json(e.shift.gamma, u)},
                           {"gamma_series", to_json(e.gamma_series, u)},
                           {"F", to_json(e.F, u)},
                           {"G", to_json(g[i], u)},
                           {"coefficients", coeffs},
                           {"norm", to_string(summary[i].norm)}});
    t << "\n[" << i + 1 << "] " << e.diagram.to_string() << "  weight " << summary[i].weight.to_string()
      << "  <G,G>=" << to_string(summary[i].norm) << "\n";
    t << "  shift: " << exponent_text(e.shift.gamma, u) << "\n";
    t << "  Gamma: " << poly_text(e.gamma_series, u) << "\n";
    t << "  F: " << poly_text(e.F, u) << "\n";
    t << "  G: " << poly_text(g[i], u) << "\n";
    for (std::size_t k = 0; k < ec.orders.size(); ++k)
      t << "  l=" << to_string(ec.orders[k]) << "  C=" << to_string(ec.C[k]) << "  S=" << to_string(ec.S[k]) << "\n";
  }
  j["entries"] = entries;
  Json rows = Json::array();
  for (const auto& r : summary)
    rows.push_back(Json{{"diagram", r.diagram.to_string()}, {"weight", weight_json(r.weight)}, {"norm", to_string(r.norm)}});
  j["summary"] = rows;
  emit(s, j, t.str());
  return 0;
}

int cmd_gram(const Settings& s, const std::string& weight) {
  const auto nt = parse_weight(weight);
  const auto b = RepresentationBasis::build(nt.top_row);
  const auto gram = gram_matrix(*b);
  const Rational det = determinant(gram);
  Json j = header("gram");
  add_weight_fields(j, weight, nt);
  Json labels = Json::array();
  for (const auto& e : b->entries()) labels.push_back(e.diagram.to_string());
  j["diagrams"] = labels;
  Json m = Json::array();
  std::ostringstream t;
  t << "top row " << nt.top_row.to_string() << weight_note(nt) << "  dimension=" << b->size() << "\n";
  for (std::size_t i = 0; i < gram.size(); ++i) {
    Json row = Json::array();
    t << b->entries()[i].diagram.to_string() << ":";
    for (const auto& c : gram[i]) {
      row.push_back(to_string(c));
      t << " " << to_string(c);
    }
    t << "\n";
    m.push_back(row);
  }
  j["gram"] = m;
  j["determinant"] = to_string(det);
  j["nonsingular"] = det != 0;
  t << "determinant " << to_string(det) << "\n";
  emit(s, j, t.str());
  return det != 0 ? 0 : 1;
}

int cmd_verify(const Settings& s, const std::string& weight, std::vector<std::string> checks) {
  for (const auto& c : checks)
    if (!is_check_name(c)) throw UsageError("unknown check '" + c + "'");
  if (checks.empty()) checks = check_names();
  const auto nt = parse_weight(weight);
  const auto b = RepresentationBasis::build(nt.top_row);
  VerifyOptions opt;
  opt.seed = s.seed;
  opt.matrices = s.matrices;
  const auto results = run_checks(checks, *b, opt);

  Json j = header("verify");
  add_weight_fields(j, weight, nt);
  j["seed"] = s.seed;
  j["matrices"] = s.matrices;
  std::ostringstream t;
  t << "top row " << nt.top_row.to_string() << weight_note(nt) << "  seed=" << s.seed << "\n";
  bool all = true;
  Json list = Json::array();
  for (const auto& r : results) {
    all &= r.passed();
    Json item{{"check", r.name}, {"status", to_string(r.status)}, {"cases", r.cases}, {"failures", r.failures}};
    if (!r.note.empty()) item["note"] = r.note;
    list.push_back(item);
    t << r.name << ": " << to_string(r.status) << " (" << r.cases << " cases)";
    if (!r.note.empty()) t << " " << r.note;
    t << "\n";
    for (const auto& f : r.failures) t << "  " << f << "\n";
  }
  j["checks"] = list;
  j["passed"] = all;
  t << (all ? "all selected checks pass" : "some checks failed") << "\n";
  emit(s, j, t.str());
  return all ? 0 : 1;
}

int cmd_eval(const Settings& s, const std::string& path, const std::string& matrix_text, int rank, int count) {
  std::string content;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    content = buf.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    content = buf.str();
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const std::exception& ex) {
    throw UsageError(std::string("invalid JSON: ") + ex.what());
  }
  nlohmann::json poly = doc;
  if (doc.is_object()) {
    if (!doc.contains("polynomial")) throw UsageError("JSON object needs a \"polynomial\" field");
    poly = doc["polynomial"];
    if (rank == 0 && doc.contains("rank") && doc["rank"].is_number_integer()) rank = doc["rank"].get<int>();
  }
  std::vector<RationalMatrix> mats;
  if (!matrix_text.empty()) {
    try {
      std::string rows = matrix_text;
      std::replace_if(rows.begin(), rows.end(), [](unsigned char c) { return std::isspace(c); }, ';');
      mats.push_back(RationalMatrix::parse(rows));
    } catch (const std::exception& ex) {
      throw UsageError(std::string("bad matrix: ") + ex.what());
    }
    if (rank != 0 && rank != mats.front().size()) throw UsageError("matrix size does not match --rank");
    rank = mats.front().size();
  }
  if (rank < 1 || rank > kMaxRank) throw UsageError("eval needs --rank n, a \"rank\" field, or --matrix");
  if (mats.empty()) {
    if (count < 1) throw UsageError("--count must be positive");
    mats = random_nonsingular_matrices(rank, count, s.seed);
  }
  SubsetUniverse u(rank);
  Polynomial f(u.dimension());
  try {
    f = polynomial_from_json(poly, u);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(std::string("bad polynomial: ") + ex.what());
  }
  Json j = header("eval");
  j["rank"] = rank;
  if (matrix_text.empty()) j["seed"] = s.seed;
  j["polynomial"] = to_json(f, u);
  Json values = Json::array();
  std::ostringstream t;
  t << "f = " << poly_text(f, u) << "\n";
  for (std::size_t m = 0; m < mats.size(); ++m) {
    const Rational v = evaluate_minors(f, mats[m], u);
    values.push_back(to_string(v));
    t << "M" << m << ": " << to_string(v) << "\n";
  }
  j["values"] = values;
  emit(s, j, t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gelfand-Tsetlin bases from A-GKZ solutions, in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", s.out, "Write output to this file instead of stdout");
  app.add_option("--seed", s.seed, "Seed for the random test matrices");
  app.add_option("--matrices", s.matrices, "Number of random matrices per identity")->check(CLI::PositiveNumber);

  int n = 0;
  auto* lattice = app.add_subcommand("lattice", "Basis of the lattice B for gl(n)");
  lattice->add_option("n", n, "Rank")->required();

  std::string weight;
  auto* diagrams = app.add_subcommand("diagrams", "Gelfand-Tsetlin diagrams with a top row");
  diagrams->add_option("weight", weight, "Top row, e.g. 2,1,0")->required();
  auto* basis = app.add_subcommand("basis", "Series, solutions F and orthogonal basis G");
  basis->add_option("weight", weight, "Top row")->required();
  auto* gram = app.add_subcommand("gram", "Gram matrix of the solutions F");
  gram->add_option("weight", weight, "Top row")->required();

  std::vector<std::string> checks;
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("weight", weight, "Top row")->required();
  verify->add_option("--checks", checks, "Comma separated check names")->delimiter(',');

  std::string path, matrix;
  int rank = 0, count = 3;
  auto* eval = app.add_subcommand("eval", "Evaluate a JSON polynomial on minors of matrices");
  eval->add_option("file", path, "Polynomial JSON file, - for stdin")->required();
  eval->add_option("--matrix", matrix, "Matrix rows separated by ';' or spaces, e.g. 1,2;3,4");
  eval->add_option("--rank", rank, "Rank n when no matrix is given");
  eval->add_option("--count", count, "Number of seeded random matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*lattice) return cmd_lattice(s, n);
    if (*diagrams) return cmd_diagrams(s, weight);
    if (*basis) return cmd_basis(s, weight);
    if (*gram) return cmd_gram(s, weight);
    if (*verify) return cmd_verify(s, weight, checks);
    if (*eval) return cmd_eval(s, path, matrix, rank, count);
  } catch (const UsageError& e) {
    std::cerr << "gt-agkz: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateMetric& e) {
    std::cerr << "gt-agkz: degenerate metric: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "gt-agkz: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
