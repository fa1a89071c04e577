// Command-line driver. Reads a problem description in JSON, runs one of the
// computation or verification commands, and prints a JSON report to stdout.
// Diagnostics go to stderr. Exit codes: 0 success or verified, 1 verification
// failure (the report carries a witness), 2 malformed input.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwcoh/cohomology.hpp"
#include "pwcoh/form_text.hpp"
#include "pwcoh/lie_algebra.hpp"
#include "pwcoh/mayer_vietoris.hpp"
#include "pwcoh/oracle.hpp"
#include "pwcoh/piecewise.hpp"
#include "pwcoh/selfcheck.hpp"
#include "pwcoh/simplicial.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

// Thrown for every schema or value problem in the input; mapped to exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void bad_input(const std::string& message) { throw InputError(message); }

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_input("cannot open input file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad_input(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad_input("top-level JSON value must be an object");
  return j;
}

void check_keys(const Json& j, const std::string& where,
                const std::set<std::string>& allowed) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key()))
      bad_input("unknown key \"" + item.key() + "\" in " + where);
  }
}

int require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad_input(where + " must be an integer");
  return j.get<int>();
}

// ---- problem input ---------------------------------------------------------

struct Options {
  int n_start = 1;
  int window = 2;
  int ceiling = 6;
  std::uint64_t seed = 0;
  pwcoh::FacetOrder order = pwcoh::FacetOrder::kAscending;
};

Options parse_options(const Json& root) {
  Options o;
  if (!root.contains("options")) return o;
  const Json& j = root.at("options");
  if (!j.is_object()) bad_input("\"options\" must be an object");
  check_keys(j, "\"options\"", {"n_start", "window", "ceiling", "seed", "order"});
  if (j.contains("n_start")) o.n_start = require_int(j.at("n_start"), "options.n_start");
  if (j.contains("window")) o.window = require_int(j.at("window"), "options.window");
  if (j.contains("ceiling")) o.ceiling = require_int(j.at("ceiling"), "options.ceiling");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_integer() || j.at("seed").get<std::int64_t>() < 0)
      bad_input("options.seed must be a non-negative integer");
    o.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("order")) {
    const std::string s = j.at("order").is_string() ? j.at("order").get<std::string>() : "";
    if (s == "ascending") {
      o.order = pwcoh::FacetOrder::kAscending;
    } else if (s == "descending") {
      o.order = pwcoh::FacetOrder::kDescending;
    } else {
      bad_input("options.order must be \"ascending\" or \"descending\"");
    }
  }
  if (o.n_start < 1) bad_input("options.n_start must be at least 1");
  if (o.window < 1) bad_input("options.window must be at least 1");
  if (o.ceiling < o.n_start) bad_input("options.ceiling must be at least options.n_start");
  return o;
}

pwcoh::Simplex parse_simplex(const Json& j, const std::string& where, int vertices) {
  if (!j.is_array() || j.empty()) bad_input(where + " must be a non-empty integer array");
  std::vector<int> v;
  for (const Json& e : j) {
    const int id = require_int(e, where + " entry");
    if (id < 0 || id >= vertices)
      bad_input(where + ": vertex " + std::to_string(id) + " is outside [0, " +
                std::to_string(vertices) + ")");
    v.push_back(id);
  }
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    bad_input(where + " repeats a vertex");
  return pwcoh::Simplex(v);
}

std::vector<pwcoh::Simplex> parse_simplex_list(const Json& j, const std::string& where,
                                               int vertices) {
  if (!j.is_array()) bad_input(where + " must be an array of integer arrays");
  std::vector<pwcoh::Simplex> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_simplex(j[i], where + "[" + std::to_string(i) + "]", vertices));
  return out;
}

int vertex_count(const Json& root) {
  if (!root.contains("vertices")) bad_input("missing \"vertices\"");
  const int vertices = require_int(root.at("vertices"), "\"vertices\"");
  if (vertices <= 0) bad_input("\"vertices\" must be positive");
  return vertices;
}

// The complex is the closure of the listed maximal simplices; every vertex id
// below the declared count is included as a 0-simplex even when isolated.
pwcoh::SimplicialComplex parse_complex(const Json& root) {
  const int vertices = vertex_count(root);
  if (!root.contains("maximal_simplices")) bad_input("missing \"maximal_simplices\"");
  std::vector<pwcoh::Simplex> gens =
      parse_simplex_list(root.at("maximal_simplices"), "\"maximal_simplices\"", vertices);
  for (int v = 0; v < vertices; ++v) gens.push_back(pwcoh::Simplex({v}));
  return pwcoh::SimplicialComplex::closure(gens);
}

// Bracket rows are (i, j, k, num, den), 1-based generator indices, i < j,
// meaning [x_i, x_j] = (num/den) x_k summed over rows with equal (i, j, k).
pwcoh::LieAlgebra parse_lie_algebra(const Json& root) {
  if (!root.contains("lie_algebra")) return pwcoh::LieAlgebra::abelian(0);
  const Json& j = root.at("lie_algebra");
  if (!j.is_object()) bad_input("\"lie_algebra\" must be an object");
  check_keys(j, "\"lie_algebra\"", {"dim", "brackets"});
  if (!j.contains("dim")) bad_input("lie_algebra.dim is required");
  const int dim = require_int(j.at("dim"), "lie_algebra.dim");
  if (dim < 0) bad_input("lie_algebra.dim must be non-negative");
  std::vector<pwcoh::BracketEntry> entries;
  if (j.contains("brackets")) {
    if (!j.at("brackets").is_array()) bad_input("lie_algebra.brackets must be an array");
    for (const Json& row : j.at("brackets")) {
      if (!row.is_array() || row.size() != 5)
        bad_input("each bracket must be [i, j, k, num, den]");
      const int i = require_int(row[0], "bracket i");
      const int jj = require_int(row[1], "bracket j");
      const int k = require_int(row[2], "bracket k");
      const int num = require_int(row[3], "bracket numerator");
      const int den = require_int(row[4], "bracket denominator");
      if (i < 1 || i > dim || jj < 1 || jj > dim || k < 1 || k > dim)
        bad_input("bracket indices must lie in [1, dim]");
      if (i >= jj) bad_input("bracket rows need i < j; give only the upper triangle");
      if (den == 0) bad_input("bracket denominator must be nonzero");
      entries.push_back({i - 1, jj - 1, k - 1, pwcoh::make_rational(num, den)});
    }
  }
  try {
    return pwcoh::LieAlgebra(dim, entries);
  } catch (const std::invalid_argument& e) {
    bad_input(std::string("lie_algebra: ") + e.what());
  }
}

pwcoh::CoverDecomposition parse_cover(const Json& root, const pwcoh::SimplicialComplex& k,
                                      int vertices) {
  if (!root.contains("cover")) bad_input("this command needs a \"cover\" object");
  const Json& j = root.at("cover");
  if (!j.is_object()) bad_input("\"cover\" must be an object");
  check_keys(j, "\"cover\"", {"k0", "k1"});
  if (!j.contains("k0") || !j.contains("k1")) bad_input("cover needs \"k0\" and \"k1\"");
  const auto g0 = parse_simplex_list(j.at("k0"), "cover.k0", vertices);
  const auto g1 = parse_simplex_list(j.at("k1"), "cover.k1", vertices);
  const auto k0 = pwcoh::SimplicialComplex::closure(g0);
  const auto k1 = pwcoh::SimplicialComplex::closure(g1);
  if (!pwcoh::is_subcomplex(k0, k)) bad_input("cover.k0 is not a subcomplex of the complex");
  if (!pwcoh::is_subcomplex(k1, k)) bad_input("cover.k1 is not a subcomplex of the complex");
  if (!(pwcoh::complex_union(k0, k1) == k))
    bad_input("cover pieces must union to the whole complex");
  return pwcoh::cover(k0, k1);
}

// ---- report pieces ---------------------------------------------------------

std::string simplex_key(const pwcoh::Simplex& s) {
  std::string out;
  for (int v : s.vertices()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Json betti_json(const std::vector<int>& b) {
  Json out = Json::array();
  for (int x : b) out.push_back(x);
  return out;
}

Json stabilization_json(const pwcoh::StabilizationReport& r) {
  Json out;
  out["converged"] = r.converged;
  out["betti"] = betti_json(r.betti);
  out["truncation"] = r.truncation;
  out["window"] = r.window;
  out["ceiling"] = r.ceiling;
  Json history = Json::array();
  for (const auto& [n, b] : r.history) history.push_back(Json::array({n, betti_json(b)}));
  out["history"] = history;
  out["message"] = r.message;
  return out;
}

Json matrix_json(const pwcoh::RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(pwcoh::to_string(m.at(r, c)));
    rows.push_back(row);
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = rows;
  return out;
}

Json piecewise_json(const pwcoh::PiecewiseForm& w) {
  Json pieces = Json::object();
  for (const auto& [s, part] : w.parts()) pieces[simplex_key(s)] = pwcoh::polyform_text(part);
  Json out;
  out["degree"] = w.degree();
  out["coefficient_degree"] = w.coefficient_degree();
  out["pieces"] = pieces;
  return out;
}

Json les_json(const pwcoh::LESReport& r) {
  Json out;
  out["command"] = "mv";
  out["verified"] = r.verified;
  out["message"] = r.message;
  out["truncation"] = r.truncation;
  Json stab;
  stab["whole"] = stabilization_json(r.stab_whole);
  stab["piece0"] = stabilization_json(r.stab_piece0);
  stab["piece1"] = stabilization_json(r.stab_piece1);
  stab["overlap"] = stabilization_json(r.stab_overlap);
  out["stabilization"] = stab;
  Json betti;
  betti["whole"] = betti_json(r.betti_whole);
  betti["piece0"] = betti_json(r.betti_piece0);
  betti["piece1"] = betti_json(r.betti_piece1);
  betti["overlap"] = betti_json(r.betti_overlap);
  out["betti"] = betti;
  Json cochain = Json::array();
  for (const auto& c : r.cochain) {
    Json row;
    row["degree"] = c.degree;
    row["lambda_injective"] = c.lambda_injective;
    row["composite_zero"] = c.composite_zero;
    row["middle_exact"] = c.middle_exact;
    row["lambda_commutes"] = c.lambda_commutes;
    row["mu_commutes"] = c.mu_commutes;
    cochain.push_back(row);
  }
  out["cochain_checks"] = cochain;
  Json maps;
  Json lam = Json::array();
  for (const auto& m : r.lambda_star) lam.push_back(matrix_json(m));
  Json mu = Json::array();
  for (const auto& m : r.mu_star) mu.push_back(matrix_json(m));
  Json del = Json::array();
  for (const auto& m : r.delta_star) del.push_back(matrix_json(m));
  maps["lambda_star"] = lam;
  maps["mu_star"] = mu;
  maps["delta_star"] = del;
  out["induced_maps"] = maps;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    Json row;
    row["degree"] = v.degree;
    row["node"] = v.node;
    row["incoming"] = v.incoming;
    row["outgoing"] = v.outgoing;
    row["incoming_rank"] = v.incoming_rank;
    row["kernel_dim"] = v.kernel_dim;
    row["composite_zero"] = v.composite_zero;
    row["exact"] = v.exact;
    verdicts.push_back(row);
  }
  out["verdicts"] = verdicts;
  if (r.witness.has_value()) {
    Json w;
    w["node"] = r.witness->node;
    w["degree"] = r.witness->degree;
    Json forms = Json::array();
    for (const auto& f : r.witness->forms) forms.push_back(piecewise_json(f));
    w["forms"] = forms;
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

// ---- commands --------------------------------------------------------------

int cmd_validate(const std::string& path) {
  const Json root = load_file(path);
  check_keys(root, "the input", {"vertices", "maximal_simplices", "lie_algebra", "cover", "options"});
  const int vertices = vertex_count(root);
  const auto k = parse_complex(root);
  const auto g = parse_lie_algebra(root);
  parse_options(root);

  Json out;
  out["command"] = "validate";
  Json kj;
  kj["vertices"] = vertices;
  kj["dimension"] = k.dimension();
  kj["simplices"] = static_cast<int>(k.size());
  Json maximal = Json::array();
  for (const auto& s : k.maximal_simplices()) maximal.push_back(simplex_key(s));
  kj["maximal_simplices"] = maximal;
  out["complex"] = kj;

  Json gj;
  gj["dim"] = g.dim();
  const auto jacobi = g.jacobi_failure();
  gj["jacobi"] = jacobi.has_value() ? Json(*jacobi) : Json("ok");
  out["lie_algebra"] = gj;

  if (root.contains("cover")) {
    const auto cov = parse_cover(root, k, vertices);
    Json cj;
    cj["k0_simplices"] = static_cast<int>(cov.k0.size());
    cj["k1_simplices"] = static_cast<int>(cov.k1.size());
    cj["overlap_simplices"] = static_cast<int>(cov.overlap.size());
    out["cover"] = cj;
  }

  out["valid"] = !jacobi.has_value();
  if (jacobi.has_value()) {
    Json w;
    w["jacobi"] = *jacobi;
    out["witness"] = w;
  }
  emit(out);
  return jacobi.has_value() ? kFailed : kOk;
}

int cmd_betti(const std::string& path) {
  const Json root = load_file(path);
  check_keys(root, "the input", {"vertices", "maximal_simplices", "lie_algebra", "cover", "options"});
  const auto k = parse_complex(root);
  const auto g = parse_lie_algebra(root);
  const Options o = parse_options(root);
  if (const auto jacobi = g.jacobi_failure())
    bad_input("lie_algebra violates the Jacobi identity: " + *jacobi);

  pwcoh::CohomologyEngine engine(pwcoh::AlgebroidComplex(k, g));
  const auto report = engine.stabilized_betti(o.n_start, o.window, o.ceiling);

  Json out;
  out["command"] = "betti";
  out["converged"] = report.converged;
  out["betti"] = betti_json(report.betti);
  out["truncation"] = report.truncation;
  out["window"] = report.window;
  out["ceiling"] = report.ceiling;
  Json history = Json::array();
  for (const auto& [n, b] : report.history) history.push_back(Json::array({n, betti_json(b)}));
  out["history"] = history;
  out["message"] = report.message;
  emit(out);
  if (!report.converged)
    std::cerr << "betti: stabilization did not converge; " << report.message << "\n";
  return report.converged ? kOk : kFailed;
}

int cmd_oracle_betti(const std::string& path) {
  const Json root = load_file(path);
  check_keys(root, "the input", {"vertices", "maximal_simplices", "lie_algebra", "cover", "options"});
  const auto k = parse_complex(root);
  const auto g = parse_lie_algebra(root);
  if (const auto jacobi = g.jacobi_failure())
    bad_input("lie_algebra violates the Jacobi identity: " + *jacobi);

  Json out;
  out["command"] = "oracle-betti";
  out["betti"] = betti_json(pwcoh::oracle_betti(k, g));
  emit(out);
  return kOk;
}

int cmd_mv(const std::string& path) {
  const Json root = load_file(path);
  check_keys(root, "the input", {"vertices", "maximal_simplices", "lie_algebra", "cover", "options"});
  const int vertices = vertex_count(root);
  const auto k = parse_complex(root);
  const auto g = parse_lie_algebra(root);
  const Options o = parse_options(root);
  if (const auto jacobi = g.jacobi_failure())
    bad_input("lie_algebra violates the Jacobi identity: " + *jacobi);
  const auto cov = parse_cover(root, k, vertices);

  pwcoh::MVSetup setup(cov, g);
  pwcoh::MVOptions mv;
  mv.n_start = o.n_start;
  mv.window = o.window;
  mv.ceiling = o.ceiling;
  mv.order = o.order;
  const auto report = pwcoh::verify_les_exactness(setup, mv);
  emit(les_json(report));
  if (!report.verified) std::cerr << "mv: " << report.message << "\n";
  return report.verified ? kOk : kFailed;
}

int cmd_extend(const std::string& path) {
  const Json root = load_file(path);
  check_keys(root, "the input",
             {"vertices", "maximal_simplices", "lie_algebra", "cover", "options", "form"});
  const int vertices = vertex_count(root);
  const auto k = parse_complex(root);
  const auto g = parse_lie_algebra(root);
  const Options o = parse_options(root);
  if (const auto jacobi = g.jacobi_failure())
    bad_input("lie_algebra violates the Jacobi identity: " + *jacobi);

  if (!root.contains("form")) bad_input("extend needs a \"form\" object");
  const Json& fj = root.at("form");
  if (!fj.is_object()) bad_input("\"form\" must be an object");
  check_keys(fj, "\"form\"", {"degree", "pieces"});
  if (!fj.contains("degree")) bad_input("form.degree is required");
  const int degree = require_int(fj.at("degree"), "form.degree");
  if (degree < 0) bad_input("form.degree must be non-negative");
  if (!fj.contains("pieces") || !fj.at("pieces").is_object())
    bad_input("form.pieces must map simplices to form text");

  // Listed pieces sit on the simplices named by the keys; the domain is their
  // closure, with unlisted faces filled in by restriction.
  std::map<pwcoh::Simplex, pwcoh::PolyForm> parts;
  std::vector<pwcoh::Simplex> listed;
  for (const auto& item : fj.at("pieces").items()) {
    std::istringstream is(item.key());
    std::vector<int> v;
    int x = 0;
    while (is >> x) v.push_back(x);
    if (!is.eof() || v.empty())
      bad_input("form.pieces key \"" + item.key() + "\" is not a vertex list");
    Json jv = Json::array();
    for (int id : v) jv.push_back(id);
    const auto s = parse_simplex(jv, "form.pieces key \"" + item.key() + "\"", vertices);
    if (!item.value().is_string())
      bad_input("form.pieces[\"" + item.key() + "\"] must be form text");
    const auto w =
        pwcoh::parse_polyform(item.value().get<std::string>(), s, g.dim(), degree);
    if (!w.has_value())
      bad_input("form.pieces[\"" + item.key() + "\"] is not valid form text of degree " +
                std::to_string(degree));
    parts.emplace(s, *w);
    listed.push_back(s);
  }
  if (listed.empty()) bad_input("form.pieces must name at least one simplex");

  const auto domain = pwcoh::SimplicialComplex::closure(listed);
  if (!pwcoh::is_subcomplex(domain, k))
    bad_input("the form's domain is not a subcomplex of the complex");
  for (const auto& s : domain.simplices()) {
    if (parts.count(s)) continue;
    for (const auto& t : listed) {
      if (t.has_face(s)) {
        parts.emplace(s, pwcoh::restrict_to_face(parts.at(t), s));
        break;
      }
    }
  }

  pwcoh::PiecewiseForm w = [&] {
    try {
      return pwcoh::PiecewiseForm(pwcoh::AlgebroidComplex(domain, g), degree, parts);
    } catch (const std::invalid_argument& e) {
      bad_input(std::string("form: ") + e.what());
    }
  }();
  if (!pwcoh::validate_compatibility(w))
    bad_input("form pieces disagree on a shared face");

  const auto extension = pwcoh::extend_from_subcomplex(w, k, o.order);
  const bool round_trip = pwcoh::restrict_to_subcomplex(extension, domain) == w;

  Json out;
  out["command"] = "extend";
  out["degree"] = degree;
  out["input_coefficient_degree"] = w.coefficient_degree();
  out["extension"] = piecewise_json(extension);
  out["compatible"] = pwcoh::validate_compatibility(extension);
  out["round_trip"] = round_trip;
  emit(out);
  if (!round_trip) {
    std::cerr << "extend: restriction of the extension failed to reproduce the input\n";
    return kFailed;
  }
  return kOk;
}

int cmd_selfcheck(std::uint64_t seed, int cases) {
  if (cases < 1) bad_input("--cases must be at least 1");
  const auto results = pwcoh::run_selfcheck(seed, cases);
  bool all = true;
  Json suites = Json::array();
  for (const auto& r : results) {
    Json row;
    row["name"] = r.name;
    row["cases"] = r.cases;
    row["passed"] = r.passed;
    row["detail"] = r.detail;
    suites.push_back(row);
    all = all && r.passed;
  }
  Json out;
  out["command"] = "selfcheck";
  out["seed"] = seed;
  out["cases"] = cases;
  out["suites"] = suites;
  out["passed"] = all;
  emit(out);
  if (!all) std::cerr << "selfcheck: at least one property suite failed\n";
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact cohomology of piecewise polynomial forms on simplicial complexes "
      "with a fiber Lie algebra, plus a Mayer-Vietoris exactness verifier."};
  app.require_subcommand(1);

  std::string input_path;
  std::uint64_t seed = 0;
  int cases = 25;

  CLI::App* validate = app.add_subcommand(
      "validate", "Check the input: complex closure, index ranges, Jacobi identity");
  validate->add_option("input", input_path, "problem JSON file")->required();

  CLI::App* betti = app.add_subcommand(
      "betti", "Stabilized Betti numbers of the piecewise-form complex");
  betti->add_option("input", input_path, "problem JSON file")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle-betti", "Betti numbers from the independent cochain-level oracle");
  oracle->add_option("input", input_path, "problem JSON file")->required();

  CLI::App* mv = app.add_subcommand(
      "mv", "Verify exactness of the Mayer-Vietoris sequence for a two-piece cover");
  mv->add_option("input", input_path, "problem JSON file with a \"cover\"")->required();

  CLI::App* extend = app.add_subcommand(
      "extend", "Extend a piecewise form from a subcomplex to the whole complex");
  extend->add_option("input", input_path, "problem JSON file with a \"form\"")->required();

  CLI::App* selfcheck = app.add_subcommand(
      "selfcheck", "Run the seeded property suites on randomized inputs");
  selfcheck->add_option("--seed", seed, "base seed for the randomized cases");
  selfcheck->add_option("--cases", cases, "cases per property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*validate) return cmd_validate(input_path);
    if (*betti) return cmd_betti(input_path);
    if (*oracle) return cmd_oracle_betti(input_path);
    if (*mv) return cmd_mv(input_path);
    if (*extend) return cmd_extend(input_path);
    if (*selfcheck) return cmd_selfcheck(seed, cases);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
