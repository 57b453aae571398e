#include "opuc/config.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "opuc/families.hpp"

namespace opuc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::Config, path + ": " + msg);
}

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (!ok.count(k)) fail(path + "." + k, "unknown key");
  }
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

cplx as_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  fail(path, "expected a number or [re, im]");
}

template <class T, class F>
std::vector<T> as_list(const json& j, const std::string& path, F item) {
  if (!j.is_array()) fail(path, "expected a list");
  std::vector<T> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(item(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

MeasureConfig parse_measure(const json& j) {
  const std::string p = "measure";
  only_keys(j, p, {"type", "name", "coeffs", "a", "samples", "atoms", "gridSize", "rate", "sigma", "length"});
  MeasureConfig m;
  if (!j.contains("type") || !j["type"].is_string()) fail(p + ".type", "required string");
  m.type = j["type"];
  static const std::set<std::string> types{"trigpoly", "grid", "family", "verblunsky"};
  if (!types.count(m.type)) fail(p + ".type", "must be trigpoly, grid, family or verblunsky");
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(p + ".name", "expected a string");
    m.name = j["name"];
  }
  if (j.contains("coeffs")) m.coeffs = as_list<cplx>(j["coeffs"], p + ".coeffs", as_complex);
  if (j.contains("a")) {
    if (j["a"].is_array() && !(j["a"].size() == 2 && m.type == "family" && m.name == "geronimus"))
      m.a = as_list<cplx>(j["a"], p + ".a", as_complex);
    else
      m.a = {as_complex(j["a"], p + ".a")};
  }
  if (j.contains("samples")) m.samples = as_list<double>(j["samples"], p + ".samples", as_number);
  if (j.contains("atoms")) {
    m.atoms = as_list<Atom>(j["atoms"], p + ".atoms", [](const json& e, const std::string& q) {
      if (!e.is_array() || e.size() != 2) fail(q, "expected [theta, mass]");
      return Atom{as_number(e[0], q + "[0]"), as_number(e[1], q + "[1]")};
    });
  }
  if (j.contains("gridSize")) m.gridSize = as_int(j["gridSize"], p + ".gridSize");
  if (j.contains("rate")) m.rate = as_number(j["rate"], p + ".rate");
  if (j.contains("sigma")) m.sigma = as_number(j["sigma"], p + ".sigma");
  if (j.contains("length")) m.length = as_int(j["length"], p + ".length");
  if (m.type == "family") {
    bool found = false;
    for (const auto& f : family_catalog()) found = found || f.name == m.name;
    if (!found) fail(p + ".name", "unknown family '" + m.name + "' (see `families`)");
  }
  return m;
}

GridConfig parse_grids(const json& j) {
  const std::string p = "grids";
  only_keys(j, p, {"radii", "angles", "nMax", "nList", "xi", "radialA", "stolzRho", "tMax", "tPoints", "window", "zStar"});
  GridConfig g;
  if (j.contains("radii")) g.radii = as_list<double>(j["radii"], p + ".radii", as_number);
  if (j.contains("angles")) g.angles = as_int(j["angles"], p + ".angles");
  if (j.contains("nMax")) g.nMax = as_int(j["nMax"], p + ".nMax");
  if (j.contains("nList")) g.nList = as_list<int>(j["nList"], p + ".nList", as_int);
  if (j.contains("xi")) g.xi = as_list<double>(j["xi"], p + ".xi", as_number);
  if (j.contains("radialA")) g.radialA = as_number(j["radialA"], p + ".radialA");
  if (j.contains("stolzRho")) g.stolzRho = as_number(j["stolzRho"], p + ".stolzRho");
  if (j.contains("tMax")) g.tMax = as_number(j["tMax"], p + ".tMax");
  if (j.contains("tPoints")) g.tPoints = as_int(j["tPoints"], p + ".tPoints");
  if (j.contains("window")) g.window = as_number(j["window"], p + ".window");
  if (j.contains("zStar")) g.zStar = as_complex(j["zStar"], p + ".zStar");
  for (double r : g.radii)
    if (!(r >= 0.0 && r < 1.0)) fail(p + ".radii", "radii must lie in [0, 1)");
  if (g.angles < 1 || g.nMax < 0 || g.tPoints < 2) fail(p, "angles >= 1, nMax >= 0 and tPoints >= 2 are required");
  for (int n : g.nList)
    if (n < 1) fail(p + ".nList", "degrees must be >= 1");
  return g;
}

}  // namespace

const std::vector<std::string>& known_tasks() {
  static const std::vector<std::string> t{"verify-identities", "entropy-grid", "theorem2-scan", "rescaled-zeros"};
  return t;
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t{
      {"szego", 1e-8},          {"theorem1", 1e-7},      {"entropy-forms", 1e-7}, {"chain", 1e-7},
      {"monotonicity", 1e-9},   {"khrushchev", 1e-8},    {"khrushchev-entropy", 1e-6},
      {"wall", 1e-10},          {"iterate-routes", 1e-8}, {"cd-norm", 1e-6},      {"verblunsky-paths", 1e-8},
      {"bs-approximant", 1e-6}, {"vn-argument", 1e-6},   {"clark", 1e-7},         {"ratio-cap", 100.0},
      {"root", 1e-10},
  };
  return t;
}

ExperimentConfig parse_experiment_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const size_t pos = std::min<size_t>(e.byte, text.size());
    const size_t line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(pos ? pos - 1 : 0), '\n');
    const size_t nl = text.rfind('\n', pos ? pos - 1 : 0);
    const size_t col = nl == std::string::npos ? pos : pos - nl - 1;
    std::ostringstream os;
    os << "syntax error at line " << line << ", column " << col << ": " << e.what();
    throw Error(ErrorKind::Config, os.str());
  }
  only_keys(j, "config", {"measure", "tasks", "grids", "tolerances", "seed", "output"});
  ExperimentConfig cfg;
  if (!j.contains("measure")) fail("config.measure", "required");
  cfg.measure = parse_measure(j["measure"]);
  if (j.contains("tasks")) {
    cfg.tasks = as_list<std::string>(j["tasks"], "tasks", [](const json& e, const std::string& q) {
      if (!e.is_string()) fail(q, "expected a task name");
      const std::string s = e;
      const auto& k = known_tasks();
      if (std::find(k.begin(), k.end(), s) == k.end()) fail(q, "unknown task '" + s + "'");
      return s;
    });
  } else {
    cfg.tasks = {"verify-identities"};
  }
  if (j.contains("grids")) cfg.grids = parse_grids(j["grids"]);
  if (j.contains("tolerances")) {
    if (!j["tolerances"].is_object()) fail("tolerances", "expected an object");
    for (const auto& [k, v] : j["tolerances"].items()) set_tolerance(cfg, k, as_number(v, "tolerances." + k));
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail("seed", "expected a nonnegative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("output")) {
    const auto& o = j["output"];
    only_keys(o, "output", {"dir", "csv", "json"});
    if (o.contains("dir")) {
      if (!o["dir"].is_string()) fail("output.dir", "expected a string");
      cfg.output.dir = o["dir"];
    }
    if (o.contains("csv")) {
      if (!o["csv"].is_boolean()) fail("output.csv", "expected true or false");
      cfg.output.csv = o["csv"];
    }
    if (o.contains("json")) {
      if (!o["json"].is_boolean()) fail("output.json", "expected true or false");
      cfg.output.json = o["json"];
    }
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_experiment_config(ss.str());
}

void set_tolerance(ExperimentConfig& cfg, const std::string& name, double value) {
  if (!default_tolerances().count(name)) fail("tolerances." + name, "unknown tolerance");
  if (!(value >= 100.0 * std::numeric_limits<double>::epsilon()))
    fail("tolerances." + name, "must be at least 100 machine epsilon");
  cfg.tolerances[name] = value;
}

double tolerance(const ExperimentConfig& cfg, const std::string& name) {
  auto it = cfg.tolerances.find(name);
  if (it != cfg.tolerances.end()) return it->second;
  return default_tolerances().at(name);
}

CircleMeasure build_measure(const MeasureConfig& m, std::uint64_t seed) {
  const int M = m.gridSize;
  auto with_atoms = [&m](CircleMeasure mu) {
    if (m.atoms.empty()) return mu;
    double s = 0.0;
    for (const auto& a : m.atoms) s += a.mass;
    if (!(s < 1.0)) throw Error(ErrorKind::Config, "measure.atoms: masses must sum to less than 1");
    std::vector<double> pub = mu.density();
    for (auto& v : pub) v *= 1.0 - s;
    CircleMeasure::Density pw;
    if (mu.has_pointwise_density()) pw = [mu, s](double t) { return (1.0 - s) * mu.density_at(t); };
    if (pw) return CircleMeasure::from_density(pw, mu.grid_size(), m.atoms, mu.zeros(), mu.label() + " + atoms");
    return CircleMeasure::from_grids(pub, {}, 0.0, m.atoms, mu.zeros(), mu.label() + " + atoms");
  };
  if (m.type == "trigpoly") return with_atoms(trigpoly(m.coeffs, M));
  if (m.type == "verblunsky") return with_atoms(bernstein_szego(m.a, M));
  if (m.type == "grid") {
    auto mu = normalize(CircleMeasure::from_samples(m.samples, {}, "grid"));
    return with_atoms(mu);
  }
  if (m.name == "lebesgue") return with_atoms(lebesgue(M));
  if (m.name == "bernstein-szego") return with_atoms(bernstein_szego(m.a, M));
  if (m.name == "geronimus") return with_atoms(geronimus(m.a.empty() ? cplx{0.0} : m.a[0], M));
  if (m.name == "trigpoly") return with_atoms(trigpoly(m.coeffs, M));
  if (m.name == "atom-mixtures") return atom_mixture(m.atoms, M);
  if (m.name == "random-decaying") return with_atoms(random_decaying(seed, m.rate, m.sigma, m.length, M));
  throw Error(ErrorKind::Config, "measure.name: unknown family '" + m.name + "'");
}

}  // namespace opuc
