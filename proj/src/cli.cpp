#include "nhydro/cli.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "nhydro/errata.hpp"
#include "nhydro/hydrogenic.hpp"
#include "nhydro/verify.hpp"

namespace nhydro::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int N = 3;
  int n = 1;
  int l = 0;
  std::string mu;
  double grid_min = 0.0;
  double grid_max = 10.0;
  int grid_count = 101;
  std::string grid_scale = "linear";
  std::string out_path;
  std::string format = "csv";
  double tol = 1e-10;
  int nodes = 256;
  double truncation_radius = 40.0;
  int max_refinements = 6;
  std::vector<std::string> suites;
  int n_max = 6;
  int only_N = 0;
  bool all = false;
  bool list = false;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) {
      continue;
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) {
      throw std::invalid_argument("--mu: not an integer: " + item);
    }
    out.push_back(v);
  }
  return out;
}

hydrogenic::HState build_state(const Options& o) {
  hydrogenic::HState st;
  st.N = o.N;
  st.n = o.n;
  st.l = o.l;
  st.chain.l = o.l;
  if (o.mu.empty()) {
    st.chain.mu.assign(static_cast<std::size_t>(std::max(o.N - 2, 0)), 0);
  } else {
    st.chain.mu = parse_int_list(o.mu);
  }
  hydrogenic::validate_state(st);
  return st;
}

std::vector<double> build_grid(const Options& o) {
  if (o.grid_count < 2) {
    throw std::invalid_argument("grid count must be at least 2");
  }
  if (!(o.grid_max > o.grid_min) || o.grid_min < 0.0) {
    throw std::invalid_argument("grid must satisfy 0 <= grid-min < grid-max");
  }
  std::vector<double> g;
  const int last = o.grid_count - 1;
  if (o.grid_scale == "log") {
    if (!(o.grid_min > 0.0)) {
      throw std::invalid_argument("log grid requires grid-min > 0");
    }
    for (int i = 0; i <= last; ++i) {
      g.push_back(o.grid_min * std::pow(o.grid_max / o.grid_min, static_cast<double>(i) / last));
    }
  } else {
    for (int i = 0; i <= last; ++i) {
      g.push_back(o.grid_min + (o.grid_max - o.grid_min) * i / last);
    }
  }
  g.back() = o.grid_max;
  return g;
}

quad::QuadratureSpec build_quad(const Options& o) {
  if (o.nodes < 16 || !(o.tol > 0.0) || !(o.truncation_radius > 0.0) || o.max_refinements < 1) {
    throw std::invalid_argument("quadrature settings out of range");
  }
  quad::QuadratureSpec q;
  q.node_count = o.nodes;
  q.target_rel_tol = o.tol;
  q.truncation_radius = o.truncation_radius;
  q.max_refinements = o.max_refinements;
  return q;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw IoError("cannot open output file: " + path);
  }
  f << text;
  f.close();
  if (!f) {
    throw IoError("failed writing output file: " + path);
  }
}

// Reference direction for |Psi| and its phase: theta_j = pi/3, phi = pi/4.
hypersphere::SphericalPoint reference_point(int N, double radius) {
  return {radius, std::vector<double>(static_cast<std::size_t>(N - 2), std::numbers::pi / 3),
          std::numbers::pi / 4};
}

std::string mu_text(const hydrogenic::HState& st) {
  std::string s;
  for (int m : st.chain.mu) {
    s += (s.empty() ? "" : ",") + std::to_string(m);
  }
  return s;
}

int cmd_tabulate(const Options& o, bool momentum, std::ostream& out) {
  if (o.format != "csv" && o.format != "json") {
    throw std::invalid_argument("format must be csv or json");
  }
  const hydrogenic::HState st = build_state(o);
  const std::vector<double> grid = build_grid(o);
  const hydrogenic::ScaleParams sp = hydrogenic::scale_params(st);
  const char* var = momentum ? "p" : "r";

  struct Row {
    double x, radial, abs_psi, phase;
  };
  std::vector<Row> rows;
  for (double x : grid) {
    const auto pt = reference_point(st.N, x);
    const double radial = momentum ? hydrogenic::radial_momentum(st, x)
                                   : hydrogenic::radial_position(st, x);
    const std::complex<double> psi = momentum ? hydrogenic::momentum_wavefunction(st, pt)
                                              : hydrogenic::position_wavefunction(st, pt);
    rows.push_back({x, radial, std::abs(psi), psi == 0.0 ? 0.0 : std::arg(psi)});
  }

  using verify::format_shortest;
  std::ostringstream os;
  if (o.format == "csv") {
    os << "# nhydro " << verify::kToolkitVersion << " tabulate-" << (momentum ? "momentum" : "position")
       << "\n";
    os << "# state N=" << st.N << " n=" << st.n << " l=" << st.l << " mu=" << mu_text(st) << "\n";
    os << "# delta=" << format_shortest(sp.delta) << " energy=" << format_shortest(sp.energy) << "\n";
    os << "# reference_angles theta=" << format_shortest(std::numbers::pi / 3)
       << " phi=" << format_shortest(std::numbers::pi / 4) << "\n";
    os << var << ",radial,abs_psi,phase\n";
    for (const Row& r : rows) {
      os << format_shortest(r.x) << ',' << format_shortest(r.radial) << ','
         << format_shortest(r.abs_psi) << ',' << format_shortest(r.phase) << "\n";
    }
  } else {
    nlohmann::json table = nlohmann::json::array();
    for (const Row& r : rows) {
      table.push_back({r.x, r.radial, r.abs_psi, r.phase});
    }
    const nlohmann::json doc = {
        {"toolkit_version", verify::kToolkitVersion},
        {"space", momentum ? "momentum" : "position"},
        {"state", {{"N", st.N}, {"n", st.n}, {"l", st.l}, {"mu", st.chain.mu}}},
        {"delta", sp.delta},
        {"energy", sp.energy},
        {"reference_angles", {{"theta", std::numbers::pi / 3}, {"phi", std::numbers::pi / 4}}},
        {"columns", {var, "radial", "abs_psi", "phase"}},
        {"rows", table}};
    os << doc.dump(2) << "\n";
  }
  emit(os.str(), o.out_path, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.list) {
    for (const auto& s : verify::registry()) {
      out << s.id << "\t";
      for (std::size_t i = 0; i < s.identities.size(); ++i) {
        out << (i ? "," : "") << s.identities[i];
      }
      out << "\t" << s.description << "\n";
    }
    return kOk;
  }
  if (o.format != "csv" && o.format != "json") {
    throw std::invalid_argument("format must be csv or json");
  }
  if (o.n_max < 1) {
    throw std::invalid_argument("n-max must be positive");
  }
  if (o.only_N != 0 && o.only_N < 3) {
    throw std::invalid_argument("dimension N must be at least 3");
  }
  std::vector<std::string> ids = o.all ? std::vector<std::string>{} : o.suites;
  if (!o.all && ids.empty()) {
    throw std::invalid_argument("name a suite, or pass --all");
  }
  for (const auto& id : ids) {
    if (verify::find_suite(id) == nullptr) {
      throw std::invalid_argument("unknown suite: " + id);
    }
  }
  verify::VerifyOptions vo;
  vo.quad = build_quad(o);
  vo.only_N = o.only_N;
  vo.n_max = o.n_max;
  const verify::Report report = verify::run_suites(ids, vo);
  const std::string text = o.format == "json" ? verify::to_json(report) : verify::to_csv(report);
  emit(text, o.out_path, out);
  std::ostream& summary = o.out_path.empty() ? err : out;
  for (const auto& s : report.suites) {
    summary << s.suite << ": " << s.passed() << "/" << s.checks.size() << " passed\n";
  }
  return report.all_passed() ? kOk : kVerificationFailed;
}

int cmd_errata(const Options& o, std::ostream& out) {
  if (o.format == "json") {
    emit(errata::render_json(), o.out_path, out);
  } else {
    emit(errata::render_text(), o.out_path, out);
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hydrogenic wavefunctions in N dimensions: tabulation and verification", "nhydro"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(verify::kToolkitVersion));

  Options o;
  // Options live on the top-level app so that a flat key=value config file
  // reaches them; subcommands fall through.
  app.set_config("--config", "", "key=value settings file; flags win")
      ->envname("NHYDRO_CONFIG");
  app.add_option("--N", o.N, "dimension (verify: restrict sweeps to this N)");
  app.add_option("--n", o.n, "principal quantum number");
  app.add_option("--l", o.l, "orbital quantum number");
  app.add_option("--mu", o.mu, "angular chain mu_2,...,mu_{N-1} (last entry is signed m)");
  app.add_option("--grid-min", o.grid_min, "first grid point");
  app.add_option("--grid-max", o.grid_max, "last grid point");
  app.add_option("--grid-count", o.grid_count, "number of grid points (>= 2)");
  app.add_option("--grid-scale", o.grid_scale, "linear or log")
      ->check(CLI::IsMember({"linear", "log"}));
  app.add_option("--out", o.out_path, "output path (default stdout)");
  app.add_option("--format", o.format, "csv or json; errata also accepts text")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--tol", o.tol, "quadrature target relative tolerance");
  app.add_option("--nodes", o.nodes, "initial quadrature node budget");
  app.add_option("--truncation-radius", o.truncation_radius, "domain cut-off in decay lengths");
  app.add_option("--max-refinements", o.max_refinements, "quadrature doublings");
  app.add_option("--suite", o.suites, "verification suite (repeatable)");
  app.add_option("--n-max", o.n_max, "largest n in the state sweeps");
  app.add_flag("--all", o.all, "run every suite");
  app.add_flag("--list", o.list, "list suites and their identities");

  auto* tab_pos = app.add_subcommand("tabulate-position", "tabulate R(r) and psi(r) on a grid");
  auto* tab_mom = app.add_subcommand("tabulate-momentum", "tabulate F(p) and Psi(p) on a grid");
  auto* ver = app.add_subcommand("verify", "run verification suites");
  auto* err_cmd = app.add_subcommand("errata", "print the errata ledger");
  ver->add_option("suites", o.suites, "suite ids");
  for (auto* sub : {tab_pos, tab_mom, ver, err_cmd}) {
    sub->fallthrough();
  }

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << verify::kToolkitVersion << "\n";
    return kOk;
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  const bool n_given = app.count("--N") > 0;
  try {
    if (tab_pos->parsed()) {
      return cmd_tabulate(o, false, out);
    }
    if (tab_mom->parsed()) {
      return cmd_tabulate(o, true, out);
    }
    if (ver->parsed()) {
      Options vo = o;
      vo.only_N = n_given ? o.N : 0;
      if (vo.format == "text") {
        throw std::invalid_argument("format must be csv or json");
      }
      if (app.count("--format") == 0) {
        vo.format = "json";
      }
      return cmd_verify(vo, out, err);
    }
    return cmd_errata(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace nhydro::cli
