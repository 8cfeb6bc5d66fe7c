// alphadisk command-line surface: kernel tables, Dirichlet solves, and
// verification sweeps with deterministic CSV/JSON output.
//
// exit codes: 0 success, 1 failed bound, 2 usage, 3 numerical failure

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alphadisk/core.hpp"
#include "alphadisk/estimates.hpp"
#include "alphadisk/kernels.hpp"
#include "alphadisk/quadrature.hpp"
#include "alphadisk/solver.hpp"
#include "alphadisk/transforms.hpp"
#include "json.hpp"

namespace {

using namespace alphadisk;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  // column-major, aligned with columns
  std::vector<bool> present;              // row mask for optional cells (all columns share it)

  explicit Table(std::vector<std::string> cols) : columns(std::move(cols)) {
    data.resize(columns.size());
  }
  void push_row(const std::vector<double>& row) {
    for (std::size_t c = 0; c < columns.size(); ++c) data[c].push_back(row[c]);
    present.push_back(true);
  }
  std::size_t rows() const { return data.empty() ? 0 : data[0].size(); }
};

void write_table_csv(std::ostream& os, const Table& t,
                     const std::vector<std::vector<bool>>* cell_mask = nullptr) {
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    os << (c ? "," : "") << t.columns[c];
  os << "\n";
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) os << ",";
      if (!cell_mask || (*cell_mask)[c][r]) os << fmt17(t.data[c][r]);
    }
    os << "\n";
  }
}

json spec_json(const QuadratureSpec& spec) {
  return json{{"circle_nodes", spec.circle_nodes},
              {"radial_nodes", spec.radial_nodes},
              {"singular_ring_levels", spec.singular_ring_levels},
              {"abs_tol", spec.abs_tol},
              {"rel_tol", spec.rel_tol}};
}

json metadata_json(double alpha, const QuadratureSpec& spec) {
  return json{{"alpha", alpha},
              {"spec", spec_json(spec)},
              {"versions", json{{"alphadisk", kVersion}, {"format", 1}}}};
}

void write_table_json(std::ostream& os, const Table& t, const json& meta,
                      const std::vector<std::vector<bool>>* cell_mask = nullptr) {
  json out;
  out["metadata"] = meta;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    json col = json::array();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (!cell_mask || (*cell_mask)[c][r])
        col.push_back(t.data[c][r]);
      else
        col.push_back(nullptr);
    }
    out[t.columns[c]] = std::move(col);
  }
  os << out.dump(2) << "\n";
}

void write_report_csv(std::ostream& os, const BoundReport& rep) {
  os << "label,lhs,rhs,ratio,pass\n";
  for (const auto& s : rep.samples)
    os << s.label << "," << fmt17(s.lhs) << "," << fmt17(s.rhs) << "," << fmt17(s.ratio) << ","
       << (s.pass ? 1 : 0) << "\n";
}

void write_report_json(std::ostream& os, const BoundReport& rep, const json& meta) {
  json out;
  out["metadata"] = meta;
  out["name"] = rep.name;
  out["notes"] = rep.notes;
  out["ratio_limit"] = rep.ratio_limit;
  out["all_pass"] = rep.pass;
  json label = json::array(), lhs = json::array(), rhs = json::array(), ratio = json::array(),
       pass = json::array();
  for (const auto& s : rep.samples) {
    label.push_back(s.label);
    lhs.push_back(s.lhs);
    rhs.push_back(s.rhs);
    ratio.push_back(s.ratio);
    pass.push_back(s.pass);
  }
  out["label"] = std::move(label);
  out["lhs"] = std::move(lhs);
  out["rhs"] = std::move(rhs);
  out["ratio"] = std::move(ratio);
  out["pass"] = std::move(pass);
  os << out.dump(2) << "\n";
}

// writes through a file or stdout, opened lazily so a compute error before
// output leaves no half-written file behind
struct Sink {
  std::string path;  // "-" means stdout
  std::ofstream file;
  std::ostream& open() {
    if (path == "-") return std::cout;
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open output file '" + path + "'");
    return file;
  }
};

// ---- built-ins -------------------------------------------------------------

BoundarySignal builtin_signal(const std::string& name, std::size_t nodes) {
  if (name == "zero")
    return BoundarySignal::from_rule([](double) { return cplx(0.0, 0.0); }, nodes);
  if (name == "one") return BoundarySignal::from_rule([](double) { return cplx(1.0, 0.0); }, nodes);
  if (name == "cos")
    return BoundarySignal::from_rule([](double t) { return cplx(std::cos(t), 0.0); }, nodes);
  if (name == "sin")
    return BoundarySignal::from_rule([](double t) { return cplx(std::sin(t), 0.0); }, nodes);
  if (name == "abs-sin")
    return BoundarySignal::from_rule([](double t) { return cplx(std::abs(std::sin(t)), 0.0); },
                                     nodes);
  if (name.rfind("cosk:", 0) == 0) {
    const double k = std::stod(name.substr(5));
    return BoundarySignal::from_rule([k](double t) { return cplx(std::cos(k * t), 0.0); }, nodes);
  }
  throw DomainError("unknown boundary signal '" + name +
                    "' (built-ins: zero, one, cos, sin, cosk:<k>, abs-sin)");
}

DiskField builtin_field(const std::string& name) {
  if (name == "zero")
    return DiskField::from_rule([](const DiskPoint&) { return cplx(0.0, 0.0); }, 0.0);
  if (name == "one")
    return DiskField::from_rule([](const DiskPoint&) { return cplx(1.0, 0.0); }, 0.0);
  if (name == "manufactured1")
    return DiskField::from_rule(
        [](const DiskPoint& z) { return cplx(std::pow(z.one_minus_abs2(), -2.0), 0.0); }, 2.0);
  if (name.rfind("envelope:", 0) == 0) {
    const double beta = std::stod(name.substr(9));
    if (!(beta >= 0.0)) throw DomainError("envelope exponent must be >= 0");
    return DiskField::from_rule(
        [beta](const DiskPoint& z) { return cplx(std::pow(z.one_minus_abs2(), -beta), 0.0); },
        beta);
  }
  throw DomainError("unknown field '" + name +
                    "' (built-ins: zero, one, manufactured1, envelope:<beta>)");
}

// ---- sampled-file inputs ---------------------------------------------------

std::vector<std::vector<double>> read_csv_rows(const std::string& path,
                                               const std::string& want_header) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read input file '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw DomainError("empty input file '" + path + "'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != want_header)
    throw DomainError("input '" + path + "' must start with header '" + want_header + "'");
  const std::size_t ncols = std::count(want_header.begin(), want_header.end(), ',') + 1;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != ncols)
      throw DomainError("input '" + path + "': expected " + std::to_string(ncols) +
                        " columns, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DomainError("input '" + path + "' has no data rows");
  return rows;
}

BoundarySignal load_signal(const std::string& path) {
  const auto rows = read_csv_rows(path, "theta,re,im");
  const std::size_t n = rows.size();
  std::vector<cplx> samples(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double want = two_pi * static_cast<double>(k) / static_cast<double>(n);
    if (std::abs(rows[k][0] - want) > 1e-9)
      throw DomainError("input '" + path + "': theta must be the uniform grid 2 pi k / n");
    samples[k] = cplx(rows[k][1], rows[k][2]);
  }
  return BoundarySignal::from_samples(samples);
}

DiskField load_field(const std::string& path) {
  const auto rows = read_csv_rows(path, "r,theta,re,im");
  PolarGrid grid;
  std::size_t k = 0;
  while (k < rows.size()) {
    const double r = rows[k][0];
    std::size_t count = 0;
    while (k + count < rows.size() && rows[k + count][0] == r) ++count;
    if (grid.radii.empty()) {
      grid.angular = count;
    } else if (count != grid.angular) {
      throw DomainError("input '" + path + "': every radius needs the same angular count");
    }
    grid.radii.push_back(r);
    for (std::size_t j = 0; j < count; ++j)
      grid.values.emplace_back(rows[k + j][2], rows[k + j][3]);
    k += count;
  }
  return DiskField::from_grid(grid, std::nullopt);
}

BoundarySignal resolve_signal(const std::string& name, std::size_t nodes) {
  if (std::filesystem::exists(name)) return load_signal(name);
  return builtin_signal(name, nodes);
}

DiskField resolve_field(const std::string& name) {
  if (std::filesystem::exists(name)) return load_field(name);
  return builtin_field(name);
}

// ---- shared option plumbing -------------------------------------------------

struct CommonOpts {
  double alpha = 1.0;
  std::string out = "-";
  std::string format = "csv";
  std::size_t circle_nodes = 256;
  std::size_t radial_nodes = 12;
  std::size_t ring_levels = 8;
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;

  QuadratureSpec spec() const {
    return QuadratureSpec::checked(circle_nodes, radial_nodes, ring_levels, abs_tol, rel_tol);
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool alpha_required) {
  auto* a = cmd->add_option("--alpha", o.alpha, "weight exponent, must be > -1");
  if (alpha_required) a->required();
  cmd->add_option("--out", o.out, "output path, or - for stdout");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--circle-nodes", o.circle_nodes, "angular nodes for disk/circle rules");
  cmd->add_option("--radial-nodes", o.radial_nodes, "Gauss nodes per radial panel");
  cmd->add_option("--ring-levels", o.ring_levels, "geometric panel levels near singular points");
  cmd->add_option("--abs-tol", o.abs_tol, "refinement check absolute tolerance");
  cmd->add_option("--rel-tol", o.rel_tol, "refinement check relative tolerance");
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos || x == 0 || x + 1 == s.size())
    throw DomainError("grid must look like RxT, e.g. 8x16");
  const long r = std::stol(s.substr(0, x));
  const long t = std::stol(s.substr(x + 1));
  if (r < 1 || t < 1) throw DomainError("grid dimensions must be positive");
  return {static_cast<std::size_t>(r), static_cast<std::size_t>(t)};
}

std::vector<double> parse_radii(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

// ---- kernel ------------------------------------------------------------------

struct KernelOpts {
  CommonOpts common;
  std::string grid = "8x16";
  std::vector<double> point;  // re im
  std::vector<double> ref{0.0, 0.0};
  double theta = 0.0;
};

int run_kernel(const KernelOpts& o) {
  const AlphaWeight a = validate_alpha(o.common.alpha);
  const DiskPoint ref(o.ref[0], o.ref[1]);
  std::vector<DiskPoint> pts;
  if (!o.point.empty()) {
    pts.emplace_back(o.point[0], o.point[1]);
  } else {
    const auto [nr, nt] = parse_grid(o.grid);
    for (std::size_t i = 0; i < nr; ++i) {
      const double r = static_cast<double>(i + 1) / static_cast<double>(nr + 1);
      for (std::size_t j = 0; j < nt; ++j) {
        const double t = two_pi * static_cast<double>(j) / static_cast<double>(nt);
        pts.emplace_back(std::polar(r, t));
      }
    }
  }
  const BoundaryAngle th(o.theta);

  Table table({"radius", "theta", "p_re", "p_im", "v_re", "v_im", "g_re", "g_im", "q", "h"});
  for (const DiskPoint& z : pts) {
    const cplx p = poisson_kernel_alpha(z, a);
    const cplx v = v_kernel(z, th, a);
    const cplx g = green_alpha(z, ref, a);
    const double q = pseudo_hyperbolic(z, ref);
    const double hv = h_alpha(q, a);
    double ang = std::arg(z.value());
    if (ang < 0.0) ang += two_pi;
    table.push_row({z.abs(), ang, p.real(), p.imag(), v.real(), v.imag(), g.real(), g.imag(), q,
                    hv});
  }

  Sink sink{o.common.out, {}};
  std::ostream& os = sink.open();
  if (o.common.format == "json")
    write_table_json(os, table, metadata_json(a.alpha(), o.common.spec()));
  else
    write_table_csv(os, table);
  return 0;
}

// ---- solve -------------------------------------------------------------------

struct SolveOpts {
  CommonOpts common;
  std::string f = "zero";
  std::string g = "zero";
  std::string grid = "6x12";
  double rmax = 0.9;
  std::size_t nodes = 256;
};

int run_solve(const SolveOpts& o) {
  const AlphaWeight a = validate_alpha(o.common.alpha);
  const QuadratureSpec spec = o.common.spec();
  const BoundarySignal f = resolve_signal(o.f, o.nodes);
  const DiskField g = resolve_field(o.g);
  if (!(o.rmax > 0.0 && o.rmax < 1.0)) throw DomainError("--rmax must lie in (0, 1)");

  const auto [nr, nt] = parse_grid(o.grid);
  std::vector<DiskPoint> pts;
  for (std::size_t i = 0; i < nr; ++i) {
    const double r = o.rmax * static_cast<double>(i + 1) / static_cast<double>(nr);
    for (std::size_t j = 0; j < nt; ++j)
      pts.emplace_back(std::polar(r, two_pi * static_cast<double>(j) / static_cast<double>(nt)));
  }

  const auto problem = DirichletProblem::make(a, f, g, spec);
  const SolveReport rep = solve(problem, pts);

  Table table({"radius", "theta", "u_re", "u_im", "v_re", "v_im", "potential_re", "potential_im",
               "residual_rel"});
  std::vector<std::vector<bool>> mask(table.columns.size());
  for (std::size_t k = 0; k < rep.points.size(); ++k) {
    const auto& pr = rep.points[k];
    double ang = std::arg(pr.w.value());
    if (ang < 0.0) ang += two_pi;
    double res = 0.0;
    bool have_res = false;
    for (const auto& rp : rep.residuals)
      if (rp.z.value() == pr.w.value()) {
        res = rp.rel_err;
        have_res = true;
        break;
      }
    table.push_row({pr.w.abs(), ang, pr.u.real(), pr.u.imag(), pr.v.real(), pr.v.imag(),
                    pr.potential.real(), pr.potential.imag(), res});
    for (std::size_t c = 0; c + 1 < table.columns.size(); ++c) mask[c].push_back(pr.ok);
    mask.back().push_back(have_res);
  }

  Sink sink{o.common.out, {}};
  std::ostream& os = sink.open();
  if (o.common.format == "json")
    write_table_json(os, table, metadata_json(a.alpha(), spec), &mask);
  else
    write_table_csv(os, table, &mask);

  if (rep.failures > 0) {
    std::cerr << rep.failures << " point(s) failed:\n";
    for (const auto& pr : rep.points)
      if (!pr.ok)
        std::cerr << "  (" << fmt17(pr.w.re()) << ", " << fmt17(pr.w.im()) << "): " << pr.error
                  << "\n";
    return 3;
  }
  return 0;
}

// ---- verify ------------------------------------------------------------------

BoundReport sweep_m1(const QuadratureSpec& spec) {
  BoundReport rep;
  rep.name = "m1";
  std::vector<double> radii;
  for (int k = 2; k <= 19; ++k) radii.push_back(0.05 * k);  // 0.10 .. 0.95
  radii.push_back(0.99);
  radii.push_back(0.999);
  for (double r : radii)
    rep.add("r=" + fmt17(r), compute_M1(r, spec), 2.0 * two_pi + 1e-6);
  rep.notes = "M1(r) against the uniform 4 pi ceiling";
  return rep;
}

BoundReport sweep_circle_power(const QuadratureSpec& spec) {
  BoundReport rep;
  rep.name = "circle-power";
  for (double beta : {2.0, 3.0, 4.0}) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, dev = 0.0;
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        const double r = (i + 0.5) / 20.0;
        const double rho = (j + 0.5) / 20.0;
        const CirclePowerResult res = circle_power_integral(r, rho, beta, spec);
        lo = std::min(lo, res.ratio);
        hi = std::max(hi, res.ratio);
        if (beta == 2.0) dev = std::max(dev, std::abs(res.value - two_pi / (1.0 - r * r * rho * rho)));
      }
    rep.add("beta=" + fmt17(beta) + " spread", hi / lo, 10.0);
    if (beta == 2.0) rep.add("beta=2 closed-form deviation", dev, 1e-8);
  }
  rep.notes = "normalized circle integrals over the 20x20 radius grid";
  return rep;
}

BoundReport sweep_i1(const QuadratureSpec& spec) {
  BoundReport rep;
  rep.name = "i1";
  for (double al : {0.5, 1.0, 2.0}) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (double r : {0.5, 0.9, 0.99, 0.999}) {
      const double ratio =
          compute_I1(DiskPoint(r, 0.0), AlphaWeight(al), spec) / std::pow(1.0 - r * r, al);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    rep.add("alpha=" + fmt17(al) + " spread", hi / lo, 10.0);
  }
  rep.add("center alpha=0",
          std::abs(compute_I1(DiskPoint(0.0, 0.0), AlphaWeight(0.0), spec) - two_pi / 3.0), 1e-6);
  rep.add("center alpha=1",
          std::abs(compute_I1(DiskPoint(0.0, 0.0), AlphaWeight(1.0), spec) - 8.0 * two_pi / 30.0),
          1e-6);
  rep.notes = "I1 companion ratios over |w| in {0.5, 0.9, 0.99, 0.999}";
  return rep;
}

BoundReport sweep_i2(const QuadratureSpec& spec) {
  BoundReport rep;
  rep.name = "i2";
  // the companion ratio is only bounded above: it decays near the rim like
  // (1 - |w|^2) log(1/(1 - |w|)), so a two-sided spread check would reject the
  // true values.  Test that the rim never exceeds twice the mid-disk level.
  for (double al : {0.5, 1.0, 2.0}) {
    const auto ratio_at = [&](double r) {
      return compute_I2(DiskPoint(r, 0.0), AlphaWeight(al), spec) / std::pow(1.0 - r * r, al);
    };
    const double mid = ratio_at(0.5);
    double hi = 0.0;
    for (double r : {0.9, 0.99, 0.999}) hi = std::max(hi, ratio_at(r));
    rep.add("alpha=" + fmt17(al) + " rim/mid", hi, 2.0 * mid);
  }
  rep.add("center alpha=1",
          std::abs(compute_I2(DiskPoint(0.0, 0.0), AlphaWeight(1.0), spec) - 17.0 * two_pi / 36.0),
          1e-6);
  rep.notes = "I2 companion ratios over |w| in {0.5, 0.9, 0.99, 0.999}";
  return rep;
}

BoundReport sweep_green_bounds(double alpha, std::size_t pairs, std::uint64_t seed) {
  const AlphaWeight a = validate_alpha(alpha);
  BoundReport rep;
  rep.name = "green-bounds";
  rep.ratio_limit = 1.0 + 1e-3;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const GreenEvalConfig cfg;
  std::size_t made = 0;
  while (made < pairs) {
    const DiskPoint z(std::polar(0.9 * std::sqrt(unit(rng)), two_pi * unit(rng)));
    const DiskPoint w(std::polar(0.9 * std::sqrt(unit(rng)), two_pi * unit(rng)));
    if (std::abs(z.value() - w.value()) < 0.05) continue;
    const BoundReport one = verify_green_derivative_bounds(z, w, a, cfg, 1e-5);
    for (const auto& s : one.samples)
      rep.add("p" + std::to_string(made) + "." + s.label, s.lhs, s.rhs, s.ratio);
    ++made;
  }
  rep.notes = "finite-difference Green derivatives vs displayed bounds, " +
              std::to_string(pairs) + " pairs, seed " + std::to_string(seed);
  return rep;
}

BoundReport sweep_grin_lip(double alpha, const std::string& g_name,
                           const std::vector<double>& radii, const QuadratureSpec& spec) {
  const AlphaWeight a = validate_alpha(alpha);
  const DiskField g = resolve_field(g_name);
  return grin_lip_sweep(a, g, radii, spec);
}

double max_err(const BoundarySignal& got, const std::function<double(double)>& want) {
  double worst = 0.0;
  for (std::size_t k = 0; k < got.size(); ++k)
    worst = std::max(worst, std::abs(got.sample(k) - cplx(want(got.node(k)), 0.0)));
  return worst;
}

BoundReport sweep_hilbert() {
  BoundReport rep;
  rep.name = "hilbert";
  const auto mk = [](const std::function<double(double)>& f, std::size_t n) {
    return BoundarySignal::from_rule([&f](double t) { return cplx(f(t), 0.0); }, n);
  };
  const auto cosf = [](double t) { return std::cos(t); };
  const auto sinf = [](double t) { return std::sin(t); };
  const auto mcos = [](double t) { return -std::cos(t); };
  const auto onef = [](double) { return 1.0; };
  const auto zerof = [](double) { return 0.0; };

  rep.add("multiplier cos->sin", max_err(hilbert_transform(mk(cosf, 256), HilbertMethod::multiplier), sinf),
          1e-10);
  rep.add("multiplier sin->-cos", max_err(hilbert_transform(mk(sinf, 256), HilbertMethod::multiplier), mcos),
          1e-10);
  rep.add("multiplier const->0", max_err(hilbert_transform(mk(onef, 256), HilbertMethod::multiplier), zerof),
          1e-10);
  rep.add("pv cos->sin", max_err(hilbert_transform(mk(cosf, 512), HilbertMethod::pv), sinf), 1e-4);
  rep.add("pv sin->-cos", max_err(hilbert_transform(mk(sinf, 512), HilbertMethod::pv), mcos), 1e-4);
  rep.add("pv const->0", max_err(hilbert_transform(mk(onef, 512), HilbertMethod::pv), zerof), 1e-4);

  // H(H(psi)) must equal -(psi - mean) coefficient-for-coefficient, bitwise
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<cplx> samples(128);
  for (auto& s : samples) s = cplx(unit(rng), unit(rng));
  const auto spectrum = FourierSpectrum::analyze(BoundarySignal::from_samples(samples));
  const auto twice = spectrum.hilbert().hilbert();
  const long half = static_cast<long>(samples.size()) / 2;
  std::size_t mismatches = 0;
  for (long k = -half; k < half; ++k) {
    const cplx want = (k == 0 || k == -half) ? cplx(0.0, 0.0) : -spectrum.coeff(k);
    if (twice.coeff(k) != want) ++mismatches;
  }
  rep.add("double-transform coefficient mismatches", static_cast<double>(mismatches), 0.5);
  rep.notes = "closed transform pairs plus the exact double-transform identity";
  return rep;
}

BoundReport sweep_conjugate_identity(const QuadratureSpec& spec) {
  BoundReport rep;
  rep.name = "conjugate-identity";
  const auto cos1 = BoundarySignal::from_rule([](double t) { return cplx(std::cos(t), 0.0); }, 256);
  const auto sin3 =
      BoundarySignal::from_rule([](double t) { return cplx(std::sin(3.0 * t), 0.0); }, 256);
  const std::vector<std::pair<const char*, const BoundarySignal*>> cases{{"cos", &cos1},
                                                                         {"sin3", &sin3}};
  for (const auto& [name, sig] : cases) {
    const BoundReport one = conjugate_identity_check(*sig, 0.5, spec);
    for (const auto& s : one.samples) rep.add(std::string(name) + "." + s.label, s.lhs, s.rhs, s.ratio);
  }
  rep.notes = "radial derivative of the extension vs extension of the transformed derivative";
  return rep;
}

struct VerifyOpts {
  CommonOpts common;
  std::string sweep;
  std::string g = "envelope:1";
  std::string radii = "0.5,0.9,0.99";
  std::size_t pairs = 500;
  std::uint64_t seed = 1;
};

int run_verify(const VerifyOpts& o) {
  const QuadratureSpec spec = o.common.spec();
  BoundReport rep;
  if (o.sweep == "m1")
    rep = sweep_m1(spec);
  else if (o.sweep == "circle-power")
    rep = sweep_circle_power(spec);
  else if (o.sweep == "i1")
    rep = sweep_i1(spec);
  else if (o.sweep == "i2")
    rep = sweep_i2(spec);
  else if (o.sweep == "green-bounds")
    rep = sweep_green_bounds(o.common.alpha, o.pairs, o.seed);
  else if (o.sweep == "grin-lip")
    rep = sweep_grin_lip(o.common.alpha, o.g, parse_radii(o.radii), spec);
  else if (o.sweep == "hilbert")
    rep = sweep_hilbert();
  else if (o.sweep == "conjugate-identity")
    rep = sweep_conjugate_identity(spec);
  else
    throw DomainError("unknown sweep '" + o.sweep +
                      "' (choose from m1, circle-power, i1, i2, green-bounds, grin-lip, hilbert, "
                      "conjugate-identity)");

  Sink sink{o.common.out, {}};
  std::ostream& os = sink.open();
  if (o.common.format == "json")
    write_report_json(os, rep, metadata_json(o.common.alpha, spec));
  else
    write_report_csv(os, rep);
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-weighted disk kernels, Dirichlet solves, and verification sweeps"};
  app.require_subcommand(1);

  KernelOpts ko;
  auto* kernel = app.add_subcommand("kernel", "tabulate the kernels over a polar grid or a point");
  add_common(kernel, ko.common, true);
  kernel->add_option("--grid", ko.grid, "polar grid RxT; radii (i+1)/(R+1)");
  kernel->add_option("--point", ko.point, "single evaluation point: re im")->expected(2);
  kernel->add_option("--ref", ko.ref, "reference point for Green/distance columns: re im")
      ->expected(2);
  kernel->add_option("--theta", ko.theta, "boundary angle for the v-kernel column");

  SolveOpts so;
  auto* solve_cmd = app.add_subcommand("solve", "solve the weighted Dirichlet problem on a grid");
  add_common(solve_cmd, so.common, true);
  solve_cmd->add_option("--f", so.f, "boundary data: built-in name or sampled CSV path");
  solve_cmd->add_option("--g", so.g, "source field: built-in name or sampled CSV path");
  solve_cmd->add_option("--grid", so.grid, "evaluation grid RxT; radii rmax*(i+1)/R");
  solve_cmd->add_option("--rmax", so.rmax, "largest evaluation radius");
  solve_cmd->add_option("--nodes", so.nodes, "sample count for built-in boundary signals");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run a named verification sweep");
  add_common(verify, vo.common, false);
  verify->add_option("sweep", vo.sweep, "sweep name")->required();
  verify->add_option("--g", vo.g, "source field for grin-lip");
  verify->add_option("--radii", vo.radii, "comma-separated circle radii for grin-lip");
  verify->add_option("--pairs", vo.pairs, "sample pair count for green-bounds");
  verify->add_option("--seed", vo.seed, "RNG seed for green-bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*kernel) return run_kernel(ko);
    if (*solve_cmd) return run_solve(so);
    return run_verify(vo);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
