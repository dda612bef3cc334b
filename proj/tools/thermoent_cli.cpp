// Copyright 2026 The thermoent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// thermoent command-line front end. Talks to the library only through the C
// API in thermoent.h.
//
// Exit codes: 0 ok, 2 I/O, 3 no transition, 4 parse/usage, 5 invalid state.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thermoent/thermoent.h"

namespace {

enum Exit { kOk = 0, kIo = 2, kNoTransition = 3, kParse = 4, kInvalidState = 5 };

// Thrown inside command handlers; carries the process exit code.
struct Failure {
  int code;
  std::string message;
};

int exit_code_for(te_status s) {
  switch (s) {
    case TE_OK:
      return kOk;
    case TE_ERR_IO:
      return kIo;
    case TE_ERR_NO_TRANSITION:
      return kNoTransition;
    case TE_ERR_PARSE:
    case TE_ERR_INVALID_ARGUMENT:
      return kParse;
    default:
      // Non-Hermitian input, solver breakdown and internal errors all mean the
      // given state could not be processed.
      return kInvalidState;
  }
}

void check(te_status s) {
  if (s != TE_OK) throw Failure{exit_code_for(s), te_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using State = std::unique_ptr<te_state, Deleter<te_state, te_state_free>>;
using Series = std::unique_ptr<te_series, Deleter<te_series, te_series_free>>;
using Transition =
    std::unique_ptr<te_transition, Deleter<te_transition, te_transition_free>>;
using Ew = std::unique_ptr<te_ew, Deleter<te_ew, te_ew_free>>;
using Path = std::unique_ptr<te_path, Deleter<te_path, te_path_free>>;
using PathReport =
    std::unique_ptr<te_path_report, Deleter<te_path_report, te_path_report_free>>;

std::string fmt(double v) {
  char buf[64];
  check(te_format_real(v, buf, sizeof buf));
  return buf;
}

struct Grid {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
};

Grid parse_grid(const std::string& text, const char* what) {
  Grid g;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.min, &g.max, &g.points, &tail) != 3) {
    throw Failure{kParse, std::string(what) + ": expected min:max:points, got '" + text + "'"};
  }
  return g;
}

std::vector<int> parse_kinds(const std::string& text) {
  std::vector<int> kinds;
  std::stringstream ss(text);
  for (std::string name; std::getline(ss, name, ',');) {
    int k = 0;
    if (te_quantifier_parse(name.c_str(), &k) != TE_OK) {
      throw Failure{kParse, "unknown quantifier '" + name + "' (use C, Ef, N, EN, IM)"};
    }
    kinds.push_back(k);
  }
  if (kinds.empty()) throw Failure{kParse, "empty quantifier list"};
  return kinds;
}

State load(const std::string& path) {
  te_state* s = nullptr;
  check(te_state_load(path.c_str(), &s));
  return State(s);
}

// Output target: a file when a path is given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw Failure{kIo, "cannot open '" + path + "' for writing"};
    to_file_ = true;
  }
  std::ostream& out() { return to_file_ ? file_ : std::cout; }
  bool to_file() const { return to_file_; }
  void close(const std::string& path) {
    out().flush();
    if (!out()) throw Failure{kIo, "failed writing '" + path + "'"};
  }

 private:
  std::ofstream file_;
  bool to_file_ = false;
};

struct Couplings {
  double x = 1.0, y = 1.0, z = 1.0;
};

void add_couplings(CLI::App* cmd, Couplings& c) {
  cmd->add_option("-x", c.x, "XX coupling")->capture_default_str();
  cmd->add_option("-y", c.y, "YY coupling")->capture_default_str();
  cmd->add_option("-z", c.z, "ZZ coupling")->capture_default_str();
}

// ---- sweep -------------------------------------------------------------------

struct SweepArgs {
  Couplings c;
  std::string beta = "0:2:201";
  std::string quantifiers = "C,Ef,N,EN,IM";
  int jobs = 1;
  std::string out;
};

int run_sweep(const SweepArgs& a) {
  const Grid g = parse_grid(a.beta, "--beta");
  const std::vector<int> kinds = parse_kinds(a.quantifiers);
  if (a.jobs < 1) throw Failure{kParse, "--jobs must be at least 1"};

  te_series* raw = nullptr;
  check(te_sweep(a.c.x, a.c.y, a.c.z, g.min, g.max, g.points, kinds.data(),
                 kinds.size(), a.jobs, &raw));
  Series series(raw);

  Sink sink(a.out);
  std::ostream& os = sink.out();
  os << "beta";
  for (int k : kinds) os << ',' << te_quantifier_name(k);
  for (int k : kinds) os << ",d" << te_quantifier_name(k) << "_dbeta";
  os << '\n';

  size_t n = 0;
  check(te_series_size(series.get(), &n));
  for (size_t i = 0; i < n; ++i) {
    double v = 0.0;
    check(te_series_beta(series.get(), i, &v));
    os << fmt(v);
    for (size_t col = 0; col < kinds.size(); ++col) {
      check(te_series_value(series.get(), col, i, &v));
      os << ',' << fmt(v);
    }
    for (size_t col = 0; col < kinds.size(); ++col) {
      check(te_series_derivative(series.get(), col, i, &v));
      os << ',' << fmt(v);
    }
    os << '\n';
  }
  sink.close(a.out);
  return kOk;
}

// ---- critical ----------------------------------------------------------------

struct CriticalArgs {
  Couplings c;
  std::string bracket = "1e-6:10";
  std::string quantifiers = "IM,C,N,EN,Ef";
};

int run_critical(const CriticalArgs& a) {
  double lo = 0.0, hi = 0.0;
  char tail = 0;
  if (std::sscanf(a.bracket.c_str(), "%lf:%lf%c", &lo, &hi, &tail) != 2) {
    throw Failure{kParse, "--bracket: expected lo:hi, got '" + a.bracket + "'"};
  }
  const std::vector<int> kinds = parse_kinds(a.quantifiers);

  te_transition* raw = nullptr;
  const te_status st = te_analyze_transition(a.c.x, a.c.y, a.c.z, lo, hi, &raw);
  Transition report(raw);
  if (st == TE_ERR_NO_TRANSITION) {
    int outcome = 0;
    check(te_transition_outcome(report.get(), &outcome));
    std::cout << "no transition in bracket [" << fmt(lo) << ", " << fmt(hi) << "]: "
              << (outcome == TE_TRANSITION_ALL_ENTANGLED ? "entangled" : "separable")
              << " throughout\n";
    return kNoTransition;
  }
  check(st);

  double beta_c = 0.0, boundary = 0.0;
  check(te_transition_beta_c(report.get(), &beta_c));
  check(te_transition_boundary_value(report.get(), &boundary));
  std::ostream& os = std::cout;
  os << "couplings: " << fmt(a.c.x) << ' ' << fmt(a.c.y) << ' ' << fmt(a.c.z) << '\n';
  os << "beta_c: " << fmt(beta_c) << '\n';
  os << "T_c: " << fmt(1.0 / beta_c) << '\n';
  os << "lambda_min_pt: " << fmt(boundary) << '\n';
  for (int k : kinds) {
    int order = 0;
    check(te_transition_order(report.get(), k, &order));
    os << '\n' << te_quantifier_name(k) << ":\n";
    os << "  order: " << (order == TE_ORDER_ANALYTIC ? std::string(">=3") : std::to_string(order))
       << '\n';
    for (int n = 0; n <= 2; ++n) {
      os << "  d" << n << ":";
      for (int side : {TE_SIDE_LEFT, TE_SIDE_RIGHT}) {
        double v = 0.0, err = 0.0;
        int div = 0;
        check(te_transition_derivative(report.get(), k, n, side, &v, &err, &div));
        os << (side == TE_SIDE_LEFT ? " left " : " right ");
        if (div) {
          os << "divergent";
        } else {
          os << fmt(v) << " +/- " << fmt(err);
        }
      }
      os << '\n';
    }
  }
  return kOk;
}

// ---- ew ----------------------------------------------------------------------

struct EwArgs {
  std::string state;
  std::string cuts;
  std::string witness_out;
};

// 1-based subsystem labels on the command line and in reports.
std::vector<int> parse_cut(const std::string& text, int n) {
  std::vector<int> side;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    int v = 0;
    char tail = 0;
    if (std::sscanf(tok.c_str(), "%d%c", &v, &tail) != 1 || v < 1 || v > n) {
      throw Failure{kParse, "--cuts: invalid subsystem '" + tok + "' (1.." +
                                std::to_string(n) + ")"};
    }
    side.push_back(v - 1);
  }
  if (side.empty() || static_cast<int>(side.size()) >= n) {
    throw Failure{kParse, "--cuts: a cut needs between 1 and n-1 subsystems"};
  }
  return side;
}

std::string cut_label(const std::vector<int>& side, int n) {
  std::string a = "{", b = "{";
  for (int s = 0; s < n; ++s) {
    bool in = false;
    for (int v : side) in = in || v == s;
    std::string& t = in ? a : b;
    if (t.size() > 1) t += ',';
    t += std::to_string(s + 1);
  }
  return a + "}|" + b + "}";
}

void write_witness(const te_ew* ew, const std::string& path) {
  int n = 0;
  check(te_ew_dim(ew, &n));
  std::ofstream out(path);
  if (!out) throw Failure{kIo, "cannot open '" + path + "' for writing"};
  out << "# optimal witness W (Tr(W rho) = -E_W)\n";
  out << "dim: " << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double re = 0.0, im = 0.0;
      check(te_ew_witness_entry(ew, i, j, &re, &im));
      out << i << ' ' << j << ' ' << fmt(re) << ' ' << fmt(im) << '\n';
    }
  }
  out.flush();
  if (!out) throw Failure{kIo, "failed writing '" + path + "'"};
}

Ew solve_ew(const te_state* state, const std::vector<int>& side) {
  te_ew* raw = nullptr;
  const te_status st = te_witnessed_entanglement(state, side.data(), side.size(), &raw);
  Ew ew(raw);
  check(st);
  return ew;
}

void print_ew(std::ostream& os, const te_ew* ew) {
  double value = 0.0, gap = 0.0;
  int it = 0, exact = 0;
  check(te_ew_value(ew, &value));
  check(te_ew_duality_gap(ew, &gap));
  check(te_ew_iterations(ew, &it));
  check(te_ew_exact(ew, &exact));
  os << "value: " << fmt(value) << '\n';
  os << "duality_gap: " << fmt(gap) << '\n';
  os << "iterations: " << it << '\n';
  os << "exact: " << (exact ? "yes" : "no (PPT relaxation, lower bound)") << '\n';
}

int run_ew(const EwArgs& a) {
  State state = load(a.state);
  int n = 0;
  check(te_state_num_subsystems(state.get(), &n));
  if (n < 2) throw Failure{kInvalidState, "state has a single subsystem, no bipartition"};

  std::vector<std::vector<int>> cuts;
  if (a.cuts.empty()) {
    cuts.push_back({0});
  } else if (a.cuts == "all") {
    size_t count = 0;
    check(te_bipartition_count(n, &count));
    for (size_t k = 0; k < count; ++k) {
      std::vector<int> side(static_cast<size_t>(n));
      size_t len = 0;
      check(te_bipartition_get(n, k, side.data(), &len));
      side.resize(len);
      cuts.push_back(side);
    }
  } else {
    cuts.push_back(parse_cut(a.cuts, n));
  }

  std::ostream& os = std::cout;
  if (cuts.size() == 1) {
    Ew ew = solve_ew(state.get(), cuts.front());
    os << "cut: " << cut_label(cuts.front(), n) << '\n';
    print_ew(os, ew.get());
    int dim = 0;
    check(te_ew_dim(ew.get(), &dim));
    os << "witness:\n";
    for (int i = 0; i < dim; ++i) {
      os << ' ';
      for (int j = 0; j < dim; ++j) {
        double re = 0.0, im = 0.0;
        check(te_ew_witness_entry(ew.get(), i, j, &re, &im));
        os << ' ' << fmt(re);
        if (im != 0.0) os << (im < 0 ? "-" : "+") << fmt(std::abs(im)) << 'i';
      }
      os << '\n';
    }
    if (!a.witness_out.empty()) write_witness(ew.get(), a.witness_out);
    return kOk;
  }

  double minimum = 0.0;
  bool first = true;
  for (const auto& side : cuts) {
    Ew ew = solve_ew(state.get(), side);
    double value = 0.0, gap = 0.0;
    check(te_ew_value(ew.get(), &value));
    check(te_ew_duality_gap(ew.get(), &gap));
    os << "cut " << cut_label(side, n) << ": value " << fmt(value) << " gap " << fmt(gap)
       << '\n';
    minimum = first ? value : std::min(minimum, value);
    first = false;
  }
  os << "minimum: " << fmt(minimum) << '\n';
  return kOk;
}

// ---- geoscan -----------------------------------------------------------------

struct GeoscanArgs {
  std::string family = "gibbs-beta";
  Couplings c;
  std::string a_file, b_file;
  std::string t;
  double theta_w = 0.5;
  double delta_smooth = 0.05;
  std::string out;
};

int run_geoscan(const GeoscanArgs& a) {
  Path path;
  te_path* raw = nullptr;
  if (a.family == "gibbs-beta") {
    const Grid g = parse_grid(a.t.empty() ? "0.05:2:101" : a.t, "--t");
    check(te_path_gibbs(a.c.x, a.c.y, a.c.z, g.min, g.max, g.points, &raw));
  } else if (a.family == "mix") {
    if (a.a_file.empty() || a.b_file.empty()) {
      throw Failure{kParse, "--family mix needs --a and --b state files"};
    }
    const Grid g = parse_grid(a.t.empty() ? "0:1:101" : a.t, "--t");
    State sa = load(a.a_file);
    State sb = load(a.b_file);
    check(te_path_mix(sa.get(), sb.get(), g.min, g.max, g.points, &raw));
  } else {
    throw Failure{kParse, "unknown --family '" + a.family + "' (gibbs-beta, mix)"};
  }
  path.reset(raw);

  te_path_report* rep_raw = nullptr;
  const te_status st =
      te_track_witness_path(path.get(), a.theta_w, a.delta_smooth, &rep_raw);
  PathReport report(rep_raw);
  if (st != TE_OK && st != TE_ERR_SOLVER) check(st);
  if (st == TE_ERR_SOLVER) {
    std::cerr << "warning: " << te_last_error() << "; see the gap column\n";
  }

  Sink sink(a.out);
  std::ostream& os = sink.out();
  os << "t,Ew,gap,witness_jump\n";
  size_t n = 0;
  check(te_path_report_size(report.get(), &n));
  std::vector<double> ts(n);
  for (size_t i = 0; i < n; ++i) {
    double t = 0.0, value = 0.0, gap = 0.0, jump = 0.0;
    check(te_path_report_point(report.get(), i, &t, &value, &gap, &jump, nullptr, nullptr));
    ts[i] = t;
    os << fmt(t) << ',' << fmt(value) << ',' << fmt(gap) << ',' << fmt(jump) << '\n';
  }
  sink.close(a.out);

  // Flags block: stdout when the CSV went to a file, stderr otherwise so that
  // stdout stays a clean CSV stream.
  std::ostream& fs = sink.to_file() ? std::cout : std::cerr;
  size_t flags = 0, kinks = 0;
  check(te_path_report_flag_count(report.get(), &flags));
  check(te_path_report_kink_count(report.get(), &kinks));
  fs << "flags: " << flags << '\n';
  for (size_t k = 0; k < flags; ++k) {
    size_t idx = 0;
    double jump = 0.0;
    check(te_path_report_flag(report.get(), k, &idx));
    check(te_path_report_point(report.get(), idx, nullptr, nullptr, nullptr, &jump, nullptr,
                               nullptr));
    fs << "  flag t=" << fmt(ts[idx]) << " witness_jump=" << fmt(jump) << '\n';
  }
  fs << "kinks: " << kinks << '\n';
  for (size_t k = 0; k < kinks; ++k) {
    size_t idx = 0;
    double left = 0.0, right = 0.0;
    check(te_path_report_kink(report.get(), k, &idx));
    check(te_path_report_slopes(report.get(), idx, &left, &right));
    fs << "  kink t=" << fmt(ts[idx]) << " slope_left=" << fmt(left)
       << " slope_right=" << fmt(right) << '\n';
  }
  return kOk;
}

// ---- state -------------------------------------------------------------------

struct StateArgs {
  std::string kind = "gibbs";
  Couplings c;
  double beta = 1.0;
  std::string bell = "phi+";
  int qubits = 3;
  double noise = 0.0;
  std::string out;
};

int run_state(const StateArgs& a) {
  te_state* raw = nullptr;
  if (a.kind == "gibbs") {
    check(te_state_gibbs(a.c.x, a.c.y, a.c.z, a.beta, &raw));
  } else if (a.kind == "bell") {
    const char* names[] = {"phi+", "phi-", "psi+", "psi-"};
    int which = -1;
    for (int k = 0; k < 4; ++k)
      if (a.bell == names[k]) which = k;
    if (which < 0) throw Failure{kParse, "unknown --bell '" + a.bell + "'"};
    check(te_state_bell(which, &raw));
  } else if (a.kind == "ghz") {
    check(te_state_ghz(a.qubits, &raw));
  } else if (a.kind == "mixed") {
    const std::vector<int> dims(static_cast<size_t>(std::max(a.qubits, 1)), 2);
    check(te_state_maximally_mixed(dims.data(), dims.size(), &raw));
  } else {
    throw Failure{kParse, "unknown --kind '" + a.kind + "' (gibbs, bell, ghz, mixed)"};
  }
  State state(raw);

  if (a.noise != 0.0) {
    int n = 0;
    check(te_state_num_subsystems(state.get(), &n));
    // Every built-in family is made of qubits.
    const std::vector<int> dims(static_cast<size_t>(n), 2);
    te_state* mm = nullptr;
    check(te_state_maximally_mixed(dims.data(), dims.size(), &mm));
    State white(mm);
    check(te_state_mix(state.get(), white.get(), 1.0 - a.noise, &raw));
    state.reset(raw);
  }

  if (a.out.empty()) throw Failure{kParse, "state needs --out"};
  check(te_state_save(state.get(), a.out.c_str()));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal entanglement of two-qubit XYZ models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", te_version());

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "Quantifiers and d/dbeta on a beta grid (CSV)");
  add_couplings(sw, sweep.c);
  sw->add_option("--beta", sweep.beta, "Grid min:max:points")->capture_default_str();
  sw->add_option("-q,--quantifiers", sweep.quantifiers, "Comma list of C,Ef,N,EN,IM")
      ->capture_default_str();
  sw->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str();
  sw->add_option("-o,--out", sweep.out, "Output CSV (default stdout)");

  CriticalArgs critical;
  auto* cr = app.add_subcommand("critical", "Locate beta_c and classify transition orders");
  add_couplings(cr, critical.c);
  cr->add_option("--bracket", critical.bracket, "Search bracket lo:hi")->capture_default_str();
  cr->add_option("-q,--quantifiers", critical.quantifiers, "Comma list of C,Ef,N,EN,IM")
      ->capture_default_str();

  EwArgs ew;
  auto* ec = app.add_subcommand("ew", "Witnessed entanglement of a state file");
  ec->add_option("state", ew.state, "State file")->required();
  ec->add_option("--cuts", ew.cuts, "'all' or a 1-based comma list, e.g. 1 or 1,3");
  ec->add_option("--witness-out", ew.witness_out, "Write the optimal witness here");

  GeoscanArgs geo;
  auto* gs = app.add_subcommand("geoscan", "E_W along a path with witness-jump flags");
  gs->add_option("--family", geo.family, "gibbs-beta or mix")->capture_default_str();
  add_couplings(gs, geo.c);
  gs->add_option("--a", geo.a_file, "State at t=0 (mix)");
  gs->add_option("--b", geo.b_file, "State at t=1 (mix)");
  gs->add_option("--t", geo.t, "Parameter grid min:max:points");
  gs->add_option("--theta-w", geo.theta_w, "Witness-jump threshold")->capture_default_str();
  gs->add_option("--delta-smooth", geo.delta_smooth, "Smoothness bound on state steps")
      ->capture_default_str();
  gs->add_option("-o,--out", geo.out, "Output CSV (default stdout)");

  StateArgs st;
  auto* sc = app.add_subcommand("state", "Write a built-in state to a state file");
  sc->add_option("--kind", st.kind, "gibbs, bell, ghz or mixed")->capture_default_str();
  add_couplings(sc, st.c);
  sc->add_option("--beta", st.beta, "Inverse temperature (gibbs)")->capture_default_str();
  sc->add_option("--bell", st.bell, "phi+, phi-, psi+ or psi-")->capture_default_str();
  sc->add_option("--qubits", st.qubits, "Qubit count (ghz, mixed)")->capture_default_str();
  sc->add_option("--noise", st.noise, "White-noise weight p: (1-p) rho + p I/d")
      ->capture_default_str();
  sc->add_option("-o,--out", st.out, "Output state file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (sw->parsed()) return run_sweep(sweep);
    if (cr->parsed()) return run_critical(critical);
    if (ec->parsed()) return run_ew(ew);
    if (gs->parsed()) return run_geoscan(geo);
    if (sc->parsed()) return run_state(st);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidState;
  }
  return kOk;
}
