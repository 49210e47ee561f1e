// Copyright 2026 The axidir Authors
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

#include "axidir/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <variant>

#include "axidir/designs.hpp"
#include "axidir/errors.hpp"
#include "axidir/metrics.hpp"
#include "axidir/sampling.hpp"
#include "axidir/special.hpp"

namespace axidir::cli {
namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, double, long long, std::string>;

constexpr double kDeg = 180.0 / std::numbers::pi;

// Thrown for bad option combinations; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Envelope {
  std::string command;
  std::vector<std::pair<std::string, Cell>> provenance;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_number(std::get<double>(c));
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return "";
}

// JSON numbers carry exactly the 12-digit value printed in CSV.
Json cell_json(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (!std::isfinite(v)) return nullptr;
    return std::strtod(format_number(v).c_str(), nullptr);
  }
  if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

void render(const Envelope& env, const std::string& format, std::ostream& os) {
  if (format == "json") {
    Json prov;
    prov["command"] = env.command;
    for (const auto& [k, v] : env.provenance) prov[k] = cell_json(v);
    Json rows = Json::array();
    for (const auto& r : env.rows) {
      Json row;
      for (size_t i = 0; i < env.header.size(); ++i) row[env.header[i]] = cell_json(r[i]);
      rows.push_back(std::move(row));
    }
    Json doc;
    doc["provenance"] = std::move(prov);
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
    return;
  }
  os << "# axidir " << env.command << '\n';
  for (const auto& [k, v] : env.provenance) os << "# " << k << '=' << cell_text(v) << '\n';
  for (size_t i = 0; i < env.header.size(); ++i) os << (i ? "," : "") << env.header[i];
  os << '\n';
  for (const auto& r : env.rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell_text(r[i]);
    os << '\n';
  }
}

struct Options {
  double dim = 3.0;
  int order = -1;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::string design;
  std::optional<int> flat_l;
  std::optional<double> cap_x0;
  std::optional<double> cap_angle_deg;
  std::optional<double> spacing_deg;
  std::string norm;
  std::string orders;
  std::string weights_file;
  int samples = 181;
  std::string builtin;
  std::optional<int> circle;
  std::string nodes_file;
  int node_dim = 3;
  int t = -1;
  int trials = kDefaultTrials;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--dim", o.dim, "space dimension D >= 2 (real)");
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", o.out, "output path (default stdout)");
  sub->add_option("--seed", o.seed, "random seed");
}

void add_design_opts(CLI::App* sub, Options& o, bool list) {
  sub->add_option("--design", o.design,
                  list ? "comma-separated design names" : "design name");
  sub->add_option("--flat-l", o.flat_l, "maxflat on-axis flatness L");
  sub->add_option("--cap-x0", o.cap_x0, "cap threshold x0 in (-1, 1)");
  sub->add_option("--cap-angle-deg", o.cap_angle_deg, "cap opening angle in degrees");
  sub->add_option("--spacing-deg", o.spacing_deg, "cap-trapezoid spacing in degrees");
  sub->add_option("--norm", o.norm, "a0, g1 or raw")->check(CLI::IsMember({"a0", "g1", "raw"}));
}

struct Built {
  WeightVector w;
  std::vector<std::pair<std::string, Cell>> extra;
};

Normalization parse_norm(const std::string& s) {
  if (s == "a0") return Normalization::kA0Unity;
  if (s == "g1") return Normalization::kG1Unity;
  return Normalization::kRaw;
}

Built build(const std::string& design, int order, Dimension dim, const Options& o) {
  Built b{basic(0, dim), {}};
  if (design == "basic") {
    b.w = basic(order, dim);
  } else if (design == "maxre") {
    const MaxReSolution s = max_re(order, dim);
    b.w = s.weights;
    b.extra.emplace_back("r_e_max", s.r_e_max);
  } else if (design == "supercard") {
    if (order < 1) throw UsageError("supercard needs --order >= 1");
    b.w = supercardioid(order, dim);
  } else if (design == "supercard-approx") {
    const ApproxSupercardioid s = supercardioid_approx(order, dim);
    b.w = s.weights;
    b.extra.emplace_back("beta", s.exponent);
    if (s.extrapolated) b.extra.emplace_back("warning", std::string("extrapolated"));
  } else if (design == "inphase") {
    b.w = inphase(order, dim);
  } else if (design == "maxflat") {
    if (!o.flat_l) throw UsageError("maxflat needs --flat-l");
    b.w = maxflat(order, *o.flat_l, dim);
    b.extra.emplace_back("L", static_cast<long long>(*o.flat_l));
  } else if (design == "cap") {
    if (o.cap_x0.has_value() == o.cap_angle_deg.has_value()) {
      throw UsageError("cap needs exactly one of --cap-x0, --cap-angle-deg");
    }
    const double x0 = o.cap_x0 ? *o.cap_x0 : std::cos(*o.cap_angle_deg / 2.0 / kDeg);
    b.w = cap(order, x0, dim);
    b.extra.emplace_back("x0", x0);
  } else if (design == "cap-trapezoid") {
    if (!o.spacing_deg) throw UsageError("cap-trapezoid needs --spacing-deg");
    b.w = cap_trapezoid(order, *o.spacing_deg, dim);
    b.extra.emplace_back("spacing_deg", *o.spacing_deg);
  } else {
    throw UsageError("unknown design '" + design + "'");
  }
  if (!o.norm.empty()) b.w = normalize(b.w, parse_norm(o.norm));
  return b;
}

std::vector<std::pair<std::string, Cell>> provenance(const std::string& design, Cell order,
                                                     double dim, const std::string& norm) {
  return {{"design", design},
          {"N", std::move(order)},
          {"D", dim},
          {"normalization", norm},
          {"version", std::string(kVersion)}};
}

void require_order(const Options& o) {
  if (o.order < 0) throw UsageError("--order <int >= 0> is required");
}

Envelope cmd_weights(const Options& o) {
  require_order(o);
  if (o.design.empty()) throw UsageError("--design is required");
  const Built b = build(o.design, o.order, Dimension(o.dim), o);
  Envelope env;
  env.command = "weights";
  env.provenance = provenance(o.design, static_cast<long long>(o.order), o.dim,
                              std::string(normalization_name(b.w.normalization)));
  for (const auto& e : b.extra) env.provenance.push_back(e);
  env.header = {"n", "a"};
  for (int n = 0; n <= b.w.order; ++n) env.rows.push_back({static_cast<long long>(n), b.w.a[n]});
  return env;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<int, int> parse_orders(const Options& o) {
  if (o.orders.empty()) {
    require_order(o);
    return {o.order, o.order};
  }
  int lo = 0, hi = 0;
  const std::string& s = o.orders;
  const size_t dash = s.find('-');
  auto to_int = [&](std::string_view t, int& v) {
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    return ec == std::errc() && p == t.data() + t.size();
  };
  const bool ok = dash == std::string::npos
                      ? to_int(s, lo) && to_int(s, hi)
                      : to_int(std::string_view(s).substr(0, dash), lo) &&
                            to_int(std::string_view(s).substr(dash + 1), hi);
  if (!ok || lo < 0 || hi < lo) throw UsageError("--orders expects lo-hi with 0 <= lo <= hi");
  return {lo, hi};
}

// One weight per row, either "a" or "n,a" with n = 0, 1, 2, ...
WeightVector read_weights(const std::string& path, Dimension dim) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<double> a;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    std::vector<double> v;
    std::string tok;
    std::stringstream ss(line);
    while (ss >> tok) {
      for (const std::string& part : split_list(tok)) {
        double x = 0.0;
        const auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
        if (ec != std::errc() || p != part.data() + part.size()) {
          throw ParseError("weights line " + std::to_string(line_no) + ": bad number '" + part +
                           "'");
        }
        v.push_back(x);
      }
    }
    if (v.empty()) continue;
    if (v.size() == 2) {
      if (v[0] != static_cast<double>(a.size())) {
        throw ParseError("weights line " + std::to_string(line_no) + ": degree out of sequence");
      }
      a.push_back(v[1]);
    } else if (v.size() == 1) {
      a.push_back(v[0]);
    } else {
      throw ParseError("weights line " + std::to_string(line_no) + ": expected 1 or 2 columns");
    }
  }
  if (a.empty()) throw ParseError("weights file has no rows");
  const int order = static_cast<int>(a.size()) - 1;
  return WeightVector{dim, order, std::move(a), Normalization::kRaw};
}

double spread_deg(std::optional<double> r) {
  if (!r) return std::nan("");
  return std::acos(*r) * kDeg;
}

std::vector<Cell> metric_row(const std::string& name, int order, const PatternMetrics& m) {
  return {name,
          static_cast<long long>(order),
          m.Q,
          spread_deg(m.rV),
          spread_deg(m.rE),
          10.0 * std::log10(m.FBR)};
}

Envelope cmd_metrics(const Options& o) {
  const Dimension dim(o.dim);
  Envelope env;
  env.command = "metrics";
  env.header = {"design", "N", "Q", "spread_rV_deg", "spread_rE_deg", "FBR_dB"};
  if (!o.weights_file.empty()) {
    if (!o.design.empty()) throw UsageError("--design and --weights are exclusive");
    WeightVector w = read_weights(o.weights_file, dim);
    if (!o.norm.empty()) w = normalize(w, parse_norm(o.norm));
    env.provenance = provenance("file", static_cast<long long>(w.order), o.dim,
                                std::string(normalization_name(w.normalization)));
    env.rows.push_back(metric_row("file", w.order, compute_metrics(w)));
    return env;
  }
  if (o.design.empty()) throw UsageError("--design or --weights is required");
  const auto designs = split_list(o.design);
  const auto [lo, hi] = parse_orders(o);
  const Cell order_cell = lo == hi ? Cell(static_cast<long long>(lo))
                                   : Cell(std::to_string(lo) + "-" + std::to_string(hi));
  env.provenance = provenance(o.design, order_cell, o.dim, o.norm.empty() ? "native" : o.norm);
  for (const std::string& d : designs) {
    for (int n = lo; n <= hi; ++n) {
      env.rows.push_back(metric_row(d, n, compute_metrics(build(d, n, dim, o).w)));
    }
  }
  return env;
}

Envelope cmd_pattern(const Options& o) {
  require_order(o);
  if (o.design.empty()) throw UsageError("--design is required");
  if (o.samples < 2) throw UsageError("--samples must be >= 2");
  const Built b = build(o.design, o.order, Dimension(o.dim), o);
  std::vector<double> phi(o.samples), x(o.samples), g(o.samples);
  for (int i = 0; i < o.samples; ++i) {
    phi[i] = 180.0 * i / (o.samples - 1);
    x[i] = i == o.samples - 1 ? -1.0 : std::cos(phi[i] / kDeg);
  }
  eval_pattern(b.w, x, g);
  const double g1 = eval_pattern(b.w, 1.0);
  Envelope env;
  env.command = "pattern";
  env.provenance = provenance(o.design, static_cast<long long>(o.order), o.dim,
                              std::string(normalization_name(b.w.normalization)));
  for (const auto& e : b.extra) env.provenance.push_back(e);
  env.header = {"phi_deg", "x", "g", "dB"};
  for (int i = 0; i < o.samples; ++i) {
    const double ratio = std::fabs(g[i] / g1);
    const double db = ratio > 0.0 ? std::fmax(-120.0, 20.0 * std::log10(ratio)) : -120.0;
    env.rows.push_back({phi[i], x[i], g[i], db});
  }
  return env;
}

struct TDesignOutcome {
  Envelope env;
  bool passed;
};

TDesignOutcome cmd_tdesign(const Options& o) {
  if (o.t < 0) throw UsageError("--t <int >= 0> is required");
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  const int sources = !o.builtin.empty() + o.circle.has_value() + !o.nodes_file.empty();
  if (sources != 1) throw UsageError("give exactly one of --builtin, --circle, --nodes");
  NodeSet nodes;
  if (!o.builtin.empty()) {
    const auto p = platonic_from_name(o.builtin);
    if (!p) throw UsageError("unknown builtin '" + o.builtin + "'");
    nodes = platonic(*p);
  } else if (o.circle) {
    if (*o.circle < 1) throw UsageError("--circle needs L >= 1");
    nodes = circle_nodes(*o.circle, 0.0);
  } else {
    if (o.node_dim != 2 && o.node_dim != 3) throw UsageError("--node-dim must be 2 or 3");
    nodes = load_nodes(o.nodes_file, o.node_dim);
  }
  const TDesignReport rep = tdesign_check(nodes, o.t, o.trials, o.seed);
  Envelope env;
  env.command = "tdesign";
  env.provenance = provenance(nodes.label, static_cast<long long>(o.t),
                              static_cast<double>(nodes.dim), "none");
  env.provenance.emplace_back("L", static_cast<long long>(nodes.nodes.size()));
  env.provenance.emplace_back("trials", static_cast<long long>(o.trials));
  env.provenance.emplace_back("seed", std::to_string(o.seed));
  env.provenance.emplace_back("max_abs_error", rep.max_abs_error);
  env.provenance.emplace_back("passed", std::string(rep.passed ? "true" : "false"));
  env.header = {"degree", "max_abs_error"};
  for (size_t n = 0; n < rep.per_degree_errors.size(); ++n) {
    env.rows.push_back({static_cast<long long>(n + 1), rep.per_degree_errors[n]});
  }
  return {std::move(env), rep.passed};
}

int emit(const Envelope& env, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.out.empty() || o.out == "stdout") {
    render(env, o.format, out);
    return kOk;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << o.out << '\n';
    return kIoError;
  }
  render(env, o.format, f);
  if (!f) {
    err << "error: write to " << o.out << " failed\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Axisymmetric directivity pattern designs and metrics", "axidir"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto* weights = app.add_subcommand("weights", "order weights a_0..a_N of one design");
  add_common(weights, o);
  add_design_opts(weights, o, false);
  weights->add_option("--order", o.order, "order N");

  auto* metrics = app.add_subcommand("metrics", "Q, rV/rE spread and FBR per design and order");
  add_common(metrics, o);
  add_design_opts(metrics, o, true);
  metrics->add_option("--order", o.order, "order N");
  metrics->add_option("--orders", o.orders, "order range lo-hi");
  metrics->add_option("--weights", o.weights_file, "file of weights, rows 'a' or 'n,a'");

  auto* pattern = app.add_subcommand("pattern", "pattern samples over 0..180 degrees");
  add_common(pattern, o);
  add_design_opts(pattern, o, false);
  pattern->add_option("--order", o.order, "order N");
  pattern->add_option("--samples", o.samples, "number of samples >= 2");

  auto* tdesign = app.add_subcommand("tdesign", "check a node set for the t-design property");
  add_common(tdesign, o);
  tdesign->add_option("--builtin", o.builtin, "platonic solid name");
  tdesign->add_option("--circle", o.circle, "equiangular ring with L nodes");
  tdesign->add_option("--nodes", o.nodes_file, "node file");
  tdesign->add_option("--node-dim", o.node_dim, "ambient dimension of the node file (2 or 3)");
  tdesign->add_option("--t", o.t, "claimed strength t");
  tdesign->add_option("--trials", o.trials, "random orientations");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgs;
  }

  try {
    if (*weights) return emit(cmd_weights(o), o, out, err);
    if (*metrics) return emit(cmd_metrics(o), o, out, err);
    if (*pattern) return emit(cmd_pattern(o), o, out, err);
    const TDesignOutcome r = cmd_tdesign(o);
    const int rc = emit(r.env, o, out, err);
    if (rc != kOk) return rc;
    return r.passed ? kOk : kTDesignFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgs;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const NormError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgs;
  }
}

}  // namespace axidir::cli
