#include "polyweno/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "polyweno/errors.hpp"

namespace polyweno {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("not a number: '" + std::string(s) + "'");
  }
  if (!std::isfinite(v)) throw ConfigError("value must be finite");
  return v;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

bool parse_bool(std::string_view s) {
  s = trim(s);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("not a boolean: '" + std::string(s) + "'");
}

std::vector<double> parse_list(std::string_view s) {
  std::vector<double> out;
  s = trim(s);
  if (s.empty() || s == "none") return out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_double(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

std::string format_list(const std::vector<double>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  return out;
}

double nonneg(double v) {
  if (!(v >= 0.0)) throw ConfigError("must be non-negative");
  return v;
}

double positive(double v) {
  if (!(v > 0.0)) throw ConfigError("must be positive");
  return v;
}

struct KeyDef {
  const char* name;
  const char* section;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
  // Keys that are only printed when they apply.
  std::function<bool(const RunConfig&)> printed = [](const RunConfig&) { return true; };
};

#define POLYWENO_DOUBLE_KEY(key, section, field, check)                                  \
  KeyDef {                                                                               \
    key, section, [](RunConfig& c, std::string_view v) { c.field = check(parse_double(v)); }, \
        [](const RunConfig& c) { return format_double(c.field); }                        \
  }

const std::vector<KeyDef>& key_table() {
  static const std::vector<KeyDef> table = [] {
    std::vector<KeyDef> t;
    t.push_back(POLYWENO_DOUBLE_KEY("R", "grid", sim.R, positive));
    t.push_back({"N", "grid", [](RunConfig& c, std::string_view v) {
                   c.sim.N = parse_int(v);
                   if (c.sim.N < kMinCells) {
                     throw ConfigError("must be at least " + std::to_string(kMinCells));
                   }
                 },
                 [](const RunConfig& c) { return std::to_string(c.sim.N); }});

    t.push_back(POLYWENO_DOUBLE_KEY("V0", "initial", sim.V0, nonneg));
    t.push_back(POLYWENO_DOUBLE_KEY("u0_height", "initial", sim.step_profile.height, nonneg));
    t.push_back(POLYWENO_DOUBLE_KEY("u0_cutoff", "initial", sim.step_profile.cutoff, positive));
    t.push_back({"u0_values", "initial",
                 [](RunConfig& c, std::string_view v) {
                   auto values = parse_list(v);
                   if (values.empty()) {
                     c.sim.tabulated_profile.reset();
                   } else {
                     c.sim.tabulated_profile = std::move(values);
                   }
                 },
                 [](const RunConfig& c) {
                   return c.sim.tabulated_profile ? format_list(*c.sim.tabulated_profile) : "none";
                 }});

    t.push_back(POLYWENO_DOUBLE_KEY("kon_slope", "rates", sim.rates.kon_slope, nonneg));
    t.push_back(POLYWENO_DOUBLE_KEY("kon_intercept", "rates", sim.rates.kon_intercept, nonneg));
    t.push_back(POLYWENO_DOUBLE_KEY("kon_critical", "rates", sim.rates.kon_critical, nonneg));
    t.push_back(POLYWENO_DOUBLE_KEY("kon_plateau", "rates", sim.rates.kon_plateau, nonneg));
    t.push_back(POLYWENO_DOUBLE_KEY("eta", "rates", sim.rates.eta, nonneg));
    t.push_back(POLYWENO_DOUBLE_KEY("kf_amplitude", "rates", sim.rates.kf_amplitude, nonneg));
    t.push_back(POLYWENO_DOUBLE_KEY("kf_half", "rates", sim.rates.kf_half, positive));
    t.push_back(POLYWENO_DOUBLE_KEY("kc_amplitude", "rates", sim.rates.kc_amplitude, nonneg));
    t.push_back(POLYWENO_DOUBLE_KEY("time_unit_scale", "rates", sim.rates.time_unit_scale, positive));

    t.push_back({"splitting", "splitting",
                 [](RunConfig& c, std::string_view v) {
                   v = trim(v);
                   if (v == "lambda") {
                     const double l = c.sim.op.splitting.is_lax_friedrichs() ? 0.2 : c.sim.op.splitting.lambda();
                     c.sim.op.splitting = SplittingScheme::lambda_family(l);
                   } else if (v == "lax_friedrichs") {
                     c.sim.op.splitting = SplittingScheme::lax_friedrichs();
                   } else {
                     throw ConfigError("expected 'lambda' or 'lax_friedrichs'");
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(c.sim.op.splitting.is_lax_friedrichs() ? "lax_friedrichs" : "lambda");
                 }});
    t.push_back({"lambda", "splitting",
                 [](RunConfig& c, std::string_view v) {
                   const double l = parse_double(v);
                   if (!(l >= 0.0 && l <= 1.0)) throw ConfigError("must lie in [0,1]");
                   if (!c.sim.op.splitting.is_lax_friedrichs()) {
                     c.sim.op.splitting = SplittingScheme::lambda_family(l);
                   }
                 },
                 [](const RunConfig& c) { return format_double(c.sim.op.splitting.lambda()); },
                 [](const RunConfig& c) { return !c.sim.op.splitting.is_lax_friedrichs(); }});
    t.push_back({"discoag_weight", "splitting",
                 [](RunConfig& c, std::string_view v) {
                   v = trim(v);
                   if (v == "inner") {
                     c.sim.op.discoag_weight = DiscoagWeight::Inner;
                   } else if (v == "printed") {
                     c.sim.op.discoag_weight = DiscoagWeight::Printed;
                   } else {
                     throw ConfigError("expected 'inner' or 'printed'");
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(c.sim.op.discoag_weight == DiscoagWeight::Inner ? "inner" : "printed");
                 }});
    t.push_back({"enable_coagfrag", "splitting",
                 [](RunConfig& c, std::string_view v) { c.sim.op.enable_coagfrag = parse_bool(v); },
                 [](const RunConfig& c) { return std::string(c.sim.op.enable_coagfrag ? "true" : "false"); }});
    t.push_back({"enable_transport", "splitting",
                 [](RunConfig& c, std::string_view v) { c.sim.op.enable_transport = parse_bool(v); },
                 [](const RunConfig& c) { return std::string(c.sim.op.enable_transport ? "true" : "false"); }});

    t.push_back({"scheme", "weno",
                 [](RunConfig& c, std::string_view v) {
                   v = trim(v);
                   if (v == "weno5") {
                     c.sim.op.weno.scheme = SpatialScheme::Weno5;
                   } else if (v == "upwind1") {
                     c.sim.op.weno.scheme = SpatialScheme::Upwind1;
                   } else {
                     throw ConfigError("expected 'weno5' or 'upwind1'");
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(c.sim.op.weno.scheme == SpatialScheme::Weno5 ? "weno5" : "upwind1");
                 }});
    t.push_back(POLYWENO_DOUBLE_KEY("weno_epsilon", "weno", sim.op.weno.epsilon, positive));
    t.push_back({"weno_coefficients", "weno",
                 [](RunConfig& c, std::string_view v) {
                   v = trim(v);
                   if (v == "standard") {
                     c.sim.op.weno.coefficients = WenoCoefficients::Standard;
                   } else if (v == "printed") {
                     c.sim.op.weno.coefficients = WenoCoefficients::Printed;
                   } else {
                     throw ConfigError("expected 'standard' or 'printed'");
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(c.sim.op.weno.coefficients == WenoCoefficients::Standard ? "standard" : "printed");
                 }});

    t.push_back({"cfl_safety", "stepping",
                 [](RunConfig& c, std::string_view v) {
                   const double s = parse_double(v);
                   if (!(s > 0.0 && s <= 1.0)) throw ConfigError("must lie in (0,1]");
                   c.sim.control.cfl_safety = s;
                 },
                 [](const RunConfig& c) { return format_double(c.sim.control.cfl_safety); }});
    t.push_back({"cfl_literal", "stepping",
                 [](RunConfig& c, std::string_view v) { c.sim.control.cfl_literal = parse_bool(v); },
                 [](const RunConfig& c) { return std::string(c.sim.control.cfl_literal ? "true" : "false"); }});
    t.push_back({"dt_max", "stepping",
                 [](RunConfig& c, std::string_view v) {
                   if (trim(v) == "none") {
                     c.sim.control.dt_max.reset();
                   } else {
                     c.sim.control.dt_max = positive(parse_double(v));
                   }
                 },
                 [](const RunConfig& c) {
                   return c.sim.control.dt_max ? format_double(*c.sim.control.dt_max) : std::string("none");
                 }});
    t.push_back(POLYWENO_DOUBLE_KEY("dt_min", "stepping", sim.control.dt_min, positive));
    t.push_back(POLYWENO_DOUBLE_KEY("t_end", "stepping", sim.t_end, positive));
    t.push_back(POLYWENO_DOUBLE_KEY("blowup_bound", "stepping", sim.blowup_bound, positive));

    t.push_back({"snapshot_times", "output",
                 [](RunConfig& c, std::string_view v) {
                   auto times = parse_list(v);
                   for (double s : times) nonneg(s);
                   if (!std::is_sorted(times.begin(), times.end())) throw ConfigError("must be sorted");
                   c.sim.snapshot_times = std::move(times);
                 },
                 [](const RunConfig& c) { return format_list(c.sim.snapshot_times); }});
    t.push_back({"timeseries_stride", "output",
                 [](RunConfig& c, std::string_view v) {
                   c.sim.timeseries_stride = parse_int(v);
                   if (c.sim.timeseries_stride < 1) throw ConfigError("must be at least 1");
                 },
                 [](const RunConfig& c) { return std::to_string(c.sim.timeseries_stride); }});
    t.push_back(POLYWENO_DOUBLE_KEY("oscillation_floor", "output", sim.oscillation_floor, nonneg));
    t.push_back({"plot_script", "output",
                 [](RunConfig& c, std::string_view v) { c.output.plot_script = parse_bool(v); },
                 [](const RunConfig& c) { return std::string(c.output.plot_script ? "true" : "false"); }});
    return t;
  }();
  return table;
}

#undef POLYWENO_DOUBLE_KEY

const KeyDef* find_key(std::string_view name) {
  for (const auto& k : key_table()) {
    if (name == k.name) return &k;
  }
  return nullptr;
}

constexpr const char* kSections[] = {"grid", "initial", "rates", "splitting", "weno", "stepping", "output"};

struct Entry {
  std::string key;
  std::string value;
  std::string origin;
};

ConfigError located(const std::string& origin, std::string_view key, const std::string& what) {
  return ConfigError(origin + ": key '" + std::string(key) + "': " + what);
}

}  // namespace

ParsedConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
  std::vector<Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::string origin = "line " + std::to_string(line_no);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(origin + ": malformed section header");
      const auto name = trim(line.substr(1, line.size() - 2));
      if (std::find(std::begin(kSections), std::end(kSections), name) == std::end(kSections)) {
        throw ConfigError(origin + ": unknown section '" + std::string(name) + "'");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(origin + ": expected 'key = value'");
    entries.push_back({std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))), origin});
  }
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("--set '" + o + "': expected key=value");
    entries.push_back({std::string(trim(std::string_view(o).substr(0, eq))),
                       std::string(trim(std::string_view(o).substr(eq + 1))), "--set " + o});
  }

  // Later assignments win; the splitting kind is resolved before lambda.
  std::map<std::string, const Entry*> last;
  for (const auto& e : entries) {
    if (!find_key(e.key)) throw located(e.origin, e.key, "unknown key");
    last[e.key] = &e;
  }

  ParsedConfig parsed;
  auto apply = [&](const Entry& e) {
    try {
      find_key(e.key)->set(parsed.config, e.value);
    } catch (const ConfigError& err) {
      throw located(e.origin, e.key, err.what());
    }
  };
  if (auto it = last.find("splitting"); it != last.end()) apply(*it->second);
  for (const auto& e : entries) {
    if (e.key == "splitting" || last[e.key] != &e) continue;
    apply(e);
  }

  RunConfig& c = parsed.config;
  if (c.sim.op.splitting.is_lax_friedrichs() && last.count("lambda")) {
    throw located(last["lambda"]->origin, "lambda", "not allowed with splitting = lax_friedrichs");
  }
  if (c.sim.rates.eta < 2.0 || c.sim.rates.eta > 8.0) {
    parsed.warnings.push_back("eta = " + format_double(c.sim.rates.eta) +
                              " lies outside the explored range [2, 8]");
  }
  if (c.sim.tabulated_profile && c.sim.tabulated_profile->size() != static_cast<std::size_t>(c.sim.N) + 1) {
    throw located(last["u0_values"]->origin, "u0_values", "needs N+1 values");
  }
  try {
    c.sim.validate();
    Grid grid(c.sim.R, c.sim.N);
    if (!c.sim.tabulated_profile) (void)init_density(grid, c.sim.step_profile);
  } catch (const ConfigError& err) {
    throw ConfigError(std::string("configuration: ") + err.what());
  }
  return parsed;
}

std::string print_config(const RunConfig& config) {
  std::ostringstream out;
  for (const char* section : kSections) {
    out << '[' << section << "]\n";
    for (const auto& k : key_table()) {
      if (std::string_view(k.section) != section || !k.printed(config)) continue;
      out << k.name << " = " << k.get(config) << '\n';
    }
    out << '\n';
  }
  return out.str();
}

std::string snapshot_filename(double requested_time) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snapshot_t%010.4f.csv", requested_time);
  return buf;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string termination_text(const SimulationResult& r) {
  if (const auto* d = std::get_if<Diverged>(&r.termination)) {
    return "diverged (" + d->reason + ") at t=" + format_double(d->t);
  }
  return "completed";
}

}  // namespace

std::vector<std::filesystem::path> write_outputs(const SimulationResult& result, const RunConfig& config,
                                                 const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + out_dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> written;

  const auto ts_path = out_dir / "timeseries.csv";
  {
    auto out = open_for_write(ts_path);
    out << "t,dt,V,polymer_mass,total_mass,min_u,max_u,oscillation\n";
    for (const auto& r : result.rows) {
      out << format_double(r.t) << ',' << format_double(r.dt) << ',' << format_double(r.V) << ','
          << format_double(r.polymer_mass) << ',' << format_double(r.total_mass) << ','
          << format_double(r.min_u) << ',' << format_double(r.max_u) << ',' << format_double(r.oscillation)
          << '\n';
    }
    finish(out, ts_path);
  }
  written.push_back(ts_path);

  for (const auto& snap : result.snapshots) {
    const auto path = out_dir / snapshot_filename(snap.requested_time);
    auto out = open_for_write(path);
    out << "x,u\n";
    for (std::size_t i = 0; i < snap.density.size(); ++i) {
      out << format_double(result.x[i]) << ',' << format_double(snap.density[i]) << '\n';
    }
    finish(out, path);
    written.push_back(path);
  }

  const auto manifest = out_dir / "run_manifest.cfg";
  {
    auto out = open_for_write(manifest);
    out << "# polyweno run manifest\n"
        << "# version: " << kVersion << '\n'
        << "# termination: " << termination_text(result) << '\n'
        << "# steps: " << result.steps << '\n'
        << "# initial polymer mass: " << format_double(result.initial_mass) << '\n';
    if (result.first_negative_monomer_time) {
      out << "# monomer concentration first negative at t=" << format_double(*result.first_negative_monomer_time)
          << '\n';
    }
    out << '\n' << print_config(config);
    finish(out, manifest);
  }
  written.push_back(manifest);

  if (config.output.plot_script) {
    const auto plot = out_dir / "plot.gp";
    auto out = open_for_write(plot);
    out << "# gnuplot script: gnuplot plot.gp\n"
        << "set datafile separator ','\n"
        << "set terminal pngcairo size 900,600\n"
        << "set output 'monomers.png'\n"
        << "set xlabel 't (h)'\nset ylabel 'V (uM)'\n"
        << "plot 'timeseries.csv' using 1:3 skip 1 with lines title 'V(t)'\n"
        << "set output 'snapshots.png'\n"
        << "set xlabel 'x'\nset ylabel 'u(x,t)'\n";
    if (result.snapshots.empty()) {
      out << "# no snapshots recorded\n";
    } else {
      out << "plot ";
      for (std::size_t k = 0; k < result.snapshots.size(); ++k) {
        if (k) out << ", \\\n     ";
        out << '\'' << snapshot_filename(result.snapshots[k].requested_time) << "' using 1:2 skip 1 with lines title 't="
            << format_double(result.snapshots[k].requested_time) << "'";
      }
      out << '\n';
    }
    finish(out, plot);
    written.push_back(plot);
  }
  return written;
}

SnapshotTable read_snapshot_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  SnapshotTable t;
  std::string line;
  std::getline(in, line);
  if (trim(line) != "x,u") throw std::runtime_error("'" + path.string() + "': unexpected header");
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("'" + path.string() + "': malformed row");
    t.x.push_back(parse_double(std::string_view(line).substr(0, comma)));
    t.u.push_back(parse_double(std::string_view(line).substr(comma + 1)));
  }
  return t;
}

}  // namespace polyweno
