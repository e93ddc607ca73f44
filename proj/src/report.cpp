#include "cvtele/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "cvtele/fock_oracle.hpp"
#include "cvtele/genplanner.hpp"
#include "cvtele/metrics.hpp"
#include "cvtele/optimizer.hpp"
#include "cvtele/teleport.hpp"

namespace cvtele {

using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::Fidelity, "fidelity"}, {Command::Sweep, "sweep"},
    {Command::Optimize, "optimize"}, {Command::Metrics, "metrics"},
    {Command::Plan, "plan"},         {Command::Figure, "figure"},
};

constexpr std::pair<FigureId, std::string_view> kFigures[] = {
    {FigureId::Fig1, "fig1"},
    {FigureId::Fig2, "fig2"},
    {FigureId::Fig3, "fig3"},
    {FigureId::Fig4, "fig4"},
    {FigureId::Fig5, "fig5"},
    {FigureId::Fig6, "fig6"},
    {FigureId::Fig7DeltaF, "fig7_deltaF"},
    {FigureId::Fig8, "fig8"},
    {FigureId::Fig9Affinity, "fig9_affinity"},
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    std::string piece(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    const auto b = piece.find_first_not_of(" \t");
    const auto e = piece.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : piece.substr(b, e - b + 1));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Plain numbers, plus "pi", "pi/k" and "k*pi" for angles.
double parse_real(std::string_view key, std::string_view text) {
  auto number = [&](std::string_view t) {
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
      throw ConfigError("invalid number for '" + std::string(key) + "': " + std::string(text));
    return v;
  };
  if (text == "pi") return kPi;
  if (text.starts_with("pi/")) return kPi / number(text.substr(3));
  if (text.ends_with("*pi")) return kPi * number(text.substr(0, text.size() - 3));
  return number(text);
}

int parse_int(std::string_view key, std::string_view text) {
  int v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ConfigError("invalid integer for '" + std::string(key) + "': " + std::string(text));
  return v;
}

std::vector<double> linspace(double a, double b, double step) {
  const int n = static_cast<int>(std::llround((b - a) / step));
  std::vector<double> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = a + i * step;
  return out;
}

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_number(*d);
  if (const long long* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

ojson cell_json(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return std::strtod(format_number(*d).c_str(), nullptr);
  }
  if (const long long* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

const std::vector<ResourceSpec> kSectionFourResources = {
    ResourceSpec::twin_beam(0.0, kPi), ResourceSpec::squeezed_number(0.0, kPi),
    ResourceSpec::photon_added(0.0, kPi), ResourceSpec::photon_subtracted(0.0, kPi)};
const std::vector<std::string> kResourceLabels = {
    "squeezed state", "squeezed number", "photon-added", "photon-subtracted"};

std::vector<InputSpec> figure_inputs() {
  return {InputSpec::coherent({0.3, 0.0}), InputSpec::squeezed_vacuum(0.8, 0.0),
          InputSpec::fock1(), InputSpec::photon_added_coherent({0.3, 0.0}),
          InputSpec::squeezed_fock1(0.8, 0.0)};
}
const std::vector<std::string> kInputLabels = {
    "coherent", "squeezed", "Fock", "photon-added coherent", "squeezed Fock"};

double delta_c(double r) { return delta_closed_form(ClosedFormKind::Coherent, r); }
double delta_f(double r) { return delta_closed_form(ClosedFormKind::Fock1, r, true); }

Table fidelity_vs_r(const InputSpec& in, const std::vector<double>& grid) {
  Table t;
  t.columns = {"r"};
  t.columns.insert(t.columns.end(), kResourceLabels.begin(), kResourceLabels.end());
  for (double r : grid) {
    std::vector<Cell> row{r};
    for (const auto& res : kSectionFourResources)
      row.emplace_back(fidelity(in, res.with_squeezing(r, kPi)).value);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<FigurePanel> single(Table t) { return {FigurePanel{"", std::move(t)}}; }

}  // namespace

Command parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands)
    if (n == name) return c;
  throw ConfigError("unknown command: " + std::string(name));
}

FigureId parse_figure_id(std::string_view name) {
  for (const auto& [id, n] : kFigures)
    if (n == name) return id;
  throw ConfigError("unknown figure id: " + std::string(name));
}

std::string_view to_string(Command c) {
  for (const auto& [cc, n] : kCommands)
    if (cc == c) return n;
  return "?";
}

std::string_view to_string(FigureId id) {
  for (const auto& [i, n] : kFigures)
    if (i == id) return n;
  return "?";
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("grid range must be start:stop:step");
    const double a = parse_real("grid", parts[0]);
    const double b = parse_real("grid", parts[1]);
    const double h = parse_real("grid", parts[2]);
    if (!(h > 0.0) || !(b >= a)) throw ConfigError("grid range needs start <= stop and step > 0");
    out = linspace(a, b, h);
  } else {
    for (const auto& p : split(text, ',')) out.push_back(parse_real("grid", p));
  }
  if (out.empty()) throw ConfigError("grid is empty");
  return out;
}

void RunConfig::validate() const {
  if (resources.empty() || inputs.empty()) throw ConfigError("resource and input lists must be non-empty");
  for (const auto& r : resources) {
    try {
      parse_resource_family(r);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  for (const auto& i : inputs) {
    try {
      parse_input_family(i);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  if (!(r >= 0.0) || !std::isfinite(r)) throw ConfigError("r must be finite and non-negative");
  if (!(s >= 0.0) || !std::isfinite(s)) throw ConfigError("s must be finite and non-negative");
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
  if (cutoff < 2) throw ConfigError("cutoff must be at least 2");
  if (!(gain > 0.0)) throw ConfigError("gain must be positive");
  if (method != "moment" && method != "quadrature" && method != "both")
    throw ConfigError("method must be moment, quadrature or both");
  for (double g : grid)
    if (!(g >= 0.0)) throw ConfigError("grid values must be non-negative squeezings");
  if (command == Command::Figure) parse_figure_id(figure);
}

RunConfig make_run_config(Command command, const std::map<std::string, std::string>& settings) {
  RunConfig cfg;
  cfg.command = command;
  for (const auto& [key, value] : settings) {
    if (key == "resource") {
      cfg.resources = split(value, ',');
    } else if (key == "input") {
      cfg.inputs = split(value, ',');
    } else if (key == "r") {
      cfg.r = parse_real(key, value);
    } else if (key == "phi") {
      cfg.phi = parse_real(key, value);
    } else if (key == "delta") {
      cfg.delta = parse_real(key, value);
    } else if (key == "theta") {
      cfg.theta = parse_real(key, value);
    } else if (key == "beta") {
      const auto parts = split(value, ',');
      if (parts.size() > 2) throw ConfigError("beta is 're' or 're,im'");
      cfg.beta = {parse_real(key, parts[0]), parts.size() == 2 ? parse_real(key, parts[1]) : 0.0};
    } else if (key == "s") {
      cfg.s = parse_real(key, value);
    } else if (key == "varphi") {
      cfg.varphi = parse_real(key, value);
    } else if (key == "grid") {
      cfg.grid = parse_grid(value);
    } else if (key == "tol") {
      cfg.tol = parse_real(key, value);
    } else if (key == "cutoff") {
      cfg.cutoff = parse_int(key, value);
    } else if (key == "method") {
      cfg.method = value;
    } else if (key == "gain") {
      cfg.gain = parse_real(key, value);
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "format") {
      if (value == "csv") cfg.format = OutputFormat::Csv;
      else if (value == "json") cfg.format = OutputFormat::Json;
      else throw ConfigError("format must be csv or json");
    } else if (key == "figure") {
      cfg.figure = value;
    } else {
      throw ConfigError("unknown setting: " + key);
    }
  }
  cfg.validate();
  return cfg;
}

std::map<std::string, std::string> read_config_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  ojson j;
  try {
    j = ojson::parse(in);
  } catch (const std::exception& e) {
    throw ConfigError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw ConfigError("config file must hold a flat JSON object");
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) out[key] = value.get<std::string>();
    else if (value.is_number_integer()) out[key] = std::to_string(value.get<long long>());
    else if (value.is_number()) out[key] = format_number(value.get<double>());
    else throw ConfigError("config value for '" + key + "' must be a string or number");
  }
  return out;
}

ResourceSpec resource_from(const RunConfig& cfg, std::string_view family, double r) {
  return ResourceSpec::make(parse_resource_family(family), r, cfg.phi, cfg.delta, cfg.theta);
}

InputSpec input_from(const RunConfig& cfg, std::string_view family) {
  switch (parse_input_family(family)) {
    case InputFamily::Coherent: return InputSpec::coherent(cfg.beta);
    case InputFamily::SqueezedVacuum: return InputSpec::squeezed_vacuum(cfg.s, cfg.varphi);
    case InputFamily::Fock1: return InputSpec::fock1();
    case InputFamily::PhotonAddedCoherent: return InputSpec::photon_added_coherent(cfg.beta);
    case InputFamily::SqueezedFock1: return InputSpec::squeezed_fock1(cfg.s, cfg.varphi);
  }
  throw ConfigError("unknown input family");
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << csv_field(table.columns[i]);
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
    os << "\n";
  }
}

void write_json_record(std::ostream& os, const std::vector<std::pair<std::string, Cell>>& record) {
  ojson j = ojson::object();
  for (const auto& [k, v] : record) j[k] = cell_json(v);
  os << j.dump(2) << "\n";
}

void write_json_table(std::ostream& os, const Table& table) {
  ojson j;
  j["columns"] = table.columns;
  j["rows"] = ojson::array();
  for (const auto& row : table.rows) {
    ojson r = ojson::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    j["rows"].push_back(std::move(r));
  }
  os << j.dump(2) << "\n";
}

std::vector<FigurePanel> figure_data(FigureId id) {
  const auto inputs = figure_inputs();
  switch (id) {
    case FigureId::Fig1: {
      Table t{{"r", "squeezed state", "squeezed number", "photon-added / photon-subtracted"}, {}};
      for (double r : linspace(0.0, 1.5, 0.05)) {
        t.rows.push_back({r, entanglement_entropy(ResourceSpec::twin_beam(r, kPi)),
                          entanglement_entropy(ResourceSpec::squeezed_number(r, kPi)),
                          entanglement_entropy(ResourceSpec::photon_subtracted(r, kPi))});
      }
      return single(std::move(t));
    }
    case FigureId::Fig2: {
      const std::vector<double> rs = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
      Table a{{"delta"}, {}};
      for (double r : rs) a.columns.push_back("r=" + format_number(r));
      for (double d : linspace(0.0, kPi, kPi / 60)) {
        std::vector<Cell> row{d};
        for (double r : rs) row.emplace_back(entanglement_entropy(squeezed_bell_at(r, d)));
        a.rows.push_back(std::move(row));
      }
      Table b{{"r", "squeezed Bell (coherent optimum)", "squeezed Bell (Fock optimum)",
               "photon-added / photon-subtracted"},
              {}};
      for (double r : linspace(0.0, 1.5, 0.05)) {
        b.rows.push_back({r, entanglement_entropy(squeezed_bell_at(r, delta_c(r))),
                          entanglement_entropy(squeezed_bell_at(r, delta_f(r))),
                          entanglement_entropy(ResourceSpec::photon_subtracted(r, kPi))});
      }
      return {{"I", std::move(a)}, {"II", std::move(b)}};
    }
    case FigureId::Fig3:
    case FigureId::Fig4: {
      const auto grid = linspace(0.0, 1.5, 0.01);
      const int first = id == FigureId::Fig3 ? 0 : 2;
      return {{"I", fidelity_vs_r(inputs[first], grid)},
              {"II", fidelity_vs_r(inputs[first + 1], grid)}};
    }
    case FigureId::Fig5: {
      const auto grid = linspace(0.0, 1.5, 0.01);
      Table b{{"r"}, {}};
      b.columns.insert(b.columns.end(), kInputLabels.begin(), kInputLabels.end());
      for (double r : grid) {
        std::vector<Cell> row{r};
        for (const auto& in : inputs) row.emplace_back(fidelity(in, squeezed_bell_at(r, kPi / 4)).value);
        b.rows.push_back(std::move(row));
      }
      return {{"I", fidelity_vs_r(inputs[4], grid)}, {"II", std::move(b)}};
    }
    case FigureId::Fig6: {
      Table t{{"r"}, {}};
      t.columns.insert(t.columns.end(), kInputLabels.begin(), kInputLabels.end());
      for (double r : linspace(0.0, 1.5, 0.01)) {
        std::vector<Cell> row{r};
        for (const auto& in : inputs) row.emplace_back(optimize_delta(in, r).fidelity_star);
        t.rows.push_back(std::move(row));
      }
      return single(std::move(t));
    }
    case FigureId::Fig7DeltaF: {
      Table a{{"r"}, {}};
      a.columns.insert(a.columns.end(), kInputLabels.begin(), kInputLabels.end());
      Table b = a;
      for (double r : linspace(0.0, 3.0, 0.02)) {
        std::vector<Cell> ra{r}, rb{r};
        for (const auto& in : inputs) {
          const double opt = optimize_delta(in, r).fidelity_star;
          const double tb = fidelity(in, ResourceSpec::twin_beam(r, kPi)).value;
          const double pss = fidelity(in, ResourceSpec::photon_subtracted(r, kPi)).value;
          ra.emplace_back((opt - tb) / tb);
          rb.emplace_back((opt - pss) / pss);
        }
        a.rows.push_back(std::move(ra));
        b.rows.push_back(std::move(rb));
      }
      return {{"I", std::move(a)}, {"II", std::move(b)}};
    }
    case FigureId::Fig8: {
      Table a{{"delta", "r=0", "r=0.8"}, {}};
      for (double d : linspace(0.0, kPi, kPi / 60)) {
        a.rows.push_back({d, non_gaussianity(squeezed_bell_at(0.0, d)),
                          non_gaussianity(squeezed_bell_at(0.8, d))});
      }
      Table b{{"r", "squeezed Bell (coherent optimum)", "squeezed Bell (Fock optimum)",
               "photon-added", "photon-subtracted"},
              {}};
      for (double r : linspace(0.0, 1.5, 0.05)) {
        b.rows.push_back({r, non_gaussianity(squeezed_bell_at(r, delta_c(r))),
                          non_gaussianity(squeezed_bell_at(r, delta_f(r))),
                          non_gaussianity(ResourceSpec::photon_added(r, kPi)),
                          non_gaussianity(ResourceSpec::photon_subtracted(r, kPi))});
      }
      return {{"I", std::move(a)}, {"II", std::move(b)}};
    }
    case FigureId::Fig9Affinity: {
      Table t{{"r", "squeezed Bell (coherent optimum)", "squeezed Bell (Fock optimum)",
               "photon-added", "photon-subtracted", "squeezed number"},
              {}};
      for (double r : linspace(0.0, 3.0, 0.05)) {
        t.rows.push_back({r, vacuum_affinity(squeezed_bell_at(r, delta_c(r))).value,
                          vacuum_affinity(squeezed_bell_at(r, delta_f(r))).value,
                          vacuum_affinity(ResourceSpec::photon_added(r, kPi)).value,
                          vacuum_affinity(ResourceSpec::photon_subtracted(r, kPi)).value,
                          vacuum_affinity(ResourceSpec::squeezed_number(r, kPi)).value});
      }
      return single(std::move(t));
    }
  }
  throw ConfigError("unknown figure id");
}

namespace {

ojson conventions() {
  ojson c;
  c["squeezer"] = "exp(-zeta a1+ a2+ + conj(zeta) a1 a2)";
  c["characteristic_function"] = "Tr[D(alpha) rho], symmetric order";
  c["log_base"] = "natural";
  c["vacuum_covariance"] = "I/2";
  c["bell_cross_term"] = "2 c1 c2 Re[exp(-i theta) xi1 xi2]";
  c["number_format"] = "%.12g";
  return c;
}

ojson settings_json(const RunConfig& cfg) {
  ojson s;
  s["command"] = to_string(cfg.command);
  s["resource"] = cfg.resources;
  s["input"] = cfg.inputs;
  s["r"] = cell_json(cfg.r);
  s["phi"] = cell_json(cfg.phi);
  s["delta"] = cell_json(cfg.delta);
  s["theta"] = cell_json(cfg.theta);
  s["beta"] = {cell_json(cfg.beta.real()), cell_json(cfg.beta.imag())};
  s["s"] = cell_json(cfg.s);
  s["varphi"] = cell_json(cfg.varphi);
  ojson g = ojson::array();
  for (double x : cfg.grid) g.push_back(cell_json(x));
  s["grid"] = g;
  s["tol"] = cfg.tol;
  s["cutoff"] = cfg.cutoff;
  s["method"] = cfg.method;
  s["gain"] = cell_json(cfg.gain);
  if (!cfg.figure.empty()) s["figure"] = cfg.figure;
  return s;
}

void write_sidecar(const fs::path& data_path, const ojson& settings,
                   const std::vector<std::string>& columns) {
  ojson meta;
  meta["data_file"] = data_path.filename().string();
  meta["settings"] = settings;
  meta["truncation"] = {{"norm_tolerance", TruncationPolicy{}.tolerance},
                        {"cutoff_start", kDefaultCutoff},
                        {"cutoff_cap", TruncationPolicy{}.cap}};
  meta["scalar_search"] = {{"grid_points", 65}, {"argument_tolerance", 1e-8}, {"max_iterations", 200}};
  meta["conventions"] = conventions();
  meta["columns"] = columns;
  const fs::path side = data_path.string() + ".meta.json";
  std::ofstream os(side, std::ios::binary);
  if (!os) throw IoError("cannot write " + side.string());
  os << meta.dump(2) << "\n";
  if (!os) throw IoError("write failed for " + side.string());
}

using Record = std::vector<std::pair<std::string, Cell>>;

Table record_table(const Record& rec) {
  Table t;
  std::vector<Cell> row;
  for (const auto& [k, v] : rec) {
    t.columns.push_back(k);
    row.push_back(v);
  }
  t.rows.push_back(std::move(row));
  return t;
}

void add_resource_fields(Record& rec, const ResourceSpec& spec) {
  rec.emplace_back("resource", std::string(to_string(spec.family)));
  rec.emplace_back("r", spec.zeta.r);
  rec.emplace_back("phi", spec.zeta.phi);
  if (spec.bell) {
    rec.emplace_back("delta", spec.bell->delta);
    rec.emplace_back("theta", spec.bell->theta);
  }
}

struct Output {
  bool is_table = false;
  Record record;
  Table table;
};

Output dispatch(const RunConfig& cfg) {
  Output out;
  switch (cfg.command) {
    case Command::Fidelity: {
      const InputSpec in = input_from(cfg, cfg.inputs.front());
      const ResourceSpec res = resource_from(cfg, cfg.resources.front(), cfg.r);
      out.record.emplace_back("input", std::string(to_string(in.family)));
      add_resource_fields(out.record, res);
      if (cfg.method == "moment" || cfg.method == "both") {
        const FidelityResult f = fidelity(in, res);
        out.record.emplace_back("fidelity", f.value);
        out.record.emplace_back("est_error", f.est_error);
      }
      if (cfg.method == "quadrature" || cfg.method == "both") {
        const FidelityResult f = fidelity_quadrature(in, res, std::max(cfg.tol, 1e-10));
        out.record.emplace_back("fidelity_quadrature", f.value);
        out.record.emplace_back("quadrature_error", f.est_error);
      }
      return out;
    }
    case Command::Sweep: {
      std::vector<InputSpec> ins;
      std::vector<ResourceSpec> res;
      for (const auto& i : cfg.inputs) ins.push_back(input_from(cfg, i));
      for (const auto& r : cfg.resources) res.push_back(resource_from(cfg, r, 0.0));
      const auto grid = cfg.grid.empty() ? linspace(0.0, 1.5, 0.05) : cfg.grid;
      out.is_table = true;
      out.table.columns = {"input", "resource", "r", "phi", "fidelity", "error"};
      for (const auto& row : sweep(ins, res, grid)) {
        out.table.rows.push_back({std::string(to_string(row.input.family)),
                                  std::string(to_string(row.resource.family)), row.r,
                                  row.resource.zeta.phi, row.fidelity, row.error});
      }
      return out;
    }
    case Command::Optimize: {
      const InputSpec in = input_from(cfg, cfg.inputs.front());
      auto closed = [&](double r) -> double {
        if (in.family == InputFamily::Coherent) return delta_c(r);
        if (in.family == InputFamily::Fock1) return delta_f(r);
        return std::nan("");
      };
      if (!cfg.grid.empty()) {
        out.is_table = true;
        out.table.columns = {"r", "delta_star", "fidelity_star", "delta_closed_form"};
        for (double r : cfg.grid) {
          const auto o = optimize_delta(in, r, cfg.phi, cfg.theta);
          out.table.rows.push_back({r, o.delta_star, o.fidelity_star, closed(r)});
        }
        return out;
      }
      const auto o = optimize_delta(in, cfg.r, cfg.phi, cfg.theta);
      out.record = {{"input", std::string(to_string(in.family))},
                    {"r", cfg.r},
                    {"phi", cfg.phi},
                    {"theta", cfg.theta},
                    {"delta_star", o.delta_star},
                    {"fidelity_star", o.fidelity_star},
                    {"method", std::string(to_string(o.method))},
                    {"iterations", static_cast<long long>(o.iterations)},
                    {"delta_closed_form", closed(cfg.r)}};
      return out;
    }
    case Command::Metrics: {
      const ResourceSpec res = resource_from(cfg, cfg.resources.front(), cfg.r);
      const MetricReport m = compute_metrics(res);
      add_resource_fields(out.record, res);
      out.record.emplace_back("entropy", m.entropy);
      out.record.emplace_back("non_gaussianity", m.non_gaussianity);
      out.record.emplace_back("tb_relative_nG", m.tb_relative_nG);
      out.record.emplace_back("affinity", m.affinity);
      out.record.emplace_back("affinity_argmax_s", m.affinity_argmax_s);
      return out;
    }
    case Command::Plan: {
      const ResourceSpec target = ResourceSpec::squeezed_bell(cfg.r, cfg.phi, cfg.delta, cfg.theta);
      const PumpPlan plan = solve_pump_amplitudes(target, cfg.gain);
      const CascadeResult sim = simulate_cascade(plan, cfg.cutoff);
      const double ov = std::norm(overlap(sim.state, build_resource(target, cfg.cutoff)));
      const Eigen::Matrix2cd m = pump_system_matrix(target.zeta);
      Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
      add_resource_fields(out.record, target);
      out.record.emplace_back("kappa_a_re", plan.kappa_a.real());
      out.record.emplace_back("kappa_a_im", plan.kappa_a.imag());
      out.record.emplace_back("kappa_b_re", plan.kappa_b.real());
      out.record.emplace_back("kappa_b_im", plan.kappa_b.imag());
      out.record.emplace_back("predicted_success_weight", plan.predicted_success_weight);
      out.record.emplace_back("simulated_success_weight", sim.weight);
      out.record.emplace_back("round_trip_overlap", ov);
      out.record.emplace_back("system_det_abs", std::abs(m.determinant()));
      out.record.emplace_back("system_condition",
                              svd.singularValues()(0) / svd.singularValues()(1));
      out.record.emplace_back("large_gain", std::string(plan.large_gain ? "true" : "false"));
      return out;
    }
    case Command::Figure:
      break;
  }
  throw ConfigError("command has no record output");
}

}  // namespace

std::vector<fs::path> run_figure(FigureId id, const fs::path& out_path) {
  const auto panels = figure_data(id);
  std::vector<fs::path> written;
  ojson settings;
  settings["figure"] = to_string(id);
  settings["phi"] = cell_json(kPi);
  settings["input_squeezing_s"] = 0.8;
  settings["beta"] = 0.3;
  for (const auto& panel : panels) {
    fs::path p = out_path;
    if (!panel.suffix.empty()) {
      p.replace_filename(out_path.stem().string() + "_" + panel.suffix +
                         (out_path.has_extension() ? out_path.extension().string() : ".csv"));
    }
    if (p.has_parent_path()) {
      std::error_code ec;
      fs::create_directories(p.parent_path(), ec);
    }
    std::ofstream os(p, std::ios::binary);
    if (!os) throw IoError("cannot write " + p.string());
    write_csv(os, panel.table);
    if (!os) throw IoError("write failed for " + p.string());
    ojson s = settings;
    if (!panel.suffix.empty()) s["panel"] = panel.suffix;
    write_sidecar(p, s, panel.table.columns);
    written.push_back(p);
  }
  return written;
}

int run_config(const RunConfig& cfg, std::ostream& console, std::ostream& errors) {
  try {
    cfg.validate();
    if (cfg.command == Command::Figure) {
      const fs::path out = cfg.out.empty() ? fs::path(cfg.figure + ".csv") : fs::path(cfg.out);
      for (const auto& p : run_figure(parse_figure_id(cfg.figure), out)) console << p.string() << "\n";
      return kExitOk;
    }
    const Output result = dispatch(cfg);
    OutputFormat fmt = cfg.format;
    if (fmt == OutputFormat::Auto) fmt = result.is_table ? OutputFormat::Csv : OutputFormat::Json;
    const Table table = result.is_table ? result.table : record_table(result.record);

    std::ostringstream body;
    if (fmt == OutputFormat::Csv) write_csv(body, table);
    else if (result.is_table) write_json_table(body, table);
    else write_json_record(body, result.record);

    if (cfg.out.empty()) {
      console << body.str();
      return kExitOk;
    }
    const fs::path p(cfg.out);
    if (p.has_parent_path()) {
      std::error_code ec;
      fs::create_directories(p.parent_path(), ec);
    }
    std::ofstream os(p, std::ios::binary);
    if (!os) throw IoError("cannot write " + p.string());
    os << body.str();
    if (!os) throw IoError("write failed for " + p.string());
    write_sidecar(p, settings_json(cfg), table.columns);
    return kExitOk;
  } catch (const ConvergenceError& e) {
    errors << "convergence error: " << e.what() << " (achieved " << e.achieved() << ")\n";
    return kExitConvergence;
  } catch (const IoError& e) {
    errors << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DomainError& e) {
    errors << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    errors << "error: " << e.what() << "\n";
    return kExitConvergence;
  }
}

}  // namespace cvtele
