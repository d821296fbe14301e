#include "cnt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cnt/bands.hpp"
#include "cnt/error.hpp"
#include "cnt/honeycomb.hpp"
#include "cnt/oracle.hpp"
#include "cnt/tube.hpp"

namespace cnt::cli {

using json = nlohmann::json;

namespace {

// Thrown for failures writing the output file.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

IntTriple parse_triple(const std::string& text, const std::string& flag) {
  std::stringstream ss(text);
  std::string part;
  std::vector<std::int64_t> vals;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      vals.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, flag + " expects three comma-separated integers, got '" + text + "'");
    }
  }
  if (vals.size() != 3) {
    throw Error(ErrorCode::InvalidArgument, flag + " expects three comma-separated integers, got '" + text + "'");
  }
  return {vals[0], vals[1], vals[2]};
}

json to_json(const IntTriple& t) { return json::array({t[0], t[1], t[2]}); }
json to_json(const RealTriple& t) { return json::array({t[0], t[1], t[2]}); }

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<bool> integral;
  std::vector<std::vector<double>> rows;
};

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (t.integral[i]) {
        os << static_cast<long long>(row[i]);
      } else {
        os << fmt12(row[i]);
      }
    }
    os << '\n';
  }
}

json table_json(const Table& t) {
  json arr = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (t.integral[i]) {
        obj[t.columns[i]] = static_cast<long long>(row[i]);
      } else {
        obj[t.columns[i]] = row[i];
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr;
}

std::string csv_cell(const json& v) {
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
    return s;
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return fmt12(v.get<double>());
  return v.dump();
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& console) : cfg_(cfg), console_(console) {}

  void report(const json& obj) {
    if (cfg_.format.value_or(Format::Json) == Format::Json) {
      emit(obj.dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : obj.items()) {
      os << (first ? "" : ",") << k;
      first = false;
    }
    os << '\n';
    first = true;
    for (const auto& [k, v] : obj.items()) {
      os << (first ? "" : ",") << csv_cell(v);
      first = false;
    }
    os << '\n';
    emit(os.str());
  }

  void table(const Table& t) {
    if (cfg_.format.value_or(Format::Csv) == Format::Json) {
      emit(table_json(t).dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    write_csv(t, os);
    emit(os.str());
  }

 private:
  void emit(const std::string& text) {
    if (cfg_.out.empty()) {
      console_ << text;
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary | std::ios::trunc);
    if (!f) throw IoFailure("cannot open output file '" + cfg_.out + "'");
    f << text;
    f.flush();
    if (!f) throw IoFailure("failed writing output file '" + cfg_.out + "'");
  }

  const RunConfig& cfg_;
  std::ostream& console_;
};

ChiralityVector chirality_with_hint(const std::string& text) {
  const IntTriple raw = parse_triple(text, "--c");
  try {
    return tube::validate_chirality(raw);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OrderingViolation) throw;
    const ChiralityVector fixed = tube::canonicalize_chirality(raw);
    std::ostringstream os;
    os << e.what() << "; the equivalent tube in canonical form is --c " << fixed[0] << ',' << fixed[1] << ','
       << fixed[2];
    throw Error(e.code(), os.str());
  }
}

BandParams params_for(const RunConfig& cfg, const ChiralityVector& c) {
  const double a = cfg.scale();
  BandParams p = cfg.beta ? bands::magnetic_params(cfg.gamma, *cfg.beta, c, a) : BandParams::uniform(cfg.gamma, a);
  p.epsilon = cfg.epsilon;
  return p;
}

json classify_report(const ChiralityVector& c, const RunConfig& cfg) {
  const TubeSymmetry s = tube::tube_symmetry(c, cfg.scale());
  json r;
  r["c"] = to_json(c.coords());
  r["class"] = std::string(to_string(tube::classify(c)));
  r["n"] = s.n;
  r["c_prime"] = to_json(s.c_prime.coords());
  r["R"] = s.R;
  r["b"] = to_json(s.b.coords());
  r["q"] = s.q;
  r["q_prime"] = s.q_prime;
  r["omega"] = to_json(s.omega.coords());
  r["delta"] = s.delta;
  r["diameter_angstrom"] = tube::diameter(c, cfg.scale());
  r["metallic"] = bands::is_metallic(c);
  return r;
}

json gap_report(const ChiralityVector& c, const RunConfig& cfg) {
  const TubeSymmetry s = tube::tube_symmetry(c, cfg.scale());
  const GapResult g = bands::band_gap(s, params_for(cfg, c), cfg.resolution);
  json r;
  r["c"] = to_json(c.coords());
  r["gap"] = g.gap;
  r["argmin_m"] = g.argmin_m;
  r["argmin_k"] = to_json(g.argmin_k);
  r["argmin_kappa"] = g.argmin_kappa;
  r["metallic_by_theorem"] = g.metallic_by_theorem;
  r["beta"] = cfg.beta.value_or(0.0);
  return r;
}

Table bands_table(const ChiralityVector& c, const RunConfig& cfg) {
  const TubeSymmetry s = tube::tube_symmetry(c, cfg.scale());
  Table t{{"m", "kappa", "E_minus", "E_plus"}, {true, false, false, false}, {}};
  for (const BandTable& bt : bands::band_tables(s, cfg.resolution, params_for(cfg, c))) {
    for (std::size_t i = 0; i < bt.kappa.size(); ++i) {
      t.rows.push_back({double(bt.m), bt.kappa[i], bt.E_minus[i], bt.E_plus[i]});
    }
  }
  return t;
}

Table magsweep_table(const ChiralityVector& c, const RunConfig& cfg, int periods, int samples) {
  if (periods < 1) throw Error(ErrorCode::OutOfRange, "--periods must be at least 1");
  if (samples < 2) throw Error(ErrorCode::OutOfRange, "--samples must be at least 2");
  const double a = cfg.scale();
  const TubeSymmetry s = tube::tube_symmetry(c, a);
  const double period = bands::aharonov_bohm_period(s, a);
  const double start = cfg.beta.value_or(0.0);
  const int count = periods * (samples - 1) + 1;
  std::vector<double> betas(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    betas[static_cast<std::size_t>(i)] = start + period * double(i) / double(samples - 1);
  }
  Table t{{"beta", "gap"}, {false, false}, {}};
  for (const GapSample& g : bands::gap_vs_beta(s, cfg.gamma, a, betas, cfg.resolution)) t.rows.push_back({g.beta, g.gap});
  return t;
}

Table graphene_path_table(const RunConfig& cfg, const std::string& path, int samples) {
  if (samples < 2) throw Error(ErrorCode::OutOfRange, "--samples must be at least 2");
  const double a = cfg.scale();
  const SpecialPoints sp = bands::special_points(a);
  std::vector<KVector> nodes;
  for (char ch : path) {
    switch (ch) {
      case 'G': case 'g': nodes.push_back(sp.gamma); break;
      case 'K': case 'k': nodes.push_back(sp.K[0]); break;
      case 'M': case 'm': nodes.push_back(sp.M[0]); break;
      case '-': case ',': case ' ': break;
      default: throw Error(ErrorCode::InvalidArgument, std::string("unknown path label '") + ch + "' (use G, K, M)");
    }
  }
  if (nodes.size() < 2) throw Error(ErrorCode::InvalidArgument, "path needs at least two labels");

  std::vector<double> seg_len;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    seg_len.push_back(std::sqrt(geom::norm2(nodes[i + 1] - nodes[i])));
    total += seg_len.back();
  }
  if (!(total > 0.0)) throw Error(ErrorCode::InvalidArgument, "path has zero length");

  // Distribute samples-1 intervals over segments by length; every vertex is hit exactly.
  std::vector<int> steps(seg_len.size(), 0);
  int used = 0;
  for (std::size_t i = 0; i < seg_len.size(); ++i) {
    if (seg_len[i] == 0.0) continue;
    steps[i] = std::max(1, static_cast<int>(std::lround(double(samples - 1) * seg_len[i] / total)));
    used += steps[i];
  }
  for (std::size_t i = seg_len.size(); i-- > 0 && used != samples - 1;) {
    if (steps[i] == 0) continue;
    const int adjust = std::max(1 - steps[i], samples - 1 - used);
    steps[i] += adjust;
    used += adjust;
  }

  BandParams p = BandParams::uniform(cfg.gamma, a, cfg.epsilon);
  Table t{{"arclength", "k0", "k1", "k2", "E_minus", "E_plus"}, {false, false, false, false, false, false}, {}};
  double offset = 0.0;
  auto push = [&](const KVector& k, double s) {
    const EnergyPair e = bands::dispersion(k, p);
    t.rows.push_back({s, k[0], k[1], k[2], e.minus, e.plus});
  };
  for (std::size_t i = 0; i < seg_len.size(); ++i) {
    for (int j = 0; j < steps[i]; ++j) {
      const double f = double(j) / double(steps[i]);
      push(nodes[i] + f * (nodes[i + 1] - nodes[i]), offset + f * seg_len[i]);
    }
    offset += seg_len[i];
  }
  push(nodes.back(), total);
  return t;
}

json neighbors_report(const IntTriple& raw_v, const std::optional<std::string>& c_text) {
  const LatticeSite v(raw_v);
  json r;
  r["v"] = to_json(v.coords());
  r["nu"] = honeycomb::nu(v);
  if (!c_text) {
    json nn = json::array(), nnn = json::array();
    for (const auto& u : honeycomb::nearest_neighbors(v)) nn.push_back(to_json(u.coords()));
    for (const auto& u : honeycomb::next_nearest_neighbors(v)) nnn.push_back(to_json(u.coords()));
    r["nearest"] = nn;
    r["next_nearest"] = nnn;
    return r;
  }
  const ChiralityVector c = chirality_with_hint(*c_text);
  const NodeClass nc = tube::canonical_rep(v, c);
  json nn = json::array(), nnn = json::array();
  for (const auto& u : tube::class_neighbors(nc)) nn.push_back(to_json(u.rep.coords()));
  for (const auto& u : tube::class_next_nearest(nc)) nnn.push_back(to_json(u.rep.coords()));
  r["c"] = to_json(c.coords());
  r["class_rep"] = to_json(nc.rep.coords());
  r["nearest"] = nn;
  r["next_nearest"] = nnn;
  return r;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularPoint:
    case ErrorCode::InvariantViolation:
    case ErrorCode::NonConvergence:
      return kNumericalFailure;
    default:
      return kInvalidInput;
  }
}

}  // namespace

void RunConfig::validate() const {
  if (!(gamma > 0.0)) throw Error(ErrorCode::InvalidArgument, "--gamma must be positive");
  if (!(bond_length > 0.0)) throw Error(ErrorCode::InvalidArgument, "--bond-length must be positive");
  if (resolution < 64) throw Error(ErrorCode::InvalidArgument, "--resolution must be at least 64");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "--tol must be positive");
}

double RunConfig::scale() const { return honeycomb::bond_length_scale(bond_length); }

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read config file '" + path + "'");
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, "config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "config file must hold a flat JSON object");
  RunConfig cfg;
  try {
    for (const auto& [key, val] : j.items()) {
      if (key == "gamma") cfg.gamma = val.get<double>();
      else if (key == "epsilon") cfg.epsilon = val.get<double>();
      else if (key == "bond_length") cfg.bond_length = val.get<double>();
      else if (key == "resolution") cfg.resolution = val.get<int>();
      else if (key == "tolerance" || key == "tol") cfg.tolerance = val.get<double>();
      else if (key == "beta") cfg.beta = val.get<double>();
      else if (key == "out") cfg.out = val.get<std::string>();
      else if (key == "format") {
        const auto s = val.get<std::string>();
        if (s == "csv") cfg.format = Format::Csv;
        else if (s == "json") cfg.format = Format::Json;
        else throw Error(ErrorCode::InvalidArgument, "format must be csv or json");
      } else {
        throw Error(ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad config value: ") + e.what());
  }
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphene and single-wall nanotube band structure in three-axes coordinates", "cntube"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<double> gamma, epsilon, bond, tol, beta;
  std::optional<int> resolution;
  std::optional<std::string> out_path, format, config_path;
  app.add_option("--gamma", gamma, "hopping energy gamma (> 0)");
  app.add_option("--epsilon", epsilon, "onsite energy");
  app.add_option("--bond-length", bond, "C-C bond length in angstrom");
  app.add_option("--resolution", resolution, "kappa samples per line");
  app.add_option("--tol", tol, "verification tolerance");
  app.add_option("--beta", beta, "axial magnetic field strength beta");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", config_path, "flat JSON config file; flags override it");

  std::string c_text;
  auto* classify = app.add_subcommand("classify", "symmetry parameters and metallicity of a tube");
  classify->add_option("--c", c_text, "chirality c0,c1,c2")->required();

  auto* bands_cmd = app.add_subcommand("bands", "zone-folded m-bands as CSV");
  bands_cmd->add_option("--c", c_text, "chirality c0,c1,c2")->required();

  auto* gap = app.add_subcommand("gap", "band gap and its location");
  gap->add_option("--c", c_text, "chirality c0,c1,c2")->required();

  int sweep_periods = 1;
  int sweep_samples = 201;
  auto* magsweep = app.add_subcommand("magsweep", "band gap versus axial flux");
  magsweep->add_option("--c", c_text, "chirality c0,c1,c2")->required();
  magsweep->add_option("--periods", sweep_periods, "number of flux periods");
  magsweep->add_option("--samples", sweep_samples, "samples per period");

  std::string path = "G-K-M-G";
  int path_samples = 300;
  auto* gpath = app.add_subcommand("graphene-path", "graphene bands along a path of special points");
  gpath->add_option("--path", path, "labels from G, K, M, e.g. G-K-M-G");
  gpath->add_option("--samples", path_samples, "total samples along the path");

  std::int64_t verify_periods = 4;
  bool spectra = false;
  auto* verify = app.add_subcommand("verify", "diagonalise a periodic tube segment and compare spectra");
  verify->add_option("--c", c_text, "chirality c0,c1,c2")->required();
  verify->add_option("--periods", verify_periods, "translational cells in the segment");
  verify->add_flag("--spectra", spectra, "include both sorted spectra in the report");

  std::string v_text;
  std::optional<std::string> nc_text;
  auto* neighbors = app.add_subcommand("neighbors", "nearest and next-to-nearest neighbours");
  neighbors->add_option("--v", v_text, "site v0,v1,v2 with sum 0 or 1")->required();
  neighbors->add_option("--c", nc_text, "chirality: report neighbour classes on the tube");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    RunConfig cfg = config_path ? load_config(*config_path) : RunConfig{};
    if (gamma) cfg.gamma = *gamma;
    if (epsilon) cfg.epsilon = *epsilon;
    if (bond) cfg.bond_length = *bond;
    if (resolution) cfg.resolution = *resolution;
    if (tol) cfg.tolerance = *tol;
    if (beta) cfg.beta = *beta;
    if (out_path) cfg.out = *out_path;
    if (format) cfg.format = *format == "json" ? Format::Json : Format::Csv;
    cfg.validate();

    Emitter emit(cfg, out);
    if (*classify) {
      emit.report(classify_report(chirality_with_hint(c_text), cfg));
    } else if (*bands_cmd) {
      emit.table(bands_table(chirality_with_hint(c_text), cfg));
    } else if (*gap) {
      emit.report(gap_report(chirality_with_hint(c_text), cfg));
    } else if (*magsweep) {
      emit.table(magsweep_table(chirality_with_hint(c_text), cfg, sweep_periods, sweep_samples));
    } else if (*gpath) {
      emit.table(graphene_path_table(cfg, path, path_samples));
    } else if (*verify) {
      const ChiralityVector c = chirality_with_hint(c_text);
      const TubeSymmetry s = tube::tube_symmetry(c, cfg.scale());
      const SpectrumReport rep = oracle::compare_spectra(s, verify_periods, params_for(cfg, c), cfg.tolerance);
      json r;
      r["c"] = to_json(c.coords());
      r["periods"] = verify_periods;
      r["dimension"] = rep.finite.size();
      r["beta"] = cfg.beta.value_or(0.0);
      r["tolerance"] = rep.tolerance;
      r["max_deviation"] = rep.max_deviation;
      r["pass"] = rep.pass;
      if (spectra) {
        r["finite"] = rep.finite;
        r["analytic"] = rep.analytic;
      }
      emit.report(r);
      return rep.pass ? kSuccess : kVerificationFailed;
    } else if (*neighbors) {
      emit.report(neighbors_report(parse_triple(v_text, "--v"), nc_text));
    }
    return kSuccess;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cnt::cli
