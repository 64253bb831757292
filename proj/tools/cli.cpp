#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "perron/beta_expansion.hpp"
#include "perron/digit_sets.hpp"
#include "perron/errors.hpp"
#include "perron/power_sums.hpp"

namespace perron::cli {

using Json = nlohmann::ordered_json;

unsigned long long parse_memory(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad memory limit '" + text + "'");
  }
  const std::string suffix = text.substr(pos);
  unsigned shift = 0;
  if (suffix.empty() || suffix == "B") {
    shift = 0;
  } else if (suffix == "k" || suffix == "K") {
    shift = 10;
  } else if (suffix == "M") {
    shift = 20;
  } else if (suffix == "G") {
    shift = 30;
  } else {
    throw ParseError("bad memory suffix '" + suffix + "' (use k, M or G)");
  }
  if (value == 0) throw ValidationError("memory limit must be positive");
  if (shift && value > (~0ULL >> shift)) throw ValidationError("memory limit too large");
  return value << shift;
}

namespace {

struct Config {
  std::string poly;
  long n = 0;
  long precision = 256;
  std::string memory = "1G";
  unsigned threads = 1;
  std::string format = "csv";
  std::string out;
  std::size_t state_cap = WitnessOptions{}.state_cap;
  std::size_t max_depth = WitnessOptions{}.max_depth;
  std::size_t conjugate = 0;
  std::string x;
  bool with_gaps = false;
};

/// Metadata plus one table; rendered as "# key: value" lines and a CSV table,
/// or as a single JSON object with the table under `table_key`.
struct Report {
  std::string command;
  Json meta = Json::object();
  std::string table_key = "rows";
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  void add_row(std::vector<Json> row) { rows.push_back(std::move(row)); }
};

Json exact(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();  // too wide for a JSON number consumer
}

Json finite_or_text(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

// Appends the lo/hi pair of an enclosure; lo rounded down, hi rounded up.
void push_enclosure(std::vector<Json>& row, const Interval& iv) {
  row.push_back(finite_or_text(iv.lo_double()));
  row.push_back(finite_or_text(iv.hi_double()));
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return v.dump();
}

void render(const Report& r, const std::string& format, std::ostream& os) {
  if (format == "json") {
    Json doc = Json::object();
    doc["schema"] = 1;
    doc["command"] = r.command;
    for (auto it = r.meta.begin(); it != r.meta.end(); ++it) doc[it.key()] = it.value();
    Json table = Json::array();
    for (const auto& row : r.rows) {
      Json rec = Json::object();
      for (std::size_t i = 0; i < r.columns.size(); ++i) rec[r.columns[i]] = row[i];
      table.push_back(std::move(rec));
    }
    doc[r.table_key] = std::move(table);
    os << doc.dump(2) << '\n';
    return;
  }
  for (auto it = r.meta.begin(); it != r.meta.end(); ++it) {
    os << "# " << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
       << '\n';
  }
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
  os << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

MinPoly load(const Config& cfg, Report& report) {
  if (cfg.poly.empty()) throw ValidationError("--poly is required");
  if (cfg.precision < 64) throw ValidationError("--precision must be at least 64");
  const IntPolynomial p = parse_polynomial(cfg.poly);
  MinPolyOptions opts;
  opts.precision = cfg.precision;
  opts.precision_cap = std::max<Bits>(opts.precision_cap, cfg.precision);
  MinPoly mp = make_min_poly(p, opts);
  report.meta["polynomial"] = p.to_string();
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(exact(c));
  report.meta["coefficients"] = std::move(coeffs);
  report.meta["d"] = mp.degree();
  report.meta["m"] = mp.floor_theta();
  return mp;
}

std::size_t require_n(const Config& cfg) {
  if (cfg.n < 1) throw ValidationError("--n must be at least 1");
  return static_cast<std::size_t>(cfg.n);
}

EnumerationOptions enumeration(const Config& cfg) {
  if (cfg.threads < 1) throw ValidationError("--threads must be at least 1");
  EnumerationOptions o;
  o.memory_budget = parse_memory(cfg.memory);
  o.threads = cfg.threads;
  return o;
}

std::string recurrence_text(const LinearRecurrence& rec) {
  std::ostringstream os;
  os << "a_n =";
  bool first = true;
  for (std::size_t i = 0; i < rec.order(); ++i) {
    const mpz_class& c = rec.coeffs[i];
    if (c == 0) continue;
    os << (c < 0 ? (first ? " -" : " - ") : (first ? " " : " + "));
    const mpz_class mag = abs(c);
    if (mag != 1) os << mag.get_str() << " ";
    os << "a_{n-" << i + 1 << "}";
    first = false;
  }
  if (first) os << " 0";
  return os.str();
}

int cmd_check(const Config& cfg, Report& r) {
  const MinPoly mp = load(cfg, r);
  const PerronVerdict verdict = is_perron(mp);
  r.meta["perron"] = to_string(verdict);
  const auto& set = mp.conjugates();
  r.meta["s"] = set.s();
  r.table_key = "conjugates";
  r.columns = {"j", "real", "re_lo", "re_hi", "im_lo", "im_hi", "modulus_lo", "modulus_hi"};
  for (std::size_t j = 1; j <= set.size(); ++j) {
    const ComplexInterval z = set.enclosure(j);
    std::vector<Json> row{j, set.root(j).is_real};
    push_enclosure(row, z.re());
    push_enclosure(row, z.im());
    push_enclosure(row, z.modulus());
    r.add_row(std::move(row));
  }
  switch (verdict) {
    case PerronVerdict::perron:
      return kOk;
    case PerronVerdict::not_perron:
      return kNotPerron;
    case PerronVerdict::undecided:
      return kUndecided;
  }
  return kUndecided;
}

int cmd_count(const Config& cfg, Report& r) {
  const MinPoly mp = load(cfg, r);
  const std::size_t n = require_n(cfg);
  const EnumerationOptions opts = enumeration(cfg);
  const CountSequence seq = count_sequence(mp, n, opts);
  const auto growth = growth_ratios(seq.counts, mp);
  r.meta["n_requested"] = n;
  r.meta["truncated"] = seq.truncated;
  if (seq.truncated) r.meta["note"] = seq.note;
  if (seq.counts.size() >= 8) {
    if (const auto rec = guess_recurrence(std::span<const std::uint64_t>(seq.counts))) {
      Json coeffs = Json::array();
      for (const auto& c : rec->coeffs) coeffs.push_back(exact(c));
      r.meta["recurrence_conjectural"] = recurrence_text(*rec);
      r.meta["recurrence_coefficients"] = std::move(coeffs);
    }
  }
  r.table_key = "levels";
  r.columns = {"n", "count", "ratio", "ratio_over_sqrt_n"};
  if (cfg.with_gaps) {
    r.columns.push_back("gap_lo");
    r.columns.push_back("gap_hi");
  }
  for (const auto& row : growth) {
    std::vector<Json> cells{row.n, row.count, row.ratio.mid_double(), row.ratio_over_sqrt_n.mid_double()};
    if (cfg.with_gaps) {
      try {
        push_enclosure(cells, min_gap(mp, row.n, opts).gap);
      } catch (const ResourceExhausted&) {
        // the level was only counted; it does not fit the budget as a set
        cells.push_back("");
        cells.push_back("");
      }
    }
    r.add_row(std::move(cells));
  }
  return seq.truncated ? kResourceCap : kOk;
}

int cmd_witness(const Config& cfg, Report& r) {
  const MinPoly mp = load(cfg, r);
  const PerronVerdict verdict = is_perron(mp);
  r.meta["perron"] = to_string(verdict);
  if (verdict == PerronVerdict::not_perron) throw std::domain_error("not a Perron number");
  if (verdict == PerronVerdict::undecided) {
    r.meta["failure"] = "Perron property undecided at the precision cap";
    return kUndecided;
  }
  WitnessOptions opts;
  opts.state_cap = cfg.state_cap;
  opts.max_depth = cfg.max_depth;
  const WitnessResult res = find_height_witness(mp, opts);
  Json stats = Json::object();
  stats["states"] = res.stats.states;
  stats["pruned"] = res.stats.pruned;
  stats["depth"] = res.stats.depth;
  stats["widest_layer"] = res.stats.widest_layer;
  stats["expanding"] = res.stats.expanding;
  stats["contracting"] = res.stats.contracting;
  stats["near_unit"] = res.stats.near_unit;
  r.table_key = "terms";
  r.columns = {"k", "c_k"};
  if (!res.witness) {
    r.meta["found"] = false;
    r.meta["failure"] = res.failure;
    r.meta["stats"] = std::move(stats);
    return kResourceCap;
  }
  const CollisionWitness& w = *res.witness;
  Json rec = Json::object();
  rec["coefficients"] = w.coeffs;
  rec["length"] = w.length();
  rec["verified"] = verify_witness(w, mp);
  r.meta["found"] = true;
  r.meta["witness"] = std::move(rec);
  r.meta["stats"] = std::move(stats);
  for (std::size_t k = 1; k <= w.length(); ++k) r.add_row({k, w.coeffs[k - 1]});
  return kOk;
}

int cmd_gap(const Config& cfg, Report& r) {
  const MinPoly mp = load(cfg, r);
  const std::size_t n = require_n(cfg);
  const EnumerationOptions opts = enumeration(cfg);
  r.table_key = "levels";
  r.columns = {"n", "count", "gap_lo", "gap_hi", "normalized_lo", "normalized_hi"};
  for (std::size_t k = 1; k <= n; ++k) {
    const GapResult g = min_gap(mp, k, opts);
    std::vector<Json> row{k, g.count};
    push_enclosure(row, g.gap);
    push_enclosure(row, g.normalized);
    r.add_row(std::move(row));
  }
  return kOk;
}

int cmd_traces(const Config& cfg, Report& r) {
  const MinPoly mp = load(cfg, r);
  const std::size_t n = require_n(cfg);
  r.table_key = "traces";
  r.columns = {"k", "alpha", "ratio_lo", "ratio_hi"};
  for (const auto& row : trace_ratio(mp, n)) {
    std::vector<Json> cells{row.k, row.alpha.get_str()};
    push_enclosure(cells, row.ratio);
    r.add_row(std::move(cells));
  }
  return kOk;
}

std::size_t require_conjugate(const Config& cfg, const MinPoly& mp) {
  if (cfg.conjugate < 1 || cfg.conjugate > mp.degree()) {
    throw ValidationError("--conjugate must be in 1.." + std::to_string(mp.degree()));
  }
  return cfg.conjugate;
}

int cmd_angular(const Config& cfg, Report& r) {
  const MinPoly mp = load(cfg, r);
  const std::size_t n = require_n(cfg);
  const AngularStats stats = angular_average(mp, require_conjugate(cfg, mp), n);
  r.meta["conjugate"] = stats.j;
  r.table_key = "averages";
  r.columns = {"t", "average_lo", "average_hi"};
  for (std::size_t t = 1; t <= stats.averages.size(); ++t) {
    std::vector<Json> row{t};
    push_enclosure(row, stats.averages[t - 1]);
    r.add_row(std::move(row));
  }
  return kOk;
}

int cmd_powersum(const Config& cfg, Report& r) {
  const MinPoly mp = load(cfg, r);
  const std::size_t n = require_n(cfg);
  const std::size_t j = require_conjugate(cfg, mp);
  r.meta["conjugate"] = j;
  r.table_key = "sums";
  r.columns = {"t", "sum_lo", "sum_hi", "normalizer_lo", "normalizer_hi"};
  for (const auto& row : real_power_sum(mp, j, n)) {
    std::vector<Json> cells{row.t};
    push_enclosure(cells, row.sum);
    push_enclosure(cells, row.normalizer);
    r.add_row(std::move(cells));
  }
  return kOk;
}

int cmd_expand(const Config& cfg, Report& r) {
  const MinPoly mp = load(cfg, r);
  const std::size_t n = require_n(cfg);
  DigitWord w;
  if (cfg.x.empty()) {
    r.meta["expansion"] = "quasi-greedy expansion of 1";
    w = quasi_greedy_one(mp, n);
  } else {
    const QThetaNumber x = parse_qtheta(cfg.x, mp.degree());
    Json coords = Json::array();
    for (const auto& q : x.coords()) coords.push_back(q.get_str());
    r.meta["expansion"] = "greedy";
    r.meta["x"] = std::move(coords);
    w = greedy_digits(mp, x, n);
  }
  r.meta["word"] = w.to_string(mp.floor_theta());
  r.table_key = "digits";
  r.columns = {"k", "digit"};
  for (std::size_t k = 1; k <= w.digits.size(); ++k) r.add_row({k, w.digits[k - 1]});
  return kOk;
}

int cmd_admissible(const Config& cfg, Report& r) {
  const MinPoly mp = load(cfg, r);
  const std::size_t n = require_n(cfg);
  const CountSequence seq = count_sequence(mp, n, enumeration(cfg));
  r.meta["truncated"] = seq.truncated;
  if (seq.truncated) r.meta["note"] = seq.note;
  r.meta["quasi_greedy_one"] = quasi_greedy_one(mp, n).to_string(mp.floor_theta());
  r.table_key = "levels";
  r.columns = {"n", "admissible", "count", "holds", "ratio_lo", "ratio_hi"};
  for (const auto& row : lower_bound_check(mp, seq.counts)) {
    std::vector<Json> cells{row.n, row.admissible.get_str(), row.count, row.holds};
    push_enclosure(cells, row.ratio);
    r.add_row(std::move(cells));
  }
  return seq.truncated ? kResourceCap : kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digit sets, witnesses and power sums for Perron numbers", "perron"};
  app.require_subcommand(1);
  Config cfg;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Config&, Report&);
  };
  const Command commands[] = {
      {"check", "Conjugates and Perron verdict", cmd_check},
      {"count", "Cardinalities #D_n and growth ratios", cmd_count},
      {"witness", "Shortest relation with coefficients bounded by floor(theta)", cmd_witness},
      {"gap", "Minimal positive gap of D_n", cmd_gap},
      {"traces", "Power sums alpha_k and alpha_k / theta^k", cmd_traces},
      {"angular", "Running means of Re((theta_j/|theta_j|)^k)", cmd_angular},
      {"powersum", "Partial sums of Re(theta_j^k)", cmd_powersum},
      {"expand", "Greedy expansion of x, or quasi-greedy expansion of 1", cmd_expand},
      {"admissible", "Admissible word counts against #D_n", cmd_admissible},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--poly", cfg.poly, "Monic integer polynomial, e.g. \"x^2 - x - 1\" or \"[-1,-1,1]\"")->required();
    sub->add_option("--precision", cfg.precision, "Working precision in bits (>= 64)")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
    const std::string name = c.name;
    if (name != "check" && name != "witness") sub->add_option("--n", cfg.n, "Largest level / length")->required();
    if (name == "count" || name == "gap" || name == "admissible") {
      sub->add_option("--memory", cfg.memory, "Memory budget, e.g. 512M or 2G")->capture_default_str();
      sub->add_option("--threads", cfg.threads, "Worker threads (output does not depend on it)")->capture_default_str();
    }
    if (name == "count") sub->add_flag("--with-gaps", cfg.with_gaps, "Add minimal gap columns");
    if (name == "witness") {
      sub->add_option("--state-cap", cfg.state_cap, "Maximum number of visited states")->capture_default_str();
      sub->add_option("--max-depth", cfg.max_depth, "Maximum relation length")->capture_default_str();
    }
    if (name == "angular" || name == "powersum") {
      sub->add_option("--conjugate", cfg.conjugate, "Conjugate index (1 = theta)")->required();
    }
    if (name == "expand") sub->add_option("--x", cfg.x, "Point of [0,1) as rational coordinates, e.g. \"[2,-1]\"");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInvalidInput;
  }

  const Command* chosen = nullptr;
  for (const auto& c : commands) {
    if (app.get_subcommand(c.name)->parsed()) chosen = &c;
  }

  Report report;
  report.command = chosen->name;
  int code = kOk;
  try {
    code = chosen->run(cfg, report);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ResourceExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kNotPerron;
  }

  if (cfg.out.empty()) {
    render(report, cfg.format, out);
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out << '\n';
      return kInvalidInput;
    }
    render(report, cfg.format, file);
  }
  return code;
}

}  // namespace perron::cli
