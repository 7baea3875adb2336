#include "rgg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rgg {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::logic_error("format_double: to_chars failed");
  return std::string(buf, ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("parse_double: bad value '" + s + "'");
  return v;
}

std::string to_edgelist(const Graph& g) {
  std::string out;
  out += std::to_string(g.n);
  out += ' ';
  out += std::to_string(g.edge_count);
  out += '\n';
  for (std::size_t i = 0; i < g.n; ++i) {
    for (const int j : g.adj[i]) {
      if (static_cast<std::size_t>(j) > i) {
        out += std::to_string(i);
        out += ' ';
        out += std::to_string(j);
        out += '\n';
      }
    }
  }
  return out;
}

Graph read_edgelist(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw IoError("edgelist: missing 'n m' header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    int i = 0, j = 0;
    if (!(in >> i >> j)) throw IoError("edgelist: truncated at edge " + std::to_string(k));
    edges.emplace_back(i, j);
  }
  try {
    return make_graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("edgelist: ") + e.what());
  }
}

Graph read_edgelist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_edgelist(in);
}

std::string to_color_lines(const Coloring& c) {
  std::string out;
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    out += std::to_string(v);
    out += ' ';
    out += std::to_string(c.colors[v]);
    out += '\n';
  }
  return out;
}

namespace {

constexpr const char* kTrialHeader =
    "seed,n,d,p,l,regime,param,r,nrd,chi_lo,chi_hi,chil_lo,chil_hi,chip_lo,chip_hi,"
    "omega,viol,scan_max,k_n,ratio,norm_ratio";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t from = 0;
  for (;;) {
    const std::size_t to = line.find(sep, from);
    if (to == std::string::npos) {
      out.push_back(line.substr(from));
      return out;
    }
    out.push_back(line.substr(from, to - from));
    from = to + 1;
  }
}

Regime parse_regime_token(const std::string& s) {
  if (s == "sub") return Regime::Sub;
  if (s == "conn") return Regime::Conn;
  if (s == "super") return Regime::Super;
  if (s == "sparse") return Regime::Sparse;
  throw std::invalid_argument("trial table: unknown regime '" + s + "'");
}

std::string regime_token(Regime r) {
  switch (r) {
    case Regime::Sub:
      return "sub";
    case Regime::Conn:
      return "conn";
    case Regime::Super:
      return "super";
    case Regime::Sparse:
      return "sparse";
  }
  throw std::logic_error("regime_token: bad regime");
}

}  // namespace

std::string trial_table_csv(const ExperimentReport& report) {
  std::string out = kTrialHeader;
  out += '\n';
  for (const TrialRecord& t : report.trials) {
    out += std::to_string(t.seed);
    out += ',';
    out += std::to_string(t.n);
    out += ',';
    out += std::to_string(t.d);
    out += ',';
    out += t.p.str();
    out += ',';
    out += std::to_string(t.l);
    out += ',';
    out += regime_token(t.regime);
    out += ',';
    out += format_double(t.regime_param);
    out += ',';
    out += format_double(t.r);
    out += ',';
    out += format_double(t.nrd);
    out += ',';
    out += std::to_string(t.chi_lo);
    out += ',';
    out += std::to_string(t.chi_hi);
    out += ',';
    out += std::to_string(t.chil_lo);
    out += ',';
    out += std::to_string(t.chil_hi);
    out += ',';
    out += std::to_string(t.chip_lo);
    out += ',';
    out += std::to_string(t.chip_hi);
    out += ',';
    out += std::to_string(t.omega);
    out += ',';
    out += std::to_string(t.detours);
    out += ',';
    out += std::to_string(t.scan_max);
    out += ',';
    if (t.growth) out += format_double(*t.growth);
    out += ',';
    out += format_double(t.ratio);
    out += ',';
    out += format_double(t.norm_ratio);
    out += '\n';
  }
  return out;
}

std::vector<TrialRecord> parse_trial_table_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != kTrialHeader)
    throw IoError("trial table: bad header");
  std::vector<TrialRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 21) throw IoError("trial table: wrong field count");
    TrialRecord t;
    t.seed = std::stoull(f[0]);
    t.n = std::stoull(f[1]);
    t.d = std::stoi(f[2]);
    t.p = LpNorm::parse(f[3]);
    t.l = std::stoi(f[4]);
    t.regime = parse_regime_token(f[5]);
    t.regime_param = parse_double(f[6]);
    t.r = parse_double(f[7]);
    t.nrd = parse_double(f[8]);
    t.chi_lo = std::stoi(f[9]);
    t.chi_hi = std::stoi(f[10]);
    t.chil_lo = std::stoi(f[11]);
    t.chil_hi = std::stoi(f[12]);
    t.chip_lo = std::stoi(f[13]);
    t.chip_hi = std::stoi(f[14]);
    t.omega = std::stoi(f[15]);
    t.detours = std::stoll(f[16]);
    t.scan_max = std::stoi(f[17]);
    if (!f[18].empty()) t.growth = parse_double(f[18]);
    t.ratio = parse_double(f[19]);
    t.norm_ratio = parse_double(f[20]);
    out.push_back(t);
  }
  return out;
}

std::string summary_json(const ExperimentReport& report) {
  nlohmann::json j;
  j["suite"] = suite_name(report.config.suite);
  j["version"] = report.version;

  nlohmann::json cfg;
  cfg["grid"] = report.config.grid;
  cfg["trials"] = report.config.trials;
  cfg["base_seed"] = report.config.base_seed;
  cfg["d"] = report.config.d;
  cfg["p"] = report.config.p.str();
  cfg["l"] = report.config.l;
  cfg["density"] = report.config.density.name();
  cfg["regime"] = report.config.schedule.regime_name();
  cfg["param"] = report.config.schedule.param;
  cfg["method"] = report.config.policy.name();
  cfg["exact_max_n"] = report.config.policy.exact_max_n;
  j["config"] = cfg;

  nlohmann::json per_n = nlohmann::json::array();
  for (const NAggregate& a : report.per_n) {
    nlohmann::json row;
    row["n"] = a.n;
    row["median_ratio"] = a.median_ratio;
    row["median_norm_ratio"] = a.median_norm_ratio;
    row["q25_norm_ratio"] = a.q25_norm_ratio;
    row["q75_norm_ratio"] = a.q75_norm_ratio;
    row["mean_viol"] = a.mean_detours;
    row["frac_zero_viol"] = a.frac_zero_detours;
    row["focusing_a"] = a.focusing_a;
    row["focusing_mass"] = a.focusing_mass;
    row["median_scan_max"] = a.median_scan_max;
    if (a.median_growth)
      row["median_k_n"] = *a.median_growth;
    else
      row["median_k_n"] = nullptr;
    row["max_chil_hi"] = a.max_chil_hi;
    per_n.push_back(row);
  }
  j["per_n"] = per_n;

  nlohmann::json trend;
  trend["spearman_median_norm_ratio_vs_n"] = report.trend.spearman_norm_ratio;
  trend["median_ratio_nonincreasing"] = report.trend.median_ratio_nonincreasing;
  trend["median_norm_ratio_nondecreasing"] = report.trend.median_norm_ratio_nondecreasing;
  trend["frac_zero_viol_nondecreasing"] = report.trend.frac_zero_detours_nondecreasing;
  trend["last_frac_zero_viol"] = report.trend.last_frac_zero_detours;
  trend["min_focusing_mass"] = report.trend.min_focusing_mass;
  trend["largest_n_median_ratio"] = report.trend.largest_n_median_ratio;
  trend["smallest_n_median_ratio"] = report.trend.smallest_n_median_ratio;
  j["trend"] = trend;

  nlohmann::json manifest;
  manifest["wall_ms"] = report.wall_ms;
  manifest["threads"] = report.threads_used;
  manifest["trial_count"] = report.trials.size();
  j["manifest"] = manifest;

  return j.dump(2) + "\n";
}

std::string theory_csv(const std::vector<TheoryRow>& rows) {
  std::string out = "t,xi,c_ratio\n";
  for (const TheoryRow& row : rows) {
    out += format_double(row.t);
    out += ',';
    out += format_double(row.xi);
    out += ',';
    out += format_double(row.c_ratio);
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace rgg
