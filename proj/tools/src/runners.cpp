#include "runners.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "dmop/errors.hpp"
#include "dmop/rodrigues.hpp"
#include "dmop/verify.hpp"
#include "dmop/zeros.hpp"
#include "json.hpp"

namespace dmop::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string double_str(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char c : s) {
    if (c == '"') q += "\"\"";
    else q += c;
  }
  q += '"';
  return q;
}

void write_file(const fs::path& path, const std::string& content) {
  if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << content;
}

std::string bigfloat_str(const BigFloat& v) { return v.str(20); }

void print_violations(const ValidationReport& rep, std::ostream& out) {
  for (const auto& v : rep.violations) {
    out << "  [" << v.clause << "] " << v.text;
    if (!v.values.empty()) out << " (" << v.values << ")";
    out << '\n';
  }
}

int parse_int_field(const std::string& field, const std::string& where) {
  int value = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw ConfigError(where + ": not an integer: \"" + field + "\"");
  }
  return value;
}

// Rows of constructed.csv back into polynomials, keyed by order.
std::vector<std::pair<int, Polynomial>> read_coeffs_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open coeffs_in file " + path);
  std::string line;
  auto strip_cr = [](std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
  };
  if (!std::getline(in, line)) throw ConfigError("coeffs_in file is empty");
  strip_cr(line);
  if (line != "n,power,coeff") {
    throw ConfigError("coeffs_in must start with the header \"n,power,coeff\"");
  }
  std::map<int, std::map<int, Scalar>> by_n;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos) throw ConfigError(where + ": expected 3 comma-separated fields");
    const int n = parse_int_field(line.substr(0, c1), where);
    const int power = parse_int_field(line.substr(c1 + 1, c2 - c1 - 1), where);
    if (n < 0 || power < 0) throw ConfigError(where + ": n and power must be >= 0");
    const Scalar coeff = parse_scalar(line.substr(c2 + 1));
    if (!by_n[n].emplace(power, coeff).second) {
      throw ConfigError(where + ": duplicate coefficient for n=" + std::to_string(n) +
                        ", power=" + std::to_string(power));
    }
  }
  std::vector<std::pair<int, Polynomial>> out;
  for (const auto& [n, coeffs] : by_n) {
    std::vector<Scalar> c(static_cast<std::size_t>(coeffs.rbegin()->first) + 1, Scalar(0));
    for (const auto& [power, value] : coeffs) c[static_cast<std::size_t>(power)] = value;
    out.emplace_back(n, Polynomial(std::move(c)));
  }
  return out;
}

Json violations_json(const ValidationReport& rep) {
  Json j;
  j["schema"] = "dmop/1";
  j["pass"] = rep.pass;
  j["violations"] = Json::array();
  for (const auto& v : rep.violations) {
    Json e;
    e["clause"] = v.clause;
    e["text"] = v.text;
    e["values"] = v.values;
    j["violations"].push_back(std::move(e));
  }
  j["notes"] = rep.notes;
  return j;
}

}  // namespace

int run_presets(const std::string& format, std::ostream& out) {
  if (format != "text" && format != "json") {
    throw ConfigError("presets --format must be text or json");
  }
  if (format == "json") {
    Json j = Json::array();
    for (const auto& info : family_catalog()) {
      Json e;
      e["name"] = info.name;
      e["summary"] = info.summary;
      e["params"] = Json::array();
      for (const auto& p : info.params) {
        Json pj;
        pj["name"] = p.name;
        pj["default"] = to_string(p.default_value);
        pj["integer"] = p.integer;
        e["params"].push_back(std::move(pj));
      }
      j.push_back(std::move(e));
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  for (const auto& info : family_catalog()) {
    out << info.name << ": " << info.summary << '\n';
    for (const auto& p : info.params) {
      out << "  " << p.name << " = " << to_string(p.default_value)
          << (p.integer ? " (integer)" : "") << '\n';
    }
  }
  return 0;
}

int run_validate(const RunConfig& cfg, std::ostream& out) {
  const LoadedSystem ls = load_and_validate(cfg);
  const fs::path dir(cfg.out);
  fs::path file;
  if (cfg.format == "json") {
    file = dir / "validation.json";
    write_file(file, violations_json(ls.report).dump(2) + "\n");
  } else {
    file = dir / "validation.csv";
    std::string csv = "clause,text,values\n";
    for (const auto& v : ls.report.violations) {
      csv += csv_quote(v.clause) + ',' + csv_quote(v.text) + ',' + csv_quote(v.values) + '\n';
    }
    write_file(file, csv);
  }
  out << "validation: " << (ls.report.pass ? "PASS" : "FAIL") << " ("
      << ls.report.violations.size() << " violations); wrote " << file.string() << '\n';
  if (!ls.report.pass) print_violations(ls.report, out);
  for (const auto& n : ls.report.notes) out << "  note: " << n << '\n';
  return ls.report.pass ? 0 : 2;
}

int run_construct(const RunConfig& cfg, std::ostream& out) {
  const LoadedSystem ls = load_and_validate(cfg);
  if (!ls.report.pass || !ls.system) {
    out << "validation failed; not constructing\n";
    print_violations(ls.report, out);
    return 2;
  }

  std::vector<RodriguesResult> results;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    results.push_back(rodrigues_construct(*ls.system, n));
  }

  const fs::path dir(cfg.out);
  if (cfg.format == "json") {
    Json j;
    j["schema"] = "dmop/1";
    j["records"] = Json::array();
    j["degree_trace"] = Json::array();
    for (const auto& res : results) {
      Json rec;
      rec["n"] = res.n;
      rec["coeffs"] = Json::array();
      const int deg = res.P.degree().value_or(0);
      for (int k = 0; k <= deg; ++k) {
        rec["coeffs"].push_back(to_string(res.P.coeff(static_cast<unsigned>(k))));
      }
      j["records"].push_back(std::move(rec));
      for (const auto& t : res.degree_trace) {
        Json te;
        te["n"] = res.n;
        te["step"] = t.step;
        te["expected"] = t.expected;
        te["actual"] = t.actual ? Json(*t.actual) : Json(nullptr);
        j["degree_trace"].push_back(std::move(te));
      }
    }
    write_file(dir / "constructed.json", j.dump(2) + "\n");
    out << "constructed orders " << cfg.n_min << ".." << cfg.n_max << "; wrote "
        << (dir / "constructed.json").string() << '\n';
    return 0;
  }

  std::string csv = "n,power,coeff\n";
  std::string trace = "n,step,expected,actual\n";
  for (const auto& res : results) {
    const int deg = res.P.degree().value_or(0);
    for (int k = 0; k <= deg; ++k) {
      csv += std::to_string(res.n) + ',' + std::to_string(k) + ',' +
             to_string(res.P.coeff(static_cast<unsigned>(k))) + '\n';
    }
    for (const auto& t : res.degree_trace) {
      trace += std::to_string(res.n) + ',' + std::to_string(t.step) + ',' +
               std::to_string(t.expected) + ',' +
               (t.actual ? std::to_string(*t.actual) : std::string()) + '\n';
    }
  }
  write_file(dir / "constructed.csv", csv);
  write_file(dir / "degree_trace.csv", trace);
  out << "constructed orders " << cfg.n_min << ".." << cfg.n_max << "; wrote "
      << (dir / "constructed.csv").string() << " and " << (dir / "degree_trace.csv").string()
      << '\n';
  return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const LoadedSystem ls = load_and_validate(cfg);
  if (!ls.report.pass || !ls.system) {
    out << "validation failed; not verifying\n";
    print_violations(ls.report, out);
    return 2;
  }
  const WeightSystem& system = *ls.system;

  std::vector<std::pair<int, Polynomial>> polys;
  if (cfg.coeffs_in) {
    polys = read_coeffs_csv(*cfg.coeffs_in);
  } else {
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      polys.emplace_back(n, rodrigues_construct(system, n).P);
    }
  }

  bool expect_unique = false;
  if (system.r() == 2) expect_unique = classify_case(system).disjoint;

  bool all_pass = true;
  std::vector<std::pair<int, OrthogonalityReport>> orth;
  std::vector<std::pair<int, OracleComparison>> oracle;
  for (const auto& [n, P] : polys) {
    orth.emplace_back(n, orthogonality_residuals(system, P, n, cfg.tol));
    oracle.emplace_back(n, compare_with_moment_oracle(system, P, n, cfg.tol, expect_unique));
    all_pass = all_pass && orth.back().second.pass && oracle.back().second.pass;
  }
  const PearsonCheckReport pearson = check_pearson(system);
  all_pass = all_pass && pearson.pass;

  const fs::path dir(cfg.out);
  if (cfg.format == "json") {
    Json j;
    j["schema"] = "dmop/1";
    j["pass"] = all_pass;
    j["tol"] = to_string(cfg.tol);
    j["pearson"] = {{"degrees_ok", pearson.degrees_ok},
                    {"identity_ok", pearson.identity_ok},
                    {"nodes_ok", pearson.nodes_ok},
                    {"pass", pearson.pass}};
    j["orders"] = Json::array();
    for (std::size_t i = 0; i < orth.size(); ++i) {
      Json o;
      o["n"] = orth[i].first;
      Json entries = Json::array();
      for (const auto& e : orth[i].second.entries) {
        entries.push_back({{"lattice", e.lattice},
                           {"power", e.power},
                           {"exact", e.exact},
                           {"residual", to_string(e.residual)},
                           {"tail_bound", to_string(e.tail_bound)},
                           {"terms", e.terms},
                           {"pass", e.pass}});
      }
      o["orthogonality"] = {{"pass", orth[i].second.pass}, {"entries", std::move(entries)}};
      const auto& oc = oracle[i].second;
      o["oracle"] = {{"truncated", oc.truncated},
                     {"nullity", oc.nullity},
                     {"rel_error", bigfloat_str(oc.rel_error)},
                     {"pass", oc.pass},
                     {"detail", oc.detail}};
      j["orders"].push_back(std::move(o));
    }
    write_file(dir / "verify_report.json", j.dump(2) + "\n");
    out << "verify: " << (all_pass ? "PASS" : "FAIL") << "; wrote "
        << (dir / "verify_report.json").string() << '\n';
  } else {
    std::string ocsv = "n,lattice,power,exact,residual,tail_bound,terms,pass\n";
    for (const auto& [n, rep] : orth) {
      for (const auto& e : rep.entries) {
        ocsv += std::to_string(n) + ',' + std::to_string(e.lattice) + ',' +
                std::to_string(e.power) + ',' + (e.exact ? "1" : "0") + ',' +
                to_string(e.residual) + ',' + to_string(e.tail_bound) + ',' +
                std::to_string(e.terms) + ',' + (e.pass ? "1" : "0") + '\n';
      }
    }
    std::string mcsv = "n,truncated,nullity,rel_error,pass\n";
    for (const auto& [n, oc] : oracle) {
      mcsv += std::to_string(n) + ',' + (oc.truncated ? "1" : "0") + ',' +
              std::to_string(oc.nullity) + ',' + bigfloat_str(oc.rel_error) + ',' +
              (oc.pass ? "1" : "0") + '\n';
    }
    std::string pcsv = "degrees_ok,identity_ok,nodes_ok,pass\n";
    pcsv += std::string(pearson.degrees_ok ? "1" : "0") + ',' + (pearson.identity_ok ? "1" : "0") +
            ',' + (pearson.nodes_ok ? "1" : "0") + ',' + (pearson.pass ? "1" : "0") + '\n';
    write_file(dir / "orthogonality.csv", ocsv);
    write_file(dir / "oracle.csv", mcsv);
    write_file(dir / "pearson.csv", pcsv);
    out << "verify: " << (all_pass ? "PASS" : "FAIL") << "; wrote "
        << (dir / "orthogonality.csv").string() << ", " << (dir / "oracle.csv").string() << ", "
        << (dir / "pearson.csv").string() << '\n';
  }
  return all_pass ? 0 : 4;
}

int run_zeros(const RunConfig& cfg, std::ostream& out) {
  const LoadedSystem ls = load_and_validate(cfg);
  if (!ls.report.pass || !ls.system) {
    out << "validation failed; not locating zeros\n";
    print_violations(ls.report, out);
    return 2;
  }
  const WeightSystem& system = *ls.system;

  struct Row {
    int n;
    ZeroInfo z;
  };
  std::vector<Row> rows;
  int real_total = 0;
  int complex_total = 0;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const RodriguesResult res = rodrigues_construct(system, n);
    std::vector<Cplx> zs;
    if (res.P.degree().value_or(0) > 0) {
      zs = find_zeros_adaptive(res.P, cfg.precision_bits,
                               std::max(4096u, cfg.precision_bits), cfg.real_tol / 100);
    }
    const ZeroReport rep = zero_report(zs, system, cfg.real_tol);
    real_total += rep.real_count;
    complex_total += rep.complex_count;
    for (const auto& z : rep.zeros) rows.push_back({n, z});
  }

  const fs::path dir(cfg.out);
  if (cfg.format == "json") {
    Json j;
    j["schema"] = "dmop/1";
    j["records"] = Json::array();
    for (const auto& row : rows) {
      j["records"].push_back({{"n", row.n},
                              {"re", row.z.re.convert_to<double>()},
                              {"im", row.z.im.convert_to<double>()},
                              {"hull", row.z.hull},
                              {"is_real", row.z.is_real}});
    }
    write_file(dir / "zeros.json", j.dump(2) + "\n");
    out << "zeros: " << real_total << " real, " << complex_total << " nonreal; wrote "
        << (dir / "zeros.json").string() << '\n';
  } else {
    std::string csv = "n,re,im,hull,is_real\n";
    for (const auto& row : rows) {
      csv += std::to_string(row.n) + ',' + double_str(row.z.re.convert_to<double>()) + ',' +
             double_str(row.z.im.convert_to<double>()) + ',' + std::to_string(row.z.hull) + ',' +
             (row.z.is_real ? "1" : "0") + '\n';
    }
    write_file(dir / "zeros.csv", csv);
    out << "zeros: " << real_total << " real, " << complex_total << " nonreal; wrote "
        << (dir / "zeros.csv").string() << '\n';
  }
  return 0;
}

}  // namespace dmop::cli
