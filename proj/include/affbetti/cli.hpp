#pragma once

// Command-line front end. Every subcommand writes a single JSON or CSV
// document to stdout or, with --out, atomically to a file.
//
// Exit codes: 0 ok, 1 property violation, 2 usage error, 3 budget exceeded.

#include "affbetti/affbetti.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace affbetti::cli {

enum ExitCode : int { kOk = 0, kPropertyViolation = 1, kUsage = 2, kBudget = 3 };

using nlohmann::json;

inline json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline json to_json(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline json to_json(const LaurentPolynomial& p) {
  json o = json::object();
  for (const auto& [e, c] : p.terms()) o[std::to_string(e)] = to_json(c);
  return o;
}

inline json to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline json betti_json(const RootSystem& rs, const BettiSequence& b) {
  return json{{"type", rs.name()},
              {"rank", rs.rank},
              {"lambda_coroot", b.lambda.coords},
              {"lambda_coweight", dominance_coords(rs, b.lambda)},
              {"length_top", b.length_top},
              {"betti", to_json(b.coefficients)},
              {"interval_size", to_json(b.interval_size())}};
}

inline std::string join(const IntVec& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

struct Options {
  std::string type;
  std::vector<std::int64_t> lambda;
  std::string basis = "coroot";
  std::vector<std::int64_t> ks{1, 2, 4, 8};
  std::size_t grid = 11;
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
  std::int64_t budget = AffineOracle::kDefaultBudget;
  std::vector<std::int64_t> below;
  std::vector<std::size_t> subset;
  std::size_t cap = WeylGroupTable::kDefaultCap;
};

/// Writes through a sibling temp file and a rename.
inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::invalid_argument("cannot open output file " + path);
    f << text;
    if (!f.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int betti() {
    auto rs = root_system();
    WeylGroupTable table(rs, opt_.cap);
    const auto b = betti_sequence(rs, table, lambda(rs));
    emit_betti(rs, b);
    return kOk;
  }

  int oracle() {
    auto rs = root_system();
    WeylGroupTable table(rs, opt_.cap);
    AffineOracle o(rs, table);
    const auto b = o.betti_oracle(lambda(rs), opt_.budget, opt_.jobs);
    emit_betti(rs, b);
    return kOk;
  }

  int verify() {
    auto rs = root_system();
    WeylGroupTable table(rs, opt_.cap);
    const auto lam = lambda(rs);
    const auto f = betti_sequence(rs, table, lam);
    AffineOracle o(rs, table);
    const auto g = o.betti_oracle(lam, opt_.budget, opt_.jobs);
    const bool match = f.coefficients == g.coefficients;
    json diff = json::array();
    std::string csv = "i,formula,oracle\n";
    const std::size_t n = std::max(f.coefficients.size(), g.coefficients.size());
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt a = i < f.coefficients.size() ? f.coefficients[i] : BigInt(0);
      const BigInt b = i < g.coefficients.size() ? g.coefficients[i] : BigInt(0);
      csv += std::to_string(i) + "," + a.str() + "," + b.str() + "\n";
      if (a != b) {
        diff.push_back(json{{"i", i}, {"formula", to_json(a)}, {"oracle", to_json(b)}});
        err_ << "mismatch at degree " << i << ": formula " << a << ", oracle " << b << "\n";
      }
    }
    json doc{{"type", rs.name()},      {"lambda_coroot", lam.coords},         {"match", match},
             {"formula", to_json(f.coefficients)}, {"oracle", to_json(g.coefficients)}, {"diff", diff}};
    write(csv_mode() ? csv : doc.dump(2) + "\n");
    return match ? kOk : kPropertyViolation;
  }

  int sweep_cmd() {
    auto rs = root_system();
    if (opt_.below.empty()) throw std::invalid_argument("sweep requires --below");
    WeylGroupTable table(rs, opt_.cap);
    const auto rep = sweep(rs, table, IntVec(opt_.below.begin(), opt_.below.end()), opt_.jobs);
    if (csv_mode()) {
      std::string csv = "lambda_coroot,lambda_coweight,length_top,interval_size,unimodal,log_concave,error\n";
      for (const auto& r : rep.records)
        csv += join(r.lambda.coords, ';') + "," + join(r.coweight, ';') + "," + std::to_string(r.length_top) + "," +
               r.interval_size.str() + "," + (r.unimodal ? "true" : "false") + "," +
               (r.log_concave ? "true" : "false") + "," + r.error + "\n";
      write(csv);
    } else {
      json recs = json::array();
      for (const auto& r : rep.records) {
        json o{{"lambda_coroot", r.lambda.coords}, {"lambda_coweight", r.coweight}, {"length_top", r.length_top},
               {"interval_size", to_json(r.interval_size)}, {"unimodal", r.unimodal}, {"log_concave", r.log_concave},
               {"betti", to_json(r.betti)}};
        if (!r.error.empty()) o["error"] = r.error;
        recs.push_back(std::move(o));
      }
      json doc{{"type", rep.type},
               {"rank", rs.rank},
               {"bound", rep.bound},
               {"counts",
                {{"all", rep.count_all()},
                 {"nonzero", rep.count_nonzero()},
                 {"strongly_dominant", rep.count_strongly_dominant()},
                 {"unimodal", rep.count_unimodal()},
                 {"log_concave", rep.count_log_concave()},
                 {"failed", rep.count_failed()}}},
               {"records", recs}};
      write(doc.dump(2) + "\n");
    }
    if (rep.count_failed() > 0) err_ << rep.count_failed() << " lambda(s) could not be evaluated\n";
    if (!rep.all_unimodal()) {
      err_ << "unimodality fails for " << rep.count_all() - rep.count_unimodal() << " lambda(s)\n";
      return kPropertyViolation;
    }
    return kOk;
  }

  int measures() {
    auto rs = root_system();
    WeylGroupTable table(rs, opt_.cap);
    const auto lam = lambda(rs);
    for (auto k : opt_.ks)
      if (k < 1) throw std::invalid_argument("--k entries must be >= 1");
    const auto zs = default_z_grid(Rational(height(rs, lam)), opt_.ks, opt_.grid);
    const auto rows = convergence_report(rs, table, lam, opt_.ks, zs);
    bool ok = true;
    auto opt_str = [](const std::optional<Rational>& x) { return x ? to_string(*x) : std::string(); };
    if (csv_mode()) {
      std::string csv = "k,z,err_mk,err_mklat,err_mklatplus,sandwich_ok\n";
      for (const auto& r : rows) {
        ok = ok && r.sandwich_ok;
        csv += std::to_string(r.k) + "," + to_string(r.z) + "," + opt_str(r.err_mk) + "," + opt_str(r.err_mk_lat) +
               "," + opt_str(r.err_mk_lat_plus) + "," + (r.sandwich_ok ? "true" : "false") + "\n";
      }
      write(csv);
    } else {
      json arr = json::array();
      auto opt_json = [&](const std::optional<Rational>& x) { return x ? json(to_string(*x)) : json(nullptr); };
      for (const auto& r : rows) {
        ok = ok && r.sandwich_ok;
        arr.push_back(json{{"k", r.k},
                           {"z", to_string(r.z)},
                           {"F", opt_json(r.volume)},
                           {"cdf_mk", to_string(r.cdf_mk)},
                           {"cdf_mklat", to_string(r.cdf_mk_lat)},
                           {"cdf_mklatplus", to_string(r.cdf_mk_lat_plus)},
                           {"err_mk", opt_json(r.err_mk)},
                           {"err_mklat", opt_json(r.err_mk_lat)},
                           {"err_mklatplus", opt_json(r.err_mk_lat_plus)},
                           {"sandwich_ok", r.sandwich_ok}});
      }
      write(json{{"type", rs.name()}, {"lambda_coroot", lam.coords}, {"k", opt_.ks}, {"rows", arr}}.dump(2) + "\n");
    }
    if (!ok) err_ << "measure sandwich violated\n";
    return ok ? kOk : kPropertyViolation;
  }

  int polytope() {
    auto rs = root_system();
    const auto lam = lambda(rs);
    require_dominant(rs, lam);
    if (opt_.grid < 2) throw std::invalid_argument("--grid must be >= 2");
    const auto poly = dominant_polytope(rs, lam);
    const auto vol = volume(rs, lam);
    std::optional<VolumeFunction> vf;
    if (vol.full_dimensional) vf = truncated_volume_function(rs, lam);
    const Rational top(height(rs, lam));
    std::vector<std::array<Rational, 3>> samples;
    for (std::size_t j = 0; j < opt_.grid; ++j) {
      const Rational z = top * static_cast<long>(j) / static_cast<long>(opt_.grid - 1);
      if (vf) samples.push_back({z, (*vf)(z), density(*vf, z)});
      else samples.push_back({z, Rational(0), Rational(0)});
    }
    if (csv_mode()) {
      std::string csv = "z,F,g\n";
      for (const auto& s : samples) csv += to_string(s[0]) + "," + to_string(s[1]) + "," + to_string(s[2]) + "\n";
      write(csv);
    } else {
      json verts = json::array();
      for (const auto& v : poly.vertices) verts.push_back(to_json(v));
      json pts = json::array();
      for (const auto& s : samples) pts.push_back(json{{"z", to_string(s[0])}, {"F", to_string(s[1])}, {"g", to_string(s[2])}});
      json doc{{"type", rs.name()},
               {"lambda_coroot", lam.coords},
               {"dimension", poly.dim},
               {"full_dimensional", vol.full_dimensional},
               {"vertices", verts},
               {"volume", to_string(vol.volume)},
               {"breakpoints", vf ? to_json(vf->breakpoints) : json::array()},
               {"samples", pts}};
      write(doc.dump(2) + "\n");
    }
    return kOk;
  }

  int poincare() {
    auto rs = root_system();
    WeylGroupTable table(rs, opt_.cap);
    const SubsetMask mask = subset_mask(rs.rank, opt_.subset);
    const auto& q = table.quotient_poincare(mask);
    if (csv_mode()) {
      std::string csv = "degree,full,quotient\n";
      const auto full = table.poincare().dense();
      const auto quo = q.dense();
      for (std::size_t i = 0; i < full.size(); ++i)
        csv += std::to_string(i) + "," + full[i].str() + "," + (i < quo.size() ? quo[i] : BigInt(0)).str() + "\n";
      write(csv);
    } else {
      std::vector<std::size_t> subset = opt_.subset;
      std::sort(subset.begin(), subset.end());
      json doc{{"type", rs.name()},
               {"order", to_json(BigInt(table.size()))},
               {"longest_length", table.longest_length()},
               {"poincare", to_json(table.poincare())},
               {"subset", subset},
               {"quotient_poincare", to_json(q)}};
      write(doc.dump(2) + "\n");
    }
    return kOk;
  }

 private:
  RootSystem root_system() const { return build_root_system(opt_.type); }

  CorootVector lambda(const RootSystem& rs) const {
    if (opt_.lambda.empty()) throw std::invalid_argument("--lambda is required");
    const Basis b = opt_.basis == "coweight" ? Basis::coweight : Basis::coroot;
    return parse_lambda(rs, IntVec(opt_.lambda.begin(), opt_.lambda.end()), b);
  }

  bool csv_mode() const { return opt_.format == "csv"; }

  void emit_betti(const RootSystem& rs, const BettiSequence& b) {
    if (csv_mode()) {
      std::string csv = "i,b_i\n";
      for (std::size_t i = 0; i < b.coefficients.size(); ++i) csv += std::to_string(i) + "," + b.coefficients[i].str() + "\n";
      write(csv);
    } else {
      write(betti_json(rs, b).dump(2) + "\n");
    }
  }

  void write(const std::string& text) { write_output(opt_.out, text, out_); }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Betti numbers of parabolic affine Schubert varieties of translation elements"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", opt.type, "Cartan type and rank, e.g. A4, C3, G2")->required();
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", opt.out, "Output file (default: stdout)");
    sub->add_option("--cap", opt.cap, "Upper bound on |W_f|")->capture_default_str();
  };
  auto add_lambda = [&](CLI::App* sub) {
    sub->add_option("--lambda", opt.lambda, "Comma-separated coordinates of lambda")->delimiter(',')->required();
    sub->add_option("--basis", opt.basis, "Basis of --lambda")
        ->check(CLI::IsMember({"coroot", "coweight"}))
        ->capture_default_str();
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", opt.budget, "Largest l(t_lambda) the interval walk accepts")->capture_default_str();
  };

  auto* betti = app.add_subcommand("betti", "Betti sequence from the lattice-point formula (CSV columns: i,b_i)");
  add_common(betti);
  add_lambda(betti);

  auto* oracle = app.add_subcommand("oracle", "Betti sequence by walking the Bruhat interval (CSV columns: i,b_i)");
  add_common(oracle);
  add_lambda(oracle);
  add_jobs(oracle);
  add_budget(oracle);

  auto* verify = app.add_subcommand("verify", "Compare formula and interval walk (CSV columns: i,formula,oracle)");
  add_common(verify);
  add_lambda(verify);
  add_jobs(verify);
  add_budget(verify);

  auto* sweep = app.add_subcommand(
      "sweep",
      "Unimodality sweep over dominant lambda below a bound "
      "(CSV columns: lambda_coroot,lambda_coweight,length_top,interval_size,unimodal,log_concave,error)");
  add_common(sweep);
  add_jobs(sweep);
  sweep->add_option("--below", opt.below, "Comma-separated bound in fundamental coweight coordinates")
      ->delimiter(',')
      ->required();

  auto* measures = app.add_subcommand(
      "measures", "CDF errors of the scaled measures (CSV columns: k,z,err_mk,err_mklat,err_mklatplus,sandwich_ok)");
  add_common(measures);
  add_lambda(measures);
  measures->add_option("--k", opt.ks, "Comma-separated dilation factors")->delimiter(',')->capture_default_str();
  measures->add_option("--grid", opt.grid, "Number of heights z")->check(CLI::Range(1, 10000))->capture_default_str();

  auto* polytope = app.add_subcommand("polytope", "Vertices, volume and section volumes (CSV columns: z,F,g)");
  add_common(polytope);
  add_lambda(polytope);
  polytope->add_option("--grid", opt.grid, "Number of sample heights")->check(CLI::Range(2, 10000))->capture_default_str();

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomials of W_f and a parabolic quotient "
                                                  "(CSV columns: degree,full,quotient)");
  add_common(poincare);
  poincare->add_option("--subset", opt.subset, "Comma-separated 1-based simple reflection indices")->delimiter(',');

  std::vector<const char*> argv{"affbetti"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Runner run(opt, out, err);
  try {
    if (betti->parsed()) return run.betti();
    if (oracle->parsed()) return run.oracle();
    if (verify->parsed()) return run.verify();
    if (sweep->parsed()) return run.sweep_cmd();
    if (measures->parsed()) return run.measures();
    if (polytope->parsed()) return run.polytope();
    if (poincare->parsed()) return run.poincare();
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace affbetti::cli
