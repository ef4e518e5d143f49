#include "run.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polyface/angles.hpp"
#include "polyface/facecount.hpp"
#include "polyface/polytope.hpp"
#include "polyface/polytope_io.hpp"
#include "polyface/projection.hpp"

namespace polyface::cli {

namespace {

using namespace polyface::facecount;
using polytope::CyclicSpec;
using polytope::FaceLattice;
using polytope::NumericModel;
using polytope::PolytopeModel;
using projection::FixedSubspace;

std::vector<long> parse_ints(const std::string& text, char sep) {
  std::vector<long> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, sep)) {
    try {
      out.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + tok + "' in '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list '" + text + "'");
  return out;
}

}  // namespace

std::vector<long> parse_int_list(const std::string& text) {
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const IntRange r = parse_range(text);
    std::vector<long> out;
    for (long v = r.lo; v <= r.hi; ++v) out.push_back(v);
    return out;
  }
  return parse_ints(text, ',');
}

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = parse_ints(text, ',').at(0);
    return {v, v};
  }
  IntRange r;
  r.lo = parse_ints(text.substr(0, dots), ',').at(0);
  r.hi = parse_ints(text.substr(dots + 2), ',').at(0);
  if (r.hi < r.lo) throw UsageError("empty range '" + text + "'");
  return r;
}

namespace {

// ---- small helpers -------------------------------------------------------

class Inputs {
 public:
  Inputs& add(const std::string& key, const std::string& value) {
    if (!text_.empty()) text_ += ';';
    text_ += key + "=" + value;
    return *this;
  }
  Inputs& add(const std::string& key, long v) { return add(key, std::to_string(v)); }
  Inputs& add(const std::string& key, const Int& v) { return add(key, v.str()); }
  Inputs& add(const std::string& key, const Rat& v) { return add(key, to_string(v)); }
  Inputs& sampling(uint64_t n, uint64_t seed, uint64_t resampled) {
    add("N", static_cast<long>(n));
    add("seed", std::to_string(seed));
    add("resampled", std::to_string(resampled));
    return *this;
  }
  std::string str() const { return text_; }

 private:
  std::string text_;
};

std::string pass_str(bool ok) { return ok ? "yes" : "no"; }

ReportRow exact_row(std::string check, std::string inputs, const Rat& value,
                    std::string target = {}, std::string pass = {}) {
  ReportRow row;
  row.check = std::move(check);
  row.inputs = std::move(inputs);
  row.exact = to_string(value);
  row.target = std::move(target);
  row.pass = std::move(pass);
  return row;
}

ReportRow estimate_row(std::string check, std::string inputs, double mean, double se,
                       std::string target = {}, std::string zscore = {},
                       std::string pass = {}) {
  ReportRow row;
  row.check = std::move(check);
  row.inputs = std::move(inputs);
  row.estimate = format_double(mean);
  row.std_error = format_double(se);
  row.target = std::move(target);
  row.zscore = std::move(zscore);
  row.pass = std::move(pass);
  return row;
}

// ---- argument resolution -------------------------------------------------

long scalar(const std::optional<std::string>& raw, const char* what) {
  if (!raw) throw UsageError(std::string("missing --") + what);
  const IntRange r = parse_range(*raw);
  if (r.lo != r.hi) throw UsageError(std::string("--") + what + " must be a single value here");
  return r.lo;
}

std::vector<long> list_or(const std::optional<std::string>& raw, std::vector<long> fallback) {
  if (!raw) return fallback;
  return parse_int_list(*raw);
}

PolytopeModel resolve_polytope(const RunConfig& cfg) {
  if (!cfg.polytope) throw UsageError("missing --polytope");
  const std::string& spec = *cfg.polytope;
  if (std::filesystem::exists(spec)) return polytope::read_polytope_file(spec);
  auto dim = [&](int fallback = -1) {
    if (cfg.d) return static_cast<int>(scalar(cfg.d, "d"));
    if (fallback > 0) return fallback;
    throw UsageError("fixture '" + spec + "' needs --d");
  };
  if (spec == "cube") return polytope::cube(dim());
  if (spec == "square") return polytope::cube(2);
  if (spec == "simplex") return polytope::simplex(dim());
  if (spec == "triangle") return polytope::simplex(2);
  if (spec == "crosspolytope") return polytope::crosspolytope(dim());
  if (spec == "cyclic") {
    const int d = dim();
    const int n = static_cast<int>(scalar(cfg.n, "n"));
    return polytope::build_cyclic(CyclicSpec::standard(d, n));
  }
  throw UsageError("unknown polytope '" + spec + "' (not a fixture name or readable file)");
}

FixedSubspace resolve_subspace(const RunConfig& cfg, int dim) {
  if (!cfg.subspace) throw UsageError("missing --subspace");
  const std::string& spec = *cfg.subspace;
  if (!spec.empty() && spec[0] == 'e') {
    // coordinate axes "e3,e4"
    std::vector<long> axes;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty() || tok[0] != 'e') throw UsageError("bad axis '" + tok + "'");
      try {
        axes.push_back(std::stol(tok.substr(1)));
      } catch (const std::exception&) {
        throw UsageError("bad axis '" + tok + "'");
      }
    }
    if (axes.size() != 2) throw UsageError("--subspace needs exactly two axes");
    return FixedSubspace::coordinate(dim, static_cast<int>(axes[0]), static_cast<int>(axes[1]));
  }
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot open subspace file '" + spec + "'");
  linalg::MatQ basis;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    linalg::VecQ row;
    while (ls >> tok) row.push_back(parse_rational(tok));
    if (!row.empty()) basis.push_back(std::move(row));
  }
  if (basis.size() != 2 || static_cast<int>(basis[0].size()) != dim)
    throw UsageError("subspace file must hold 2 rows of " + std::to_string(dim) + " rationals");
  return FixedSubspace::from_basis(dim, std::move(basis));
}

// ---- command implementations ---------------------------------------------

void run_tabulate(const RunConfig& cfg, Report& report) {
  const auto ds = list_or(cfg.d, {});
  if (ds.empty()) throw UsageError("tabulate needs --d");
  const auto ns = list_or(cfg.n, {});
  if (ns.empty()) throw UsageError("tabulate needs --n");
  for (long d : ds) {
    const auto ks = list_or(cfg.k, [&] {
      std::vector<long> all;
      for (long k = 0; k < d; ++k) all.push_back(k);
      return all;
    }());
    for (long n : ns) {
      if (n <= d) throw UsageError("tabulate: need n > d (got d=" + std::to_string(d) +
                                   ", n=" + std::to_string(n) + ")");
      const Int fd1 = cyclic_facet_count(static_cast<int>(d), static_cast<int>(n));
      for (long k : ks) {
        if (k < 0 || k > d - 1) throw UsageError("tabulate: need 0 <= k <= d-1");
        const Int fk = cyclic_face_count(static_cast<int>(d), static_cast<int>(n),
                                         static_cast<int>(k));
        const Rat coeff = rho(static_cast<int>(d), static_cast<int>(d - k - 1));
        const Rat residual = Rat(fk, fd1) - coeff;
        Inputs in;
        in.add("d", d).add("n", n).add("k", k).add("fd1", fd1).add("rho", coeff)
            .add("residual", residual);
        report.rows.push_back(exact_row("fk", in.str(), Rat(fk)));
      }
    }
  }
}

void run_verify_lemma31(const RunConfig& cfg, Report& report) {
  const auto ds = list_or(cfg.d, [] {
    std::vector<long> v;
    for (long d = 2; d <= 10; ++d) v.push_back(d);
    return v;
  }());
  for (long d : ds) {
    std::vector<long> ns;
    if (cfg.n) {
      for (long n : parse_int_list(*cfg.n))
        if (n > d) ns.push_back(n);
    } else {
      for (long n = d + 1; n <= 25; ++n) ns.push_back(n);
    }
    const auto ks = list_or(cfg.k, [&] {
      std::vector<long> all;
      for (long k = 0; k < d; ++k) all.push_back(k);
      return all;
    }());
    for (long n : ns) {
      for (long k : ks) {
        if (k < 0 || k > d - 1) throw UsageError("lemma31: need 0 <= k <= d-1");
        Inputs in;
        in.add("d", d).add("n", n).add("k", k);
        try {
          const Int r = reduction_residual(static_cast<int>(d), static_cast<int>(n),
                                           static_cast<int>(k));
          report.rows.push_back(exact_row("lemma31", in.str(), Rat(r), "0", pass_str(r == 0)));
        } catch (const std::domain_error&) {
          in.add("skipped", "division-guard");
          ReportRow row;
          row.check = "lemma31";
          row.inputs = in.str();
          row.pass = "skip";
          report.rows.push_back(std::move(row));
        }
      }
    }
  }
}

void run_verify_gale(const RunConfig& cfg, Report& report) {
  const auto ds = list_or(cfg.d, {2, 3, 4, 5, 6, 7});
  for (long d : ds) {
    std::vector<long> ns;
    if (cfg.n) {
      for (long n : parse_int_list(*cfg.n))
        if (n > d) ns.push_back(n);
    } else {
      for (long n = d + 1; n <= 12; ++n) ns.push_back(n);
    }
    for (long n : ns) {
      const auto facets = polytope::gale_facets(static_cast<int>(d), static_cast<int>(n));
      const Int expect = cyclic_facet_count(static_cast<int>(d), static_cast<int>(n));
      Inputs in;
      in.add("d", d).add("n", n);
      report.rows.push_back(exact_row("gale-count", in.str(), Rat(Int(facets.size())),
                                      expect.str(), pass_str(Int(facets.size()) == expect)));

      const PolytopeModel p =
          polytope::build_cyclic(CyclicSpec::standard(static_cast<int>(d), static_cast<int>(n)));
      const FVector enumerated = face_lattice(p).f_vector();
      const FVector formula = cyclic_f_vector(static_cast<int>(d), static_cast<int>(n));
      ReportRow row;
      row.check = "gale-fvector";
      row.inputs = in.str();
      row.exact = to_string(enumerated);
      row.target = to_string(formula);
      row.pass = pass_str(enumerated == formula);
      report.rows.push_back(std::move(row));
    }
  }
}

void run_verify_euler(const RunConfig& cfg, Report& report) {
  const auto ds = list_or(cfg.d, {2, 3, 4, 5, 6, 7, 8});
  for (long d : ds) {
    std::vector<long> ns;
    if (cfg.n) {
      for (long n : parse_int_list(*cfg.n))
        if (n > d) ns.push_back(n);
    } else {
      for (long n = d + 1; n <= 14; ++n) ns.push_back(n);
    }
    for (long n : ns) {
      const FVector fv = cyclic_f_vector(static_cast<int>(d), static_cast<int>(n));
      Inputs in;
      in.add("d", d).add("n", n);
      ReportRow row;
      row.check = "euler";
      row.inputs = in.str();
      row.exact = to_string(fv);
      row.pass = pass_str(fv.euler_ok());
      report.rows.push_back(std::move(row));
    }
  }
}

void run_verify_prop43(const RunConfig& cfg, Report& report) {
  const PolytopeModel p = resolve_polytope(cfg);
  const FaceLattice lattice = face_lattice(p);
  const FixedSubspace s = resolve_subspace(cfg, p.dim);

  const auto gp = projection::general_position_check(p, lattice, s);
  {
    Inputs in;
    in.add("polytope", p.name);
    if (!gp.pass) {
      std::ostringstream face;
      for (std::size_t i = 0; i < gp.face.size(); ++i) face << (i ? " " : "") << gp.face[i];
      in.add("face-dim", gp.k).add("face", face.str());
      in.add("expected", gp.expected).add("actual", gp.actual);
    }
    ReportRow row;
    row.check = "general-position";
    row.inputs = in.str();
    row.pass = pass_str(gp.pass);
    report.rows.push_back(std::move(row));
  }
  if (!gp.pass) return;

  const auto ks = list_or(cfg.k, [&] {
    std::vector<long> all;
    for (long k = 0; k <= p.dim - 3; ++k) all.push_back(k);
    return all;
  }());
  for (long k : ks) {
    if (k < 0 || k > p.dim - 3) throw UsageError("prop43: need 0 <= k <= d-3");
    const auto r = projection::projection_identity(p, lattice, s, static_cast<int>(k));
    Inputs in;
    in.add("polytope", p.name).add("k", k).add("lhs", r.lhs).add("rhs", r.rhs);
    report.rows.push_back(
        exact_row("prop43", in.str(), r.residual, "0", pass_str(r.residual == 0)));
  }
}

void run_verify_remark(const RunConfig& cfg, Report& report) {
  const long d = scalar(cfg.d, "d");
  const long n = scalar(cfg.n, "n");
  const auto ks = list_or(cfg.k, [&] {
    std::vector<long> all;
    for (long k = 0; k <= d - 3; ++k) all.push_back(k);
    return all;
  }());
  for (long k : ks) {
    const auto r = projection::cyclic_projection_minimum(static_cast<int>(d), static_cast<int>(n),
                                                         static_cast<int>(k));
    for (const auto& row : r.rows) {
      Inputs in;
      in.add("d", d).add("n", n).add("k", k).add("facet", row.facet);
      report.rows.push_back(exact_row("remark-facet", in.str(), Rat(row.loss),
                                      to_string(row.target), pass_str(row.pass)));
    }
    Inputs in;
    in.add("d", d).add("n", n).add("k", k);
    report.rows.push_back(exact_row("remark-survivors", in.str(), Rat(r.survivors),
                                    r.expected_survivors.str(),
                                    pass_str(r.survivors == r.expected_survivors)));
  }
}

void run_estimate(const RunConfig& cfg, Report& report) {
  using namespace polyface::angles;
  const PolytopeModel p = resolve_polytope(cfg);
  const FaceLattice lattice = face_lattice(p);
  const NumericModel body = to_numeric(p, lattice);
  const uint64_t N = cfg.samples;
  const uint64_t seed = cfg.seed;

  auto k_list = [&](long lo, long hi) {
    return list_or(cfg.k, [&] {
      std::vector<long> all;
      for (long k = lo; k <= hi; ++k) all.push_back(k);
      return all;
    }());
  };

  if (cfg.subcommand == "phi") {
    for (long k : k_list(0, p.dim - 1)) {
      const AngleEstimate e =
          solid_angle_sum(body, static_cast<int>(k), N, seed, cfg.tolerance);
      Inputs in;
      in.add("polytope", p.name).add("k", k).sampling(N, seed, e.resampled);
      report.rows.push_back(estimate_row("phi_k", in.str(), e.mean, e.std_error));
    }
  } else if (cfg.subcommand == "gamma") {
    const int m = cfg.m ? static_cast<int>(*cfg.m) : 2;
    for (long k : k_list(0, p.dim - 1)) {
      const GrassmannEstimate g =
          grassmann_angle_sum(body, static_cast<int>(k), m, N, seed, true, cfg.tolerance);
      Inputs in;
      in.add("polytope", p.name).add("k", k).add("m", m).sampling(N, seed, g.est.resampled);
      report.rows.push_back(estimate_row("gamma_k_m", in.str(), g.est.mean, g.est.std_error));
      const double rate = g.crosschecked == 0
                              ? 1.0
                              : static_cast<double>(g.agreements) /
                                    static_cast<double>(g.crosschecked);
      Inputs ain;
      ain.add("polytope", p.name).add("k", k).add("m", m);
      ain.add("agreements", std::to_string(g.agreements));
      ain.add("crosschecked", std::to_string(g.crosschecked));
      ReportRow row = estimate_row("gamma-agreement", ain.str(), rate, 0.0, "0.999");
      row.std_error.clear();
      row.pass = pass_str(rate >= 0.999);
      report.rows.push_back(std::move(row));
    }
  } else if (cfg.subcommand == "feldman") {
    for (long k : k_list(0, 0)) {
      const FeldmanReport r = feldman_check(body, static_cast<int>(k), N, seed, cfg.tolerance);
      Inputs in;
      in.add("polytope", p.name).add("k", k);
      in.add("fk", static_cast<long>(body.face_count(static_cast<int>(k))));
      in.sampling(N, seed, r.angle_sum.resampled + r.survivors.est.resampled);
      report.rows.push_back(
          estimate_row("feldman-lhs", in.str(), r.lhs, r.lhs_std_error));
      report.rows.push_back(
          estimate_row("feldman-rhs", in.str(), r.rhs, r.rhs_std_error));
      ReportRow zrow;
      zrow.check = "feldman";
      zrow.inputs = in.str();
      zrow.zscore = format_double(r.zscore);
      zrow.pass = pass_str(r.zscore <= 3.0);
      report.rows.push_back(std::move(zrow));
    }
  } else if (cfg.subcommand == "deficiency") {
    const DeficiencyReport r =
        deficiency_check(p, lattice, cfg.face_dim, cfg.face_index, N, seed, cfg.tolerance);
    Inputs in;
    in.add("polytope", p.name).add("face-dim", cfg.face_dim).add("face-index", cfg.face_index);
    in.sampling(N, seed, r.resampled);
    report.rows.push_back(estimate_row("deficiency-lhs", in.str(), r.lhs, r.lhs_std_error));
    report.rows.push_back(estimate_row("deficiency-rhs", in.str(), r.rhs, r.rhs_std_error));
    ReportRow zrow;
    zrow.check = "deficiency";
    zrow.inputs = in.str();
    zrow.zscore = format_double(r.zscore);
    zrow.pass = pass_str(r.zscore <= 3.0);
    report.rows.push_back(std::move(zrow));
  } else if (cfg.subcommand == "prop41") {
    for (long k : k_list(0, p.dim - 1)) {
      const GapReport r =
          grassmann_gap_check(p, lattice, static_cast<int>(k), N, seed, cfg.tolerance);
      Inputs in;
      in.add("polytope", p.name).add("k", k);
      in.add("fk", format_double(r.face_count));
      in.add("rho-term", format_double(r.ratio_term));
      in.sampling(N, seed, r.resampled);
      report.rows.push_back(estimate_row("prop41-gap", in.str(), r.gap, r.gamma_std_error, "0",
                                         {}, pass_str(r.pass)));
    }
  } else if (cfg.subcommand == "thm24") {
    for (long k : k_list(0, p.dim - 1)) {
      const AngleSumBoundReport r =
          angle_sum_bound_check(body, static_cast<int>(k), N, seed, cfg.tolerance);
      Inputs in;
      in.add("polytope", p.name).add("k", k).sampling(N, seed, r.resampled);
      report.rows.push_back(estimate_row("thm24", in.str(), r.estimate, r.std_error,
                                         format_double(r.target), {}, pass_str(r.pass)));
    }
  } else {
    throw UsageError("unknown estimate check '" + cfg.subcommand + "'");
  }
}

void run_bounds(const RunConfig& cfg, Report& report) {
  const long d = scalar(cfg.d, "d");
  const auto ks = list_or(cfg.k, {0});
  if (cfg.subcommand == "barnette") {
    if (!cfg.m) throw UsageError("bounds barnette needs --m (facet count)");
    for (long k : ks) {
      const Int b = barnette_bound(static_cast<int>(d), *cfg.m, static_cast<int>(k));
      Inputs in;
      in.add("d", d).add("m", *cfg.m).add("k", k);
      std::string pass;
      if (cfg.fk) pass = pass_str(*cfg.fk >= b);
      report.rows.push_back(exact_row("barnette", in.str(), Rat(b), {}, pass));
    }
  } else if (cfg.subcommand == "hinman") {
    for (long k : ks) {
      const auto reports =
          hinman_bounds(static_cast<int>(d), static_cast<int>(k), cfg.f0, cfg.fd1,
                        cfg.improved, cfg.fk);
      for (const auto& b : reports) {
        Inputs in;
        in.add("d", d).add("k", k).add("input", b.input);
        std::string pass;
        if (b.satisfied) pass = pass_str(*b.satisfied);
        report.rows.push_back(exact_row(b.bound, in.str(), b.value, {}, pass));
      }
    }
  } else if (cfg.subcommand == "gubc") {
    if (!cfg.m) throw UsageError("bounds gubc needs --m (facet count)");
    for (long k : ks) {
      const auto g = gubc_values(static_cast<int>(d), *cfg.m, static_cast<int>(k));
      Inputs in;
      in.add("d", d).add("m", *cfg.m).add("k", k).add("status", "CONJECTURAL");
      if (!g) {
        ReportRow row;
        row.check = "gubc";
        row.inputs = in.str();
        row.pass = "skip";
        report.rows.push_back(std::move(row));
        continue;
      }
      in.add("n", g->n);
      std::string pass;
      if (cfg.fk) pass = pass_str(*cfg.fk >= g->bound);
      report.rows.push_back(exact_row("gubc", in.str(), Rat(g->bound), {}, pass));
    }
  } else {
    throw UsageError("unknown bounds check '" + cfg.subcommand + "'");
  }
}

void run_tightness(const RunConfig& cfg, Report& report) {
  const long d = scalar(cfg.d, "d");
  const long k = scalar(cfg.k, "k");
  if (!cfg.n) throw UsageError("tightness needs --n (value, range, or comma list)");
  std::vector<int> ns;
  for (long n : parse_int_list(*cfg.n)) ns.push_back(static_cast<int>(n));
  const auto rows = tightness_table(static_cast<int>(d), static_cast<int>(k), ns);
  const Rat coeff = rho(static_cast<int>(d), static_cast<int>(d - k - 1));
  for (const auto& row : rows) {
    Inputs in;
    in.add("d", d).add("k", k).add("n", row.n).add("rho", coeff);
    report.rows.push_back(exact_row("tightness", in.str(), row.residual));
  }
}

}  // namespace

RunResult run_command(const RunConfig& cfg) {
  RunResult result;
  Report& report = result.report;
  report.command = cfg.command + (cfg.subcommand.empty() ? "" : " " + cfg.subcommand);
  report.seed = cfg.seed;
  auto echo = [&](const char* key, const std::optional<std::string>& v) {
    if (v) report.config.emplace_back(key, *v);
  };
  echo("d", cfg.d);
  echo("n", cfg.n);
  echo("k", cfg.k);
  echo("polytope", cfg.polytope);
  echo("subspace", cfg.subspace);
  if (cfg.command == "estimate") {
    report.config.emplace_back("samples", std::to_string(cfg.samples));
    report.config.emplace_back("seed", std::to_string(cfg.seed));
    report.config.emplace_back("tolerance", format_double(cfg.tolerance));
  }
  if (cfg.m) report.config.emplace_back("m", cfg.m->str());
  if (cfg.f0) report.config.emplace_back("f0", cfg.f0->str());
  if (cfg.fd1) report.config.emplace_back("fd1", cfg.fd1->str());
  if (cfg.fk) report.config.emplace_back("fk", cfg.fk->str());
  if (cfg.improved) report.config.emplace_back("improved", "true");

  if (cfg.command == "tabulate") {
    run_tabulate(cfg, report);
  } else if (cfg.command == "verify") {
    if (cfg.subcommand == "lemma31")
      run_verify_lemma31(cfg, report);
    else if (cfg.subcommand == "gale")
      run_verify_gale(cfg, report);
    else if (cfg.subcommand == "euler")
      run_verify_euler(cfg, report);
    else if (cfg.subcommand == "prop43")
      run_verify_prop43(cfg, report);
    else if (cfg.subcommand == "remark")
      run_verify_remark(cfg, report);
    else
      throw UsageError("unknown verify check '" + cfg.subcommand + "'");
  } else if (cfg.command == "estimate") {
    run_estimate(cfg, report);
  } else if (cfg.command == "bounds") {
    run_bounds(cfg, report);
  } else if (cfg.command == "tightness") {
    run_tightness(cfg, report);
  } else {
    throw UsageError("unknown command '" + cfg.command + "'");
  }

  result.exit_code = report.failures() > 0 ? 1 : 0;
  return result;
}

}  // namespace polyface::cli
