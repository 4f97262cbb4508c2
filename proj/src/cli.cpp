#include "projsing/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "projsing/fuzz.hpp"
#include "projsing/schubert.hpp"

namespace projsing {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation: return 2;
    case ErrorKind::Hypothesis: return 3;
    case ErrorKind::Indeterminate: return 4;
    case ErrorKind::StabilizationCap: return 5;
    default: return 1;
  }
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

JobSpec job_from_json(const Json& j) {
  check_keys(j, {"command", "field", "seed", "truncation_cap", "params", "output"}, "job");
  JobSpec job;
  require(j.contains("command") && j["command"].is_string(), "job needs a string \"command\"");
  job.command = j["command"].get<std::string>();
  const auto& names = command_names();
  require(std::find(names.begin(), names.end(), job.command) != names.end(), "unknown command '" + job.command + "'");
  if (j.contains("field")) {
    require(j["field"].is_string(), "\"field\" must be a string");
    job.field = FieldSpec::parse(j["field"].get<std::string>());
  }
  if (j.contains("seed")) {
    require(j["seed"].is_number_unsigned() || (j["seed"].is_number_integer() && j["seed"].get<std::int64_t>() >= 0),
            "\"seed\" must be a non-negative integer");
    job.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("truncation_cap")) {
    require(j["truncation_cap"].is_number_integer(), "\"truncation_cap\" must be an integer");
    job.truncation_cap = j["truncation_cap"].get<int>();
    require(job.truncation_cap >= 4 && job.truncation_cap <= 4096, "\"truncation_cap\" must lie in [4, 4096]");
  }
  if (j.contains("params")) {
    require(j["params"].is_object(), "\"params\" must be an object");
    job.params = j["params"];
  }
  if (j.contains("output")) {
    require(j["output"].is_string(), "\"output\" must be a path string");
    job.output = j["output"].get<std::string>();
  }
  return job;
}

Json job_to_json(const JobSpec& job) {
  Json j{{"command", job.command},
         {"field", job.field.to_string()},
         {"seed", job.seed},
         {"truncation_cap", job.truncation_cap},
         {"params", job.params}};
  if (job.output) j["output"] = *job.output;
  return j;
}

namespace {

template <class T>
T param(const Json& p, const std::string& key, T fallback) {
  if (!p.contains(key)) return fallback;
  try {
    return p.at(key).get<T>();
  } catch (const Json::exception&) {
    fail(ErrorKind::Validation, "parameter \"" + key + "\" has the wrong type");
  }
}

template <class T>
T required_param(const Json& p, const std::string& key) {
  require(p.contains(key), "missing parameter \"" + key + "\"");
  return param<T>(p, key, T{});
}

// ---------------------------------------------------------------- classify-series

template <class S>
Json classify_series(const JobSpec& job, const Field<S>& field) {
  const Json& p = job.params;
  check_keys(p, {"branches", "generators", "unit", "truncation"}, "classify-series params");
  const int r = param<int>(p, "branches", 1);
  require(r >= 1 && r <= 4, "branches must lie in 1..4");
  const auto gens = required_param<std::vector<std::string>>(p, "generators");
  const bool unit = param<bool>(p, "unit", true);
  const int initial = param<int>(p, "truncation", 10);
  const SpaceBuilder<S> build = [&](int n) {
    const Ambient amb{r, n};
    std::map<std::string, TruncatedSeries<S>> alias;
    if (r == 1) alias.emplace("t", TruncatedSeries<S>::monomial(amb, 0, 1, field.one()));
    std::vector<TruncatedSeries<S>> v;
    if (unit) v.push_back(TruncatedSeries<S>::constant(amb, field.one()));
    for (const auto& g : gens) v.push_back(series_from_expression(g, amb, field, alias));
    return span_reduce(amb, v);
  };
  const ClosedAlgebra<S> closed = stabilized_closure<S>(build, {std::max(2, initial), job.truncation_cap});
  const int delta = closed.degree.delta;
  Json out;
  out["delta"] = delta;
  out["conductor"] = closed.degree.conductor;
  out["truncation"] = closed.gap.truncation();
  out["standard"] = is_standard(closed.gap);
  if (delta == 0) {
    out["type"] = "smooth";
  } else if (delta <= 3) {
    out["type"] = classify_ring(closed.gap).label();
  } else {
    out["type"] = "unclassified";
  }
  Json vs = nullptr;
  if (delta >= 1 && delta <= 3) {
    const GapFunction<S> lp(build(closed.gap.truncation()), GapKind::VectorSpace);
    try {
      vs = classify_vector_space(lp).label();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Validation) throw;
    }
  }
  out["vs_row"] = vs;
  Json lam = Json::array();
  const int top = std::min(2 * delta + 2, closed.gap.truncation());
  for (const Exponent& a : exponents_up_to(r, top)) {
    bool inside = true;
    for (int x : a) inside = inside && x <= closed.gap.truncation();
    if (inside) lam.push_back(Json{{"alpha", a}, {"value", closed.gap(a)}});
  }
  out["lambda"] = std::move(lam);
  return out;
}

// ---------------------------------------------------------------- projections

template <class S>
ProjectionCenter<S> center_from_params(const Json& p, int d, const Field<S>& field) {
  const int given = static_cast<int>(p.contains("forms")) + static_cast<int>(p.contains("center")) +
                    static_cast<int>(p.contains("forms_coefficients"));
  require(given == 1, "give exactly one of \"forms\", \"forms_coefficients\" or \"center\"");
  if (p.contains("forms")) {
    const auto forms = param<std::vector<std::string>>(p, "forms", {});
    require(!forms.empty(), "\"forms\" is empty");
    Matrix<S> m(static_cast<Index>(forms.size()), d + 1);
    for (size_t i = 0; i < forms.size(); ++i) m.row(static_cast<Index>(i)) = form_from_expression(forms[i], d, field).transpose();
    return ProjectionCenter<S>::from_forms(m);
  }
  if (p.contains("forms_coefficients"))
    return ProjectionCenter<S>::from_forms(matrix_from_json(p["forms_coefficients"], field, d + 1, "forms_coefficients"));
  return ProjectionCenter<S>::from_center(matrix_from_json(p["center"], field, d + 1, "center"));
}

template <class S>
std::vector<std::vector<CurvePoint<S>>> clusters_from_params(const Json& p, const Field<S>& field) {
  std::vector<std::vector<CurvePoint<S>>> out;
  require(p["clusters"].is_array(), "\"clusters\" must be an array of point lists");
  for (const auto& c : p["clusters"]) {
    require(c.is_array() && !c.empty(), "each cluster must be a non-empty list of points");
    out.emplace_back();
    for (const auto& pt : c) out.back().push_back(point_from_json(pt, field));
  }
  return out;
}

template <class S>
ExpansionCurve<S> curve_from_params(const Json& c, const Field<S>& field) {
  check_keys(c, {"dim", "degree", "genus", "points"}, "curve");
  ExpansionCurve<S> x(required_param<int>(c, "dim"), required_param<int>(c, "degree"), param<int>(c, "genus", 0));
  require(c.contains("points") && c["points"].is_array(), "curve needs \"points\"");
  for (const auto& entry : c["points"]) {
    check_keys(entry, {"point", "expansion"}, "curve point");
    require(entry.contains("point") && entry.contains("expansion"), "curve points need \"point\" and \"expansion\"");
    const auto& table = entry["expansion"];
    require(table.is_array() && !table.empty() && table[0].is_array(), "expansion must be a table");
    x.add_point(point_from_json(entry["point"], field),
                matrix_from_json(table, field, static_cast<Index>(table[0].size()), "expansion"));
  }
  return x;
}

template <class S>
ProjectionReport<S> run_analysis(const JobSpec& job, const Field<S>& field, bool default_force) {
  const Json& p = job.params;
  check_keys(p, {"d", "forms", "forms_coefficients", "center", "clusters", "force", "curve"}, job.command + " params");
  AnalysisOptions opt;
  opt.policy.cap = job.truncation_cap;
  opt.seed = job.seed;
  opt.force = param<bool>(p, "force", default_force);
  if (p.contains("curve")) {
    const ExpansionCurve<S> x = curve_from_params(p["curve"], field);
    require(p.contains("clusters"), "user-supplied curve models need explicit \"clusters\"");
    const auto center = center_from_params(p, x.dim() - 1, field);
    const Hypotheses h = hypotheses_for(center, x.degree(), x.genus());
    if (!h.two_ell_below_d && !opt.force)
      fail(ErrorKind::Hypothesis, "hypothesis 2l < d - 2rho_g violated; pass \"force\": true to analyze anyway");
    return analyze_at_points(center, x, clusters_from_params(p, field), field, opt);
  }
  const int d = required_param<int>(p, "d");
  require(d >= 2 && d <= 200, "d must lie in 2..200");
  const RationalNormalCurve<S> x(d, field);
  const auto center = center_from_params(p, d, field);
  if (p.contains("clusters")) {
    const Hypotheses h = hypotheses_for(center, d, 0);
    if (!h.two_ell_below_d && !opt.force)
      fail(ErrorKind::Hypothesis, "hypothesis 2l < d violated (l = " + std::to_string(center.ell()) + ", d = " +
                                      std::to_string(d) + "); pass \"force\": true to analyze anyway");
    ProjectionReport<S> rep = analyze_at_points(center, x, clusters_from_params(p, field), field, opt);
    rep.hypotheses = h;
    return rep;
  }
  return analyze(center, x, opt);
}

template <class S>
Json analyze_projection(const JobSpec& job, const Field<S>& field) {
  return report_json(run_analysis(job, field, false));
}

template <class S>
Json verify_bounds(const JobSpec& job, const Field<S>& field) {
  const ProjectionReport<S> rep = run_analysis(job, field, true);
  Json out = bound_json(verify_genus_bound(rep));
  out["two_ell_below_d"] = rep.hypotheses.two_ell_below_d;
  Json deltas = Json::array();
  for (const auto& c : rep.clusters) deltas.push_back(c.delta);
  out["cluster_deltas"] = std::move(deltas);
  return out;
}

// ---------------------------------------------------------------- strata

template <class S>
Json sample_stratum_cmd(const JobSpec& job, const Field<S>& field) {
  const Json& p = job.params;
  check_keys(p, {"d", "n", "types", "points", "max_attempts"}, "sample-stratum params");
  const int d = required_param<int>(p, "d"), n = required_param<int>(p, "n");
  require(d >= 2 && n >= 1 && n < d, "need 1 <= n < d");
  if constexpr (std::is_same_v<S, Fp>) require(field.modulus() >= 101, "sampling over F_p needs p >= 101");
  const auto labels = required_param<std::vector<std::string>>(p, "types");
  require(!labels.empty(), "\"types\" is empty");
  std::vector<SingularityType> types;
  for (const auto& l : labels) types.push_back(SingularityType::parse(l));
  const ConfigurationCodim cc = configuration_codim(types, d, n);
  Rng rng(job.seed);
  const RationalNormalCurve<S> x(d, field);
  std::vector<std::vector<CurvePoint<S>>> points;
  if (p.contains("points")) {
    Json cl = p["points"];
    Json wrapped{{"clusters", cl}};
    points = clusters_from_params(wrapped, field);
    require(points.size() == types.size(), "give one point list per type");
  } else {
    std::vector<CurvePoint<S>> used;
    for (const auto& t : types) {
      points.emplace_back();
      while (static_cast<int>(points.back().size()) < t.branches()) {
        const CurvePoint<S> pt = uniform_below(rng, 8) == 0 ? CurvePoint<S>::infinity(field.one()) : CurvePoint<S>::affine(field.random(rng));
        if (std::find(used.begin(), used.end(), pt) != used.end()) continue;
        used.push_back(pt);
        points.back().push_back(pt);
      }
    }
  }
  std::vector<SchubertSpec<S>> specs;
  Json parts = Json::array();
  for (size_t i = 0; i < types.size(); ++i) {
    specs.push_back(stratum_spec(types[i], points[i], x, n));
    parts.push_back(Json{{"type", types[i].label()},
                         {"partition", specs.back().partition.parts},
                         {"codimension", specs.back().codim},
                         {"pivots", specs.back().pivots}});
  }
  SampleOptions opt;
  opt.max_attempts = param<int>(p, "max_attempts", 20);
  opt.analysis.policy.cap = job.truncation_cap;
  opt.analysis.seed = job.seed;
  const StratumSample<S> s = sample_stratum(specs, x, rng, opt);
  Json forms = Json::array();
  for (Index i = 0; i < s.center.M.rows(); ++i) forms.push_back(form_to_string<S>(s.center.M.row(i).transpose()));
  Json out;
  out["center"] = matrix_json(s.center.L);
  out["forms"] = std::move(forms);
  out["forms_coefficients"] = matrix_json(s.center.M);
  out["attempts"] = s.attempts;
  out["strata"] = std::move(parts);
  out["codimension"] = cc.codim;
  out["family_dimension"] = cc.family_dim;
  out["report"] = report_json(s.report);
  return out;
}

Json enumerate_types_cmd(const JobSpec& job) {
  check_keys(job.params, {}, "enumerate-types params");
  Json types = Json::array();
  for (const auto& t : enumerate_types()) types.push_back(type_json(t));
  return Json{{"count", types.size()}, {"types", std::move(types)}};
}

template <class S>
Json fuzz_cmd(const JobSpec& job, const Field<S>& field) {
  const Json& p = job.params;
  check_keys(p, {"samples", "max_branches", "max_delta"}, "fuzz-key-lemma params");
  const int samples = param<int>(p, "samples", 200), branches = param<int>(p, "max_branches", 3),
            max_delta = param<int>(p, "max_delta", 4);
  require(samples >= 1 && branches >= 1 && branches <= 4 && max_delta >= 0, "fuzz parameters out of range");
  Rng rng(job.seed);
  const KeyLemmaFuzzReport rep = fuzz_key_lemma<S>(samples, branches, max_delta, rng, field, {10, job.truncation_cap});
  Json hist = Json::object();
  for (const auto& [d, c] : rep.delta_histogram) hist[std::to_string(d)] = c;
  return Json{{"samples", rep.samples},   {"rejected", rep.rejected}, {"checks", rep.checks},
              {"delta_histogram", hist}, {"failures", rep.failures}, {"pass", rep.failures.empty()}};
}

template <class S>
Json dispatch(const JobSpec& job, const Field<S>& field) {
  if (job.command == "classify-series") return classify_series(job, field);
  if (job.command == "analyze-projection") return analyze_projection(job, field);
  if (job.command == "verify-bounds") return verify_bounds(job, field);
  if (job.command == "sample-stratum") return sample_stratum_cmd(job, field);
  if (job.command == "enumerate-types") return enumerate_types_cmd(job);
  if (job.command == "fuzz-key-lemma") return fuzz_cmd(job, field);
  fail(ErrorKind::Validation, "unknown command '" + job.command + "'");
}

}  // namespace

JobResult run_job(const JobSpec& job) {
  JobResult res;
  res.report = Json{{"schema_version", kSchemaVersion},
                    {"command", job.command},
                    {"field", job.field.to_string()},
                    {"seed", job.seed},
                    {"truncation_cap", job.truncation_cap},
                    {"input", job.params}};
  try {
    Json result;
    if (job.field.rational)
      result = dispatch(job, Field<Rational>());
    else
      result = dispatch(job, Field<Fp>(job.field.p));
    if (job.command == "fuzz-key-lemma" && !result["pass"].get<bool>()) res.exit_code = 1;
    res.report["result"] = std::move(result);
  } catch (const Error& e) {
    res.exit_code = exit_code(e.kind());
    res.report["error"] = Json{{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    res.exit_code = 1;
    res.report["error"] = Json{{"kind", "internal"}, {"message", e.what()}};
  }
  return res;
}

std::vector<JobResult> run_batch(const std::vector<JobSpec>& jobs) {
  std::vector<JobResult> out(jobs.size());
  const size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < std::min(workers, jobs.size()); ++w)
    pool.emplace_back([&] {
      for (size_t i; (i = next++) < jobs.size();) out[i] = run_job(jobs[i]);
    });
  for (auto& t : pool) t.join();
  return out;
}

namespace {

Json read_json_source(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    require(in.good(), "cannot open '" + path + "'");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Validation, "invalid JSON in '" + path + "': " + e.what());
  }
}

void write_text(const std::optional<std::string>& path, const std::string& text) {
  if (!path || *path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(*path);
  require(out.good(), "cannot write '" + *path + "'");
  out << text;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Gap functions, singularity types and projections of rational normal curves"};
  app.require_subcommand(0, 1);
  std::string field_text, out_path, batch_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> cap;
  bool quiet = false;
  app.add_option("--field", field_text, "rational | Fp:<p> (default Fp:10007)");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--truncation-cap", cap, "largest truncation tried before giving up");
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");
  app.add_flag("--quiet", quiet, "no diagnostics on stderr");
  app.add_option("--batch", batch_path, "run a JSON array of jobs in parallel");

  struct Sub {
    CLI::App* app;
    std::string params, params_file;
  };
  std::map<std::string, Sub> subs;
  std::string job_path;
  CLI::App* run = app.add_subcommand("run", "run one JSON job spec (file or -)");
  run->add_option("job", job_path, "job file")->required();
  run->fallthrough();

  std::vector<std::string> gens, forms, types;
  int branches = 1, d = 0, n = 0, samples = 0;
  bool force = false;
  for (const auto& name : command_names()) {
    Sub s{app.add_subcommand(name), {}, {}};
    s.app->fallthrough();
    subs[name] = s;
  }
  for (auto& [name, s] : subs) {
    s.app->add_option("--params", s.params, "parameters as a JSON object");
    s.app->add_option("--params-file", s.params_file, "parameters from a JSON file");
  }
  subs["classify-series"].app->description("classify the unit-containing span of series generators");
  subs["classify-series"].app->add_option("--gen", gens, "generator in t1..t4 (t for one branch)");
  subs["classify-series"].app->add_option("--branches", branches, "number of branches");
  for (const char* name : {"analyze-projection", "verify-bounds"}) {
    subs[name].app->add_option("--d", d, "degree of the rational normal curve");
    subs[name].app->add_option("--form", forms, "binary form in x, y spanning M");
    subs[name].app->add_flag("--force", force, "skip the 2l < d gate");
  }
  subs["analyze-projection"].app->description("singularities of the projection from P(L)");
  subs["verify-bounds"].app->description("check the genus bounds on a projection");
  subs["sample-stratum"].app->description("sample a center realizing a configuration of types");
  subs["sample-stratum"].app->add_option("--d", d, "degree");
  subs["sample-stratum"].app->add_option("--n", n, "target dimension");
  subs["sample-stratum"].app->add_option("--type", types, "singularity type label");
  subs["enumerate-types"].app->description("list the classified singularity types");
  subs["fuzz-key-lemma"].app->description("random check of the key lemma");
  subs["fuzz-key-lemma"].app->add_option("--samples", samples, "number of admissible samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const auto apply_globals = [&](JobSpec& job) {
    if (!field_text.empty()) job.field = FieldSpec::parse(field_text);
    if (seed) job.seed = *seed;
    if (cap) job.truncation_cap = *cap;
    if (!out_path.empty()) job.output = out_path;
  };
  const auto report_error = [&](const Error& e) {
    if (!quiet) std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  };

  try {
    if (!batch_path.empty()) {
      const Json arr = read_json_source(batch_path);
      require(arr.is_array(), "batch file must hold a JSON array of jobs");
      std::vector<JobSpec> jobs;
      for (const auto& j : arr) {
        jobs.push_back(job_from_json(j));
        if (!field_text.empty()) jobs.back().field = FieldSpec::parse(field_text);
        if (cap) jobs.back().truncation_cap = *cap;
      }
      const auto results = run_batch(jobs);
      Json all = Json::array();
      int code = 0;
      for (size_t i = 0; i < results.size(); ++i) {
        code = std::max(code, results[i].exit_code);
        if (jobs[i].output)
          write_text(jobs[i].output, render(results[i].report));
        all.push_back(results[i].report);
        if (!quiet && results[i].report.contains("error"))
          std::cerr << "job " << i << ": " << results[i].report["error"]["message"].get<std::string>() << "\n";
      }
      write_text(out_path.empty() ? std::nullopt : std::optional<std::string>(out_path), render(all));
      return code;
    }

    JobSpec job;
    if (run->parsed()) {
      job = job_from_json(read_json_source(job_path));
    } else {
      const Sub* chosen = nullptr;
      for (const auto& [name, s] : subs)
        if (s.app->parsed()) {
          job.command = name;
          chosen = &s;
        }
      if (!chosen) {
        std::cout << app.help();
        return 2;
      }
      if (!chosen->params.empty()) {
        try {
          job.params = Json::parse(chosen->params);
        } catch (const Json::parse_error& e) {
          fail(ErrorKind::Validation, std::string("invalid --params JSON: ") + e.what());
        }
      } else if (!chosen->params_file.empty()) {
        job.params = read_json_source(chosen->params_file);
      }
      require(job.params.is_object(), "parameters must be a JSON object");
      if (!gens.empty()) job.params["generators"] = gens;
      if (branches != 1) job.params["branches"] = branches;
      if (d) job.params["d"] = d;
      if (n) job.params["n"] = n;
      if (!forms.empty()) job.params["forms"] = forms;
      if (!types.empty()) job.params["types"] = types;
      if (force) job.params["force"] = true;
      if (samples) job.params["samples"] = samples;
    }
    apply_globals(job);
    const JobResult res = run_job(job);
    write_text(job.output, render(res.report));
    if (!quiet && res.report.contains("error"))
      std::cerr << "error (" << res.report["error"]["kind"].get<std::string>()
                << "): " << res.report["error"]["message"].get<std::string>() << "\n";
    return res.exit_code;
  } catch (const Error& e) {
    return report_error(e);
  }
}

}  // namespace projsing
