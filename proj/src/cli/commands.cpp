// Copyright 2026 The sanet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "sanet/apps/apps.hpp"
#include "sanet/core/ops.hpp"
#include "sanet/core/tsv_io.hpp"
#include "sanet/generator/generator.hpp"
#include "sanet/generator/zhel.hpp"
#include "sanet/inference/fit.hpp"
#include "sanet/inference/likelihood.hpp"
#include "sanet/metrics/report.hpp"
#include "sanet/metrics/structure.hpp"
#include "sanet/util/error.hpp"
#include "sanet/util/random.hpp"

#ifndef SANET_VERSION
#define SANET_VERSION "0.0.0"
#endif

namespace sanet::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

const std::vector<std::string> kGenParamKeys{
    "T",    "mu_a", "sigma_a",    "p",          "alpha",       "beta",
    "mu_l", "sigma_l", "m_s",     "fc",         "attachment",  "closure",
    "sleep", "lapa_heuristic", "init_social", "init_attr", "max_social_links"};

std::uint64_t Seed(const Context& c) { return c.settings.GetUint("seed"); }

Json Provenance(const Context& c) {
  Json config = Json::object();
  for (const auto& [k, v] : c.settings.resolved()) config[k] = v;
  Json j;
  j["tool"] = "sanet";
  j["version"] = SANET_VERSION;
  j["schema_version"] = kSchemaVersion;
  j["command"] = c.command;
  j["seed"] = Seed(c);
  j["config"] = config;
  if (!c.settings.ignored().empty()) j["ignored_config_keys"] = c.settings.ignored();
  return j;
}

std::vector<std::string> ProvenanceLines(const Context& c) {
  std::vector<std::string> lines{std::string("sanet ") + SANET_VERSION +
                                 " schema_version=" + std::to_string(kSchemaVersion) +
                                 " command=" + c.command};
  for (const auto& [k, v] : c.settings.resolved()) lines.push_back(k + "=" + v);
  return lines;
}

void WriteFile(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  Require(static_cast<bool>(out), ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  Require(static_cast<bool>(out), ErrorCode::kIo, "write failed for " + path.string());
}

void WriteJson(const Context& c, const std::string& name, Json body) {
  Json j;
  j["provenance"] = Provenance(c);
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  WriteFile(c.out_dir / name, j.dump(2) + "\n");
}

// CSV with the provenance as leading '#' lines.
void WriteCsv(const Context& c, const std::string& name, const std::string& rows) {
  std::ostringstream os;
  WriteComments(os, ProvenanceLines(c));
  os << rows;
  WriteFile(c.out_dir / name, os.str());
}

std::string Num(double x) { return Json(x).dump(); }

Json Nullable(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

SanGraph LoadGraph(const Context& c, const std::string& key) {
  const std::string& dir = c.settings.Get(key);
  Require(!dir.empty(), ErrorCode::kInvalidArgument, "--" + FlagName(key) + " is required");
  return LoadSanDir(dir);
}

// ---- generate ----------------------------------------------------------

int RunGenerate(Context& c) {
  const Settings& s = c.settings;
  GenParams p;
  std::map<std::string, std::string> kv;
  for (const auto& k : kGenParamKeys) kv[k] = s.Get(k);
  p.Apply(kv);
  p.seed = Seed(c);
  p.Validate();
  const std::string model = s.Get("model");
  const auto checkpoints = s.GetIntList("checkpoints");
  const auto comments = ProvenanceLines(c);

  GenerationResult result;
  std::vector<std::int64_t> written;
  if (model == "san") {
    GenerateOptions options;
    options.checkpoints = checkpoints;
    options.on_checkpoint = [&](std::int64_t step, const SanGraph& g) {
      SaveSanDir(SnapshotDirName(c.out_dir / "snapshots", step), g, comments);
      written.push_back(step);
    };
    result = Generate(p, options);
  } else if (model == "zhel") {
    Require(checkpoints.empty(), ErrorCode::kInvalidArgument,
            "checkpoints are not supported for the zhel baseline");
    ZhelParams z;
    z.T = p.T;
    z.seed = p.seed;
    z.init_social = p.init_social;
    z.init_attr = p.init_attr;
    z.max_social_links = p.max_social_links;
    z.Validate();
    result = GenerateBaselineZhel(z);
  } else {
    Fail(ErrorCode::kInvalidArgument, "unknown model '" + model + "'");
  }
  SaveSanDir(c.out_dir, result.graph, comments);
  SaveEventLog(c.out_dir / "events.tsv", result.log, comments);

  const SanGraph& g = result.graph;
  Json body;
  body["counts"] = {{"social_nodes", g.social_node_count()},
                    {"attribute_nodes", g.attribute_node_count()},
                    {"social_links", g.social_link_count()},
                    {"attribute_links", g.attribute_link_count()},
                    {"events", result.log.events.size()}};
  const GenerationStats& st = result.stats;
  body["stats"] = {{"first_links", st.first_links},
                   {"closure_links", st.closure_links},
                   {"wakes", st.wakes},
                   {"consumed_wakes", st.consumed_wakes},
                   {"new_attributes", st.new_attributes}};
  body["checkpoints"] = written;
  WriteJson(c, "summary.json", body);
  *c.out << "social_nodes=" << g.social_node_count()
         << " attribute_nodes=" << g.attribute_node_count()
         << " social_links=" << g.social_link_count()
         << " attribute_links=" << g.attribute_link_count() << '\n';
  return 0;
}

// ---- measure -----------------------------------------------------------

const std::vector<KeySpec> kMeasureKeys{
    {"metrics", "all", "comma-separated metric groups, 'all' or empty for none"},
    {"distance_sources", "0", "BFS sources for the distance distribution, 0 = all"},
    {"attribute_distance_sources", "0", "source attributes for attribute distance, 0 = all"},
    {"diameter", "exact", "effective diameter mode: exact or probabilistic"},
    {"anf_registers", "64", "HyperLogLog registers per node"},
    {"anf_runs", "1", "independent HyperANF runs averaged"},
    {"approx_clustering", "false", "sampled clustering coefficients"},
    {"approx_epsilon", "0.002", "additive error of sampled clustering"},
    {"approx_nu", "100", "failure probability is at most 1/nu"},
    {"approx_samples", "0", "sample count override, 0 derives it from epsilon and nu"},
    {"percentile_top_k", "10", "attribute values per type in the percentile table"},
};

MeasureOptions MeasureOptionsFrom(const Context& c) {
  const Settings& s = c.settings;
  MeasureOptions o;
  o.seed = Seed(c);
  o.workers = c.workers;
  o.distance_sources = s.GetUint("distance_sources");
  o.attribute_distance_sources = s.GetUint("attribute_distance_sources");
  const std::string& mode = s.Get("diameter");
  Require(mode == "exact" || mode == "probabilistic", ErrorCode::kInvalidArgument,
          "diameter must be exact or probabilistic");
  o.diameter = mode == "exact" ? DiameterMode::kExact : DiameterMode::kProbabilistic;
  o.anf.registers = static_cast<int>(s.GetInt("anf_registers"));
  o.anf.runs = static_cast<int>(s.GetInt("anf_runs"));
  o.approx_clustering = s.GetBool("approx_clustering");
  o.approx.epsilon = s.GetDouble("approx_epsilon");
  o.approx.nu = s.GetDouble("approx_nu");
  o.approx.samples = s.GetUint("approx_samples");
  o.percentile_top_k = s.GetUint("percentile_top_k");
  if (s.Get("metrics") == "all") {
    o.groups = MetricGroups();
  } else {
    o.groups = s.GetList("metrics");
  }
  return o;
}

int RunMeasure(Context& c) {
  const SanGraph g = LoadGraph(c, "graph");
  const MetricReport r = Measure(g, MeasureOptionsFrom(c));
  WriteJson(c, "report.json", Json{{"report", ToJson(r)}});
  std::ostringstream csv;
  WriteCurvesCsv(csv, r);
  WriteCsv(c, "curves.csv", csv.str());
  *c.out << "scalars=" << r.scalars.size() << " curves=" << r.curves.size() << '\n';
  return 0;
}

// ---- evolve ------------------------------------------------------------

std::vector<std::uint64_t> Positive(std::vector<std::uint64_t> v) {
  v.erase(std::remove(v.begin(), v.end(), 0), v.end());
  return v;
}

int RunEvolve(Context& c) {
  const Settings& s = c.settings;
  const std::string& dir = s.Get("snapshots");
  Require(!dir.empty(), ErrorCode::kInvalidArgument, "--snapshots is required");
  const MeasureOptions options = MeasureOptionsFrom(c);
  std::vector<DegreeKind> fit_kinds;
  for (const auto& k : s.GetList("fit_degrees")) fit_kinds.push_back(ParseDegreeKind(k));

  const auto entries = LoadSnapshotSeries(dir);
  Json snapshots = Json::array();
  Json warnings = Json::array();
  std::ostringstream csv;
  csv << "timestamp,metric,value\n";
  const SanGraph* prev = nullptr;
  for (const SnapshotEntry& e : entries) {
    Json snap;
    snap["timestamp"] = e.timestamp;
    snap["name"] = e.dir.filename().string();
    if (!e.graph) {
      snap["status"] = "skipped";
      snap["report"] = nullptr;
      warnings.push_back({{"timestamp", e.timestamp}, {"warning", "malformed snapshot"},
                          {"detail", e.error}});
      snapshots.push_back(snap);
      continue;
    }
    const SanGraph& g = *e.graph;
    snap["status"] = "ok";
    const MetricReport r = Measure(g, options);
    for (const auto& [name, v] : r.scalars) {
      csv << e.timestamp << ',' << name << ',' << (v ? Num(*v) : "") << '\n';
    }
    Json fits = Json::object();
    for (DegreeKind kind : fit_kinds) {
      const std::string key = std::string("fit.") + DegreeKindName(kind);
      std::optional<double> mu, sigma;
      try {
        const auto sample = Positive(DegreeSequence(g, kind));
        const DistFit f = FitDiscreteLognormal(sample);
        mu = f.mu;
        sigma = f.sigma;
        fits[DegreeKindName(kind)] = {{"mu", f.mu}, {"sigma", f.sigma}, {"n", f.n}};
      } catch (const Error& err) {
        fits[DegreeKindName(kind)] = nullptr;
        warnings.push_back({{"timestamp", e.timestamp}, {"warning", "fit failed"},
                            {"detail", std::string(DegreeKindName(kind)) + ": " + err.what()}});
      }
      csv << e.timestamp << ',' << key << ".mu," << (mu ? Num(*mu) : "") << '\n';
      csv << e.timestamp << ',' << key << ".sigma," << (sigma ? Num(*sigma) : "") << '\n';
    }
    snap["fits"] = fits;
    std::optional<double> new_social, new_attr;
    if (prev != nullptr) {
      if (IsMonotone(*prev, g)) {
        const EventLog diff = DiffSnapshots(*prev, g);
        double ns = 0, na = 0;
        for (const Event& ev : diff.events) {
          ns += ev.kind == EventKind::kSocialLink;
          na += ev.kind == EventKind::kAttributeLink;
        }
        new_social = ns;
        new_attr = na;
      } else {
        warnings.push_back({{"timestamp", e.timestamp},
                            {"warning", "snapshot does not contain its predecessor"},
                            {"detail", "difference metrics set to null"}});
      }
    }
    snap["diff"] = {{"new_social_links", Nullable(new_social)},
                    {"new_attribute_links", Nullable(new_attr)}};
    csv << e.timestamp << ",diff.new_social_links," << (new_social ? Num(*new_social) : "")
        << '\n';
    csv << e.timestamp << ",diff.new_attribute_links," << (new_attr ? Num(*new_attr) : "")
        << '\n';
    snap["report"] = ToJson(r);
    snapshots.push_back(snap);
    prev = &g;
  }
  WriteJson(c, "evolution.json", Json{{"snapshots", snapshots}, {"warnings", warnings}});
  WriteCsv(c, "evolution.csv", csv.str());
  for (const auto& w : warnings) *c.err << "warning: " << w.dump() << '\n';
  *c.out << "snapshots=" << entries.size() << " warnings=" << warnings.size() << '\n';
  return 0;
}

// ---- fit ---------------------------------------------------------------

Json FitJson(const DistFit& f) {
  Json j{{"family", FamilyName(f.family)}};
  if (f.family == Family::kDiscreteLognormal) {
    j["mu"] = f.mu;
    j["sigma"] = f.sigma;
  } else {
    j["alpha"] = f.alpha;
  }
  j["xmin"] = f.xmin;
  j["loglik"] = f.loglik;
  j["n"] = f.n;
  j["ks"] = f.gof;
  return j;
}

std::vector<std::uint64_t> ReadSample(const std::string& path) {
  std::ifstream in(path);
  Require(static_cast<bool>(in), ErrorCode::kIo, "cannot read " + path);
  std::vector<std::uint64_t> out;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::getline(in, tok);
      continue;
    }
    std::uint64_t v = 0;
    std::istringstream conv(tok);
    Require(static_cast<bool>(conv >> v) && conv.eof(), ErrorCode::kParse,
            "bad sample value '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

int RunFit(Context& c) {
  const Settings& s = c.settings;
  std::vector<std::uint64_t> raw;
  Json source;
  if (!s.Get("sample").empty()) {
    raw = ReadSample(s.Get("sample"));
    source = {{"sample", s.Get("sample")}};
  } else {
    const SanGraph g = LoadGraph(c, "graph");
    raw = DegreeSequence(g, ParseDegreeKind(s.Get("degree")));
    source = {{"graph", s.Get("graph")}, {"degree", s.Get("degree")}};
  }
  const auto sample = Positive(raw);
  source["observations"] = raw.size();
  source["zeros_dropped"] = raw.size() - sample.size();

  PowerLawOptions pl;
  pl.min_tail = s.GetUint("min_tail");
  const std::string& range_text = s.Get("range");
  Require(range_text == "full" || range_text == "tail", ErrorCode::kInvalidArgument,
          "range must be full or tail");
  const CompareRange range = range_text == "full" ? CompareRange::kFull : CompareRange::kTail;

  int status = 0;
  Json body{{"source", source}};
  auto attempt = [&](const char* name, const auto& fn) {
    try {
      body[name] = fn();
    } catch (const Error& e) {
      body[name] = {{"error", e.what()}, {"code", ErrorCodeName(e.code())}};
      *c.err << "error: " << name << ": " << e.what() << '\n';
      status = 1;
    }
  };
  attempt("lognormal", [&] { return FitJson(FitDiscreteLognormal(sample)); });
  attempt("powerlaw", [&] { return FitJson(FitPowerLaw(sample, pl)); });
  attempt("comparison", [&] {
    const FitComparison cmp = CompareFits(sample, s.GetDouble("significance"), range, pl);
    return Json{{"range", range_text},
                {"preferred", PreferenceName(cmp.preferred)},
                {"loglik_ratio", cmp.loglik_ratio},
                {"statistic", cmp.statistic},
                {"p_value", cmp.p_value},
                {"n", cmp.n},
                {"powerlaw", FitJson(cmp.powerlaw)},
                {"lognormal", FitJson(cmp.lognormal)}};
  });
  WriteJson(c, "fit.json", body);
  if (body["comparison"].contains("preferred")) {
    *c.out << "preferred=" << body["comparison"]["preferred"].get<std::string>() << '\n';
  }
  return status;
}

// ---- likelihood --------------------------------------------------------

std::string MatrixCsv(const std::vector<double>& alphas, const std::vector<double>& betas,
                      const std::vector<std::vector<double>>& m) {
  std::ostringstream os;
  os << "alpha\\beta";
  for (double b : betas) os << ',' << Num(b);
  os << '\n';
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    os << Num(alphas[i]);
    for (double x : m[i]) os << ',' << Num(x);
    os << '\n';
  }
  return os.str();
}

int RunLikelihood(Context& c) {
  const Settings& s = c.settings;
  Require(!s.Get("events").empty(), ErrorCode::kInvalidArgument, "--events is required");
  const EventLog log = LoadEventLog(s.Get("events"));
  const Attachment variant = ParseAttachment(s.Get("variant"));
  const std::vector<double> alphas = s.GetDoubleList("alphas");
  std::vector<double> betas = s.GetDoubleList("betas");
  if (betas.empty()) {
    betas = variant == Attachment::kPAPA ? std::vector<double>{0, 0.5, 1, 2, 5, 10}
                                         : std::vector<double>{0, 1, 10, 50, 100, 200, 500, 1000};
  }
  const LikelihoodGrid grid = ComputeLikelihoodGrid(log, alphas, betas, variant);
  const auto [bi, bj] = grid.Best();
  Json attach{{"variant", AttachmentName(variant)},
              {"alphas", grid.alphas},
              {"betas", grid.betas},
              {"loglik", grid.loglik},
              {"improvement", grid.improvement},
              {"l_pa", grid.l_pa},
              {"l_uniform", grid.l_uniform},
              {"pa_over_uniform", (grid.l_uniform - grid.l_pa) / grid.l_uniform},
              {"best", {{"alpha", grid.alphas[bi]},
                        {"beta", grid.betas[bj]},
                        {"loglik", grid.loglik[bi][bj]},
                        {"improvement", grid.improvement[bi][bj]}}},
              {"scored", grid.scored},
              {"impossible", grid.impossible},
              {"convention",
               "improvement = (l_pa - l) / l_pa; log-likelihoods are negative, so a positive "
               "value means the cell explains the log better than PA"}};

  const double fc = s.GetDouble("closure_fc");
  const ClosureMix mix = ClassifyClosures(log);
  const std::vector<ClosureScore> scores{ClosureLogLik(log, Closure::kBaseline),
                                         ClosureLogLik(log, Closure::kRR),
                                         ClosureLogLik(log, Closure::kRRSAN, fc)};
  const std::vector<double> common = CommonSupportTotals(scores);
  const char* names[] = {"baseline", "rr", "rr-san"};
  Json models = Json::object();
  Json support = Json::object();
  for (std::size_t k = 0; k < scores.size(); ++k) {
    models[names[k]] = {{"loglik", scores[k].total.loglik},
                        {"scored", scores[k].total.scored},
                        {"impossible", scores[k].total.impossible}};
    support[names[k]] = common[k];
  }
  auto gain = [](double base, double better) {
    return base == 0.0 ? 0.0 : (base - better) / base;
  };
  Json closure{{"mix", {{"links", mix.links},
                        {"triadic", mix.triadic},
                        {"focal", mix.focal},
                        {"both", mix.both},
                        {"neither", mix.neither}}},
               {"fc", fc},
               {"models", models},
               {"common_support", support},
               {"rr_over_baseline", gain(common[0], common[1])},
               {"rrsan_over_rr", gain(common[1], common[2])}};
  WriteJson(c, "likelihood.json", Json{{"attachment", attach}, {"closure", closure}});
  WriteCsv(c, "grid.csv", MatrixCsv(grid.alphas, grid.betas, grid.improvement));
  WriteCsv(c, "grid_loglik.csv", MatrixCsv(grid.alphas, grid.betas, grid.loglik));
  *c.out << "best_alpha=" << grid.alphas[bi] << " best_beta=" << grid.betas[bj]
         << " improvement=" << grid.improvement[bi][bj] << '\n';
  return 0;
}

// ---- apps --------------------------------------------------------------

Json EstimateJson(const Estimate& e) {
  return {{"mean", e.mean}, {"ci_low", e.ci_low}, {"ci_high", e.ci_high}, {"trials", e.trials}};
}

int RunApps(Context& c) {
  const Settings& s = c.settings;
  const SanGraph g = LoadGraph(c, "graph");
  const App app = ParseApp(s.Get("app"));
  SybilConfig sybil;
  sybil.w = static_cast<int>(s.GetInt("w"));
  sybil.degree_bound = s.GetUint("degree_bound");
  sybil.trials = static_cast<int>(s.GetInt("trials"));
  sybil.route_mode = s.GetBool("route_mode");
  sybil.seed = Seed(c);
  sybil.workers = c.workers;
  AnonConfig anon;
  anon.walk_length = static_cast<int>(s.GetInt("walk_length"));
  anon.circuits = static_cast<int>(s.GetInt("circuits"));
  anon.trials = sybil.trials;
  anon.degree_bound = sybil.degree_bound;
  anon.seed = sybil.seed;
  anon.workers = c.workers;
  sybil.Validate();
  anon.Validate();
  std::vector<std::size_t> sweep;
  for (auto v : s.GetIntList("sweep")) {
    Require(v >= 0, ErrorCode::kInvalidArgument, "sweep values must be nonnegative");
    sweep.push_back(static_cast<std::size_t>(v));
  }
  auto run = [&](const SanGraph& graph, std::size_t count) {
    if (app == App::kSybil) {
      SybilConfig cfg = sybil;
      cfg.compromised_count = count;
      return SybilAdmission(graph, cfg);
    }
    AnonConfig cfg = anon;
    cfg.compromised_count = count;
    return AnonymityCompromiseProbability(graph, cfg);
  };
  auto view_json = [&](const SanGraph& graph) {
    const UndirectedGraph v = DegreeBoundedView(graph, sybil.degree_bound,
                                                BoundedViewSeed(sybil.seed));
    return Json{{"nodes", v.node_count()}, {"edges", v.edge_count()},
                {"max_degree", v.max_degree()}};
  };

  int status = 0;
  std::vector<SweepRow> rows;
  Json body{{"app", AppName(app)}, {"bounded_view", {{"graph", view_json(g)}}}};
  Json points = Json::array();
  const std::string& model_dir = s.Get("model_graph");
  if (model_dir.empty()) {
    for (std::size_t count : sweep) {
      try {
        const Estimate e = run(g, count);
        rows.push_back({count, e, "graph"});
        points.push_back({{"compromised", count}, {"graph", EstimateJson(e)}});
      } catch (const Error& err) {
        points.push_back({{"compromised", count}, {"error", err.what()}});
        *c.err << "error: compromised=" << count << ": " << err.what() << '\n';
        status = 1;
      }
    }
  } else {
    const SanGraph model = LoadSanDir(model_dir);
    body["bounded_view"]["model"] = view_json(model);
    const auto table = FidelityCompare(g, model, app, sweep, sybil, anon);
    std::vector<std::size_t> done;
    for (const FidelityRow& r : table) {
      done.push_back(r.compromised);
      rows.push_back({r.compromised, r.real, "graph"});
      rows.push_back({r.compromised, r.model, "model"});
      points.push_back({{"compromised", r.compromised},
                        {"graph", EstimateJson(r.real)},
                        {"model", EstimateJson(r.model)},
                        {"relative_error", std::isfinite(r.relative_error)
                                               ? Json(r.relative_error)
                                               : Json(nullptr)}});
    }
    Json skipped = Json::array();
    for (std::size_t count : sweep) {
      if (std::find(done.begin(), done.end(), count) == done.end()) skipped.push_back(count);
    }
    body["skipped"] = skipped;
  }
  body["sweep"] = points;
  WriteJson(c, "apps.json", body);
  std::ostringstream csv;
  WriteSweepCsv(csv, rows);
  WriteCsv(c, "sweep.csv", csv.str());
  *c.out << "points=" << points.size() << '\n';
  return status;
}

// ---- subsample ---------------------------------------------------------

std::string GroupOf(const std::string& metric) {
  static const std::vector<std::pair<std::string, std::string>> kPrefixes{
      {"clustering.", "clustering"}, {"social_clustering", "clustering"},
      {"attribute_clustering", "clustering"}, {"knn.", "knn"},
      {"degree.", "degree"}, {"assortativity", "assortativity"},
      {"reciprocity", "reciprocity"}, {"social_density", "density"},
      {"attribute_density", "density"}, {"attribute_distance", "attribute_distance"},
      {"attribute_effective_diameter", "attribute_distance"}, {"distance", "distance"},
      {"effective_diameter", "distance"}};
  for (const auto& [prefix, group] : kPrefixes) {
    if (metric.rfind(prefix, 0) == 0) return group;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown metric '" + metric + "'");
}

int RunSubsample(Context& c) {
  const Settings& s = c.settings;
  const SanGraph g = LoadGraph(c, "graph");
  const std::string& mode_text = s.Get("mode");
  Require(mode_text == "per-user" || mode_text == "per-link", ErrorCode::kInvalidArgument,
          "mode must be per-user or per-link");
  const SubsampleMode mode =
      mode_text == "per-user" ? SubsampleMode::kPerUser : SubsampleMode::kPerLink;
  const SanGraph sub = SubsampleAttributes(g, s.GetDouble("keep"), Seed(c), mode);
  SaveSanDir(c.out_dir / "subsampled", sub, ProvenanceLines(c));

  const std::string& metric = s.Get("metric");
  MeasureOptions options = MeasureOptionsFrom(c);
  options.groups = {GroupOf(metric)};
  const MetricReport a = Measure(g, options);
  const MetricReport b = Measure(sub, options);
  Json body{{"metric", metric}};
  std::ostringstream csv;
  csv << "series,degree,value\n";
  if (a.curves.contains(metric)) {
    const auto& ca = a.curves.at(metric);
    const auto& cb = b.curves.at(metric);
    std::map<double, double> lookup(cb.begin(), cb.end());
    double worst = 0;
    for (const auto& [x, y] : ca) {
      if (auto it = lookup.find(x); it != lookup.end()) worst = std::max(worst, std::abs(y - it->second));
    }
    Json ja = Json::array(), jb = Json::array();
    for (const auto& [x, y] : ca) {
      ja.push_back({x, y});
      csv << "original," << Num(x) << ',' << Num(y) << '\n';
    }
    for (const auto& [x, y] : cb) {
      jb.push_back({x, y});
      csv << "subsampled," << Num(x) << ',' << Num(y) << '\n';
    }
    body["original"] = ja;
    body["subsampled"] = jb;
    body["max_abs_difference_at_shared_degrees"] = worst;
  } else {
    Require(a.scalars.contains(metric), ErrorCode::kInvalidArgument,
            "metric '" + metric + "' is not produced by group " + GroupOf(metric));
    const auto va = a.scalars.at(metric);
    const auto vb = b.scalars.at(metric);
    body["original"] = Nullable(va);
    body["subsampled"] = Nullable(vb);
    csv << "original,," << (va ? Num(*va) : "") << '\n';
    csv << "subsampled,," << (vb ? Num(*vb) : "") << '\n';
  }
  body["attribute_links"] = {{"original", g.attribute_link_count()},
                             {"subsampled", sub.attribute_link_count()}};
  WriteJson(c, "subsample.json", body);
  WriteCsv(c, "subsample.csv", csv.str());
  *c.out << "attribute_links " << g.attribute_link_count() << " -> "
         << sub.attribute_link_count() << '\n';
  return 0;
}

std::vector<KeySpec> WithMeasureKeys(std::vector<KeySpec> keys) {
  keys.insert(keys.end(), kMeasureKeys.begin(), kMeasureKeys.end());
  return keys;
}

std::vector<KeySpec> GenerateKeys() {
  const GenParams d;
  std::vector<KeySpec> keys;
  for (const std::string& line : d.ToConfigLines()) {
    const auto eq = line.find('=');
    const std::string k = line.substr(0, eq);
    if (k == "seed") continue;
    keys.push_back({k, line.substr(eq + 1), "generator parameter " + k});
  }
  keys.push_back({"model", "san", "san (attribute-augmented model) or zhel (baseline)"});
  keys.push_back({"checkpoints", "", "comma-separated steps at which snapshots are written"});
  return keys;
}

}  // namespace

const std::vector<Command>& Commands() {
  static const std::vector<Command> commands{
      {"generate", "grow a synthetic social-attribute network", GenerateKeys(), RunGenerate},
      {"measure", "compute structural metrics of a graph",
       WithMeasureKeys({{"graph", "", "directory holding social.tsv and attributes.tsv"}}),
       RunMeasure},
      {"evolve", "metrics and fitted parameters over a snapshot series",
       WithMeasureKeys({{"snapshots", "", "directory of snapshot-<index>/ subdirectories"},
                        {"fit_degrees", "social_out,social_in,attr_of_social,social_of_attr",
                         "degree kinds fitted with a discrete lognormal"}}),
       RunEvolve},
      {"fit", "fit lognormal and power-law models to a degree sample",
       {{"graph", "", "graph directory"},
        {"degree", "social_out", "social_out, social_in, attr_of_social or social_of_attr"},
        {"sample", "", "file of whitespace-separated integers, used instead of --graph"},
        {"range", "full", "full or tail"},
        {"min_tail", "50", "smallest power-law tail"},
        {"significance", "0.1", "p-value below which a family is preferred"}},
       RunFit},
      {"likelihood", "score attachment and closure models against an event log",
       {{"events", "", "event log TSV"},
        {"variant", "lapa", "attachment family for the grid: lapa, papa, pa or uniform"},
        {"alphas", "0,0.5,1,1.5,2", "indegree exponents"},
        {"betas", "", "attribute weights; empty picks the variant's default range"},
        {"closure_fc", "1", "fc used to score RR-SAN"}},
       RunLikelihood},
      {"apps", "sybil admission and anonymity sweeps",
       {{"graph", "", "graph directory"},
        {"model_graph", "", "second graph for a fidelity comparison"},
        {"app", "sybil", "sybil or anonymity"},
        {"sweep", "0,10,20,50,100,200", "compromised node counts"},
        {"w", "10", "random-route length"},
        {"degree_bound", "100", "degree bound of the view"},
        {"trials", "10", "Monte Carlo trials per point"},
        {"route_mode", "false", "count escaping random routes instead of g_e * w"},
        {"walk_length", "5", "circuit length"},
        {"circuits", "10000", "circuits per trial"}},
       RunApps},
      {"subsample", "compare a metric on a graph and an attribute-subsampled copy",
       WithMeasureKeys({{"graph", "", "graph directory"},
                        {"keep", "0.5", "probability of keeping attributes"},
                        {"mode", "per-user", "per-user or per-link"},
                        {"metric", "clustering.attribute_by_degree", "metric to compare"}}),
       RunSubsample},
  };
  return commands;
}

}  // namespace sanet::cli
