#include "lopp/pipeline.hpp"

#include <filesystem>
#include <iostream>
#include <json.hpp>

namespace lopp {

namespace {

using nlohmann::json;

std::string hex_u64(std::uint64_t x) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[x & 0xf];
    x >>= 4;
  }
  return s;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

enum class Stage { LimitSet, FindDomain, Audit, Full };

std::string artifact(const RunConfig& cfg, const char* name) {
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

PipelineResult run_stages(const RunConfig& cfg, Stage last,
                          bool write_artifacts) {
  PipelineResult res;
  const QuadraticSpace space(cfg.n);
  const Frame frame = Frame::standard(space);
  const std::uint64_t hash = config_hash(cfg);

  try {
    SchottkyGroup group =
        schottky(frame, resolve_generators(cfg), cfg.boundary_samples, cfg.tol);
    if (cfg.scale != 1.0) group = scale_group(group, cfg.scale);
    res.group = std::move(group);
  } catch (const PingPongFailure& e) {
    res.exit_code = kExitPingPong;
    res.message = e.what();
    return res;
  }

  res.sample = limit_sample(frame, *res.group, cfg.depth, cfg.tol);
  if (write_artifacts) {
    write_file(artifact(cfg, "limit_set.csv"), limit_set_csv(*res.sample));
    if (cfg.n == 3) {
      write_file(artifact(cfg, "limit_set_2d.csv"),
                 limit_set_2d_csv(frame, *res.sample));
      write_file(artifact(cfg, "limit_set.svg"),
                 limit_set_svg(frame, *res.sample));
    }
  }
  res.message = "limit set: " + std::to_string(res.sample->points.size()) +
                " points from " + std::to_string(res.sample->words_considered) +
                " words";
  if (last == Stage::LimitSet) return res;

  res.thickening = thickening_in_chart(frame, *res.sample, cfg.tol);
  if (write_artifacts)
    write_file(artifact(cfg, "thickening.json"),
               thickening_json(*res.thickening, res.sample->group_id, hash));
  try {
    res.point = find_domain_point(frame, *res.thickening);
  } catch (const SearchFailed& e) {
    res.exit_code = kExitSearch;
    res.message = e.what();
    return res;
  }
  if (write_artifacts)
    write_file(artifact(cfg, "domain_point.json"),
               domain_point_json(*res.point, hash));
  res.message =
      "domain point margin: " + format_double(res.point->margin);
  if (last == Stage::FindDomain) return res;

  res.audit = properness_audit(frame, *res.group, res.point->vprime,
                               res.point->margin / 4.0, cfg.depth);
  if (write_artifacts)
    write_file(artifact(cfg, "audit.json"),
               audit_json(*res.audit, res.point->margin, cfg.tol, hash));
  if (!res.audit->stabilized) {
    res.exit_code = kExitAudit;
    res.message = "audit: returner counts still growing at depth " +
                  std::to_string(cfg.depth);
    return res;
  }
  res.message = "audit stabilized; cumulative returners " +
                std::to_string(res.audit->cumulative.back());
  return res;
}

}  // namespace

PipelineResult run_pipeline(const RunConfig& cfg, bool write_artifacts) {
  return run_stages(cfg, Stage::Full, write_artifacts);
}

std::string lemma_report_json(const LemmaReport& report,
                              std::uint64_t cfg_hash) {
  json j;
  j["schema"] = "lemma_report/1";
  j["config_hash"] = hex_u64(cfg_hash);
  j["n"] = report.n;
  j["seed"] = report.seed;
  j["pass"] = report.pass();
  json results = json::array();
  for (const auto& r : report.results) {
    json rj;
    rj["name"] = r.name;
    rj["max_error"] = r.max_error;
    rj["tolerance"] = r.tolerance;
    rj["samples"] = r.samples;
    rj["pass"] = r.pass();
    results.push_back(rj);
  }
  j["results"] = results;
  return j.dump(2) + "\n";
}

std::string thickening_json(const NullHyperplaneSet& hset,
                            const std::string& group_id,
                            std::uint64_t cfg_hash) {
  json j;
  j["schema"] = "thickening/1";
  j["config_hash"] = hex_u64(cfg_hash);
  j["group_id"] = group_id;
  j["n"] = hset.n;
  json items = json::array();
  for (const auto& item : hset.items) {
    json ij;
    ij["direction"] = vector_to_json(item.direction);
    ij["offset"] = item.offset;
    items.push_back(ij);
  }
  j["items"] = items;
  return j.dump(2) + "\n";
}

std::string domain_point_json(const DomainPoint& point,
                              std::uint64_t cfg_hash) {
  json j;
  j["schema"] = "domain_point/1";
  j["config_hash"] = hex_u64(cfg_hash);
  j["vprime"] = vector_to_json(point.vprime);
  j["margin"] = point.margin;
  return j.dump(2) + "\n";
}

std::string audit_json(const AuditReport& report, double domain_margin,
                       const Tolerances& tol, std::uint64_t cfg_hash) {
  json j;
  j["schema"] = "audit/1";
  j["config_hash"] = hex_u64(cfg_hash);
  j["center"] = vector_to_json(report.center);
  j["domain_margin"] = domain_margin;
  j["radius"] = report.radius;
  j["depth"] = report.depth;
  j["returners_by_length"] = report.returners_by_length;
  j["cumulative"] = report.cumulative;
  j["stabilized"] = report.stabilized;
  json tj;
  tj["null_vector"] = tol.null_vector;
  tj["incidence"] = tol.incidence;
  tj["parallel"] = tol.parallel;
  tj["orthogonality"] = tol.orthogonality;
  tj["spectral_gap"] = tol.spectral_gap;
  tj["dedup"] = tol.dedup;
  tj["guard_factor"] = tol.guard_factor;
  j["tolerances"] = tj;
  return j.dump(2) + "\n";
}

int cmd_check_lemmas(const RunConfig& cfg) {
  const LemmaReport report =
      lemma_suite(cfg.n, cfg.lemma_samples, cfg.seed, cfg.gram_override);
  write_file((std::filesystem::path(cfg.out_dir) / "lemma_report.json").string(),
             lemma_report_json(report, config_hash(cfg)));
  for (const auto& r : report.results)
    std::cout << "lemma " << r.name << ": max_error=" << format_double(r.max_error)
              << " tolerance=" << format_double(r.tolerance) << " samples="
              << r.samples << (r.pass() ? " PASS" : " FAIL") << "\n";
  if (const LemmaResult* fail = report.first_failure()) {
    std::cout << "FAIL: " << fail->name << "\n";
    return kExitLemmaFailure;
  }
  std::cout << "all lemmas pass\n";
  return kExitOk;
}

namespace {

int finish(const PipelineResult& res) {
  std::cout << res.message << "\n";
  return res.exit_code;
}

}  // namespace

int cmd_limit_set(const RunConfig& cfg) {
  return finish(run_stages(cfg, Stage::LimitSet, true));
}

int cmd_find_domain(const RunConfig& cfg) {
  return finish(run_stages(cfg, Stage::FindDomain, true));
}

int cmd_audit(const RunConfig& cfg) {
  return finish(run_stages(cfg, Stage::Audit, true));
}

int cmd_pipeline(const RunConfig& cfg) {
  return finish(run_stages(cfg, Stage::Full, true));
}

}  // namespace lopp
