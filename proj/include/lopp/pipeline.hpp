#pragma once

#include <optional>
#include <string>

#include "lopp/config.hpp"
#include "lopp/domain.hpp"
#include "lopp/io.hpp"
#include "lopp/lemmas.hpp"

namespace lopp {

// Process exit codes shared by the library entry points and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitLemmaFailure = 1;
inline constexpr int kExitPingPong = 2;
inline constexpr int kExitSearch = 3;
inline constexpr int kExitAudit = 4;

struct PipelineResult {
  int exit_code = kExitOk;
  std::string message;
  std::optional<SchottkyGroup> group;
  std::optional<LimitSample> sample;
  std::optional<NullHyperplaneSet> thickening;
  std::optional<DomainPoint> point;
  std::optional<AuditReport> audit;
};

// Full run: certify group, sample the limit set at cfg.depth, build the
// thickening, search for a positive-margin point, audit the ball of radius
// margin/4 around it. Stops at the first failing stage with the matching
// exit code. With write_artifacts set, emits limit_set.csv, thickening.json,
// domain_point.json, audit.json (and the 2D CSV + SVG when n = 3) under
// cfg.out_dir, as far as the run got.
PipelineResult run_pipeline(const RunConfig& cfg, bool write_artifacts);

std::string lemma_report_json(const LemmaReport& report,
                              std::uint64_t cfg_hash);
std::string thickening_json(const NullHyperplaneSet& hset,
                            const std::string& group_id,
                            std::uint64_t cfg_hash);
std::string domain_point_json(const DomainPoint& point, std::uint64_t cfg_hash);
std::string audit_json(const AuditReport& report, double domain_margin,
                       const Tolerances& tol, std::uint64_t cfg_hash);

// CLI entry points; each writes its artifacts under cfg.out_dir and prints a
// one-line summary per artifact to stdout.
int cmd_check_lemmas(const RunConfig& cfg);
int cmd_limit_set(const RunConfig& cfg);
int cmd_find_domain(const RunConfig& cfg);
int cmd_audit(const RunConfig& cfg);
int cmd_pipeline(const RunConfig& cfg);

}  // namespace lopp
