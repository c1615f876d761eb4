#include "linfiso/linfiso.h"

#include <exception>
#include <new>
#include <string>

#include "linfiso/bounds.hpp"
#include "linfiso/crosscheck.hpp"
#include "linfiso/decider.hpp"
#include "linfiso/error.hpp"
#include "linfiso/instance.hpp"
#include "linfiso/projection.hpp"
#include "report.hpp"

struct linfiso_subspace {
  linfiso::SubspaceSpec spec;
};

struct linfiso_report {
  std::string text;
  std::string json;
};

namespace {

thread_local std::string last_error;

linfiso_status status_for(linfiso::ErrorCode code) {
  using linfiso::ErrorCode;
  switch (code) {
    case ErrorCode::parse: return LINFISO_ERR_PARSE;
    case ErrorCode::invalid_basis:
    case ErrorCode::wrong_codimension: return LINFISO_ERR_INVALID_BASIS;
    case ErrorCode::dimension:
    case ErrorCode::bounds: return LINFISO_ERR_DIMENSION;
    case ErrorCode::inadmissible_set:
    case ErrorCode::singular: return LINFISO_ERR_INADMISSIBLE_SET;
    case ErrorCode::usage: return LINFISO_ERR_USAGE;
    case ErrorCode::model:
    case ErrorCode::contract:
    case ErrorCode::internal: return LINFISO_ERR_INTERNAL;
  }
  return LINFISO_ERR_INTERNAL;
}

template <class Body>
linfiso_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return LINFISO_OK;
  } catch (const linfiso::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return LINFISO_ERR_INTERNAL;
}

linfiso_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return LINFISO_ERR_NULL_ARGUMENT;
}

linfiso_report* make_report(const linfiso::report::Rendered& r) {
  return new linfiso_report{r.text, r.json.dump(2)};
}

}  // namespace

extern "C" {

const char* linfiso_version(void) { return "0.1.0"; }

const char* linfiso_status_name(linfiso_status status) {
  switch (status) {
    case LINFISO_OK: return "ok";
    case LINFISO_ERR_NULL_ARGUMENT: return "null-argument";
    case LINFISO_ERR_PARSE: return "parse";
    case LINFISO_ERR_INVALID_BASIS: return "invalid-basis";
    case LINFISO_ERR_DIMENSION: return "dimension";
    case LINFISO_ERR_INADMISSIBLE_SET: return "inadmissible-set";
    case LINFISO_ERR_USAGE: return "usage";
    case LINFISO_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* linfiso_last_error(void) { return last_error.c_str(); }

linfiso_status linfiso_subspace_parse(const char* text, linfiso_subspace** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto spec = linfiso::parse_instance(text).to_spec();
    *out = new linfiso_subspace{std::move(spec)};
  });
}

linfiso_status linfiso_subspace_load(const char* path, linfiso_subspace** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto spec = linfiso::load_instance(path).to_spec();
    *out = new linfiso_subspace{std::move(spec)};
  });
}

void linfiso_subspace_free(linfiso_subspace* subspace) { delete subspace; }

size_t linfiso_subspace_ambient(const linfiso_subspace* subspace) {
  return subspace ? subspace->spec.ambient() : 0;
}

size_t linfiso_subspace_codim(const linfiso_subspace* subspace) {
  return subspace ? subspace->spec.codim() : 0;
}

linfiso_status linfiso_subspace_serialize(const linfiso_subspace* subspace, linfiso_report** out) {
  if (!subspace) return null_argument("subspace");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const std::string text = linfiso::serialize_instance(linfiso::instance_from_spec(subspace->spec));
    *out = new linfiso_report{text, nlohmann::json{{"instance", text}}.dump(2)};
  });
}

linfiso_status linfiso_decide(const linfiso_subspace* subspace, linfiso_mode mode, int* verdict,
                              linfiso_report** out) {
  if (!subspace) return null_argument("subspace");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto m = mode == LINFISO_MODE_GENERAL ? linfiso::DecideMode::general
                                                : linfiso::DecideMode::automatic;
    const auto report = linfiso::decide_isometric(subspace->spec, m);
    if (verdict) *verdict = report.verdict ? 1 : 0;
    *out = make_report(linfiso::report::render_decision(subspace->spec, report));
  });
}

linfiso_status linfiso_bounds(const linfiso_subspace* subspace, int per_set, linfiso_report** out) {
  if (!subspace) return null_argument("subspace");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto report = linfiso::best_upper_bound(subspace->spec, per_set != 0);
    report.lower = linfiso::projection_constant(subspace->spec).lambda;
    if (*report.lower > report.best_upper)
      throw linfiso::Error(linfiso::ErrorCode::internal, "projection constant exceeds distance bound");
    *out = make_report(linfiso::report::render_bounds(report));
  });
}

linfiso_status linfiso_projconst(const linfiso_subspace* subspace, int emit_projection,
                                 linfiso_report** out) {
  if (!subspace) return null_argument("subspace");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto result = linfiso::projection_constant(subspace->spec);
    const bool valid = linfiso::lp::verify_certificate(result.problem, result.certificate);
    *out = make_report(linfiso::report::render_projection(result, valid, emit_projection != 0));
  });
}

void linfiso_crosscheck_defaults(linfiso_crosscheck_options* options) {
  if (!options) return;
  const linfiso::CrossCheckOptions d;
  *options = {d.seed, d.count, d.max_n, d.max_m, d.entries.range,
              d.entries.rational_entries ? 1 : 0, d.jobs};
}

linfiso_status linfiso_crosscheck(const linfiso_crosscheck_options* options, size_t* disagreements,
                                  linfiso_report** out) {
  if (!options) return null_argument("options");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    linfiso::CrossCheckOptions o;
    o.seed = options->seed;
    o.count = options->count;
    o.max_n = options->max_n;
    o.max_m = options->max_m;
    o.entries = {options->entry_range, options->rational_entries != 0};
    o.jobs = options->jobs;
    const auto summary = linfiso::run_crosscheck(o);
    if (disagreements) *disagreements = summary.disagreements.size();
    *out = make_report(linfiso::report::render_crosscheck(summary));
  });
}

void linfiso_gen_defaults(linfiso_gen_options* options) {
  if (!options) return;
  const linfiso::GenOptions d;
  *options = {d.seed, d.dim, d.codim, d.entries.range, d.entries.rational_entries ? 1 : 0,
              LINFISO_BASIS_ANNIHILATOR};
}

linfiso_status linfiso_generate(const linfiso_gen_options* options, linfiso_report** out) {
  if (!options) return null_argument("options");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    linfiso::GenOptions o;
    o.seed = options->seed;
    o.dim = options->n;
    o.codim = options->m;
    o.entries = {options->entry_range, options->rational_entries != 0};
    o.kind = options->kind == LINFISO_BASIS_SPANNING ? linfiso::BasisKind::spanning
                                                     : linfiso::BasisKind::annihilator;
    const std::string text = linfiso::serialize_instance(linfiso::generate_instance(o));
    *out = new linfiso_report{text, nlohmann::json{{"instance", text}}.dump(2)};
  });
}

const char* linfiso_report_text(const linfiso_report* report) {
  return report ? report->text.c_str() : "";
}

const char* linfiso_report_json(const linfiso_report* report) {
  return report ? report->json.c_str() : "";
}

void linfiso_report_free(linfiso_report* report) { delete report; }

}  // extern "C"
