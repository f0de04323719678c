#include "lozenge/lozenge.h"

#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "lozenge/cache.hpp"
#include "lozenge/cocylinder.hpp"
#include "lozenge/commands.hpp"
#include "lozenge/config.hpp"
#include "lozenge/errors.hpp"

struct lz_session {
  lozenge::Config config;
  std::optional<lozenge::DiskCache> disk;
  std::optional<lozenge::ElementCache> elements;  // serves lz_enumeration_count
};

struct lz_element {
  lozenge::MobiusElement value;
};

struct lz_result {
  int exit_code = 0;
  std::string report;
  std::optional<std::string> svg;
  std::optional<std::string> csv;
};

namespace {

thread_local std::string last_error;

lz_status to_status(lozenge::ErrorCode code) {
  using lozenge::ErrorCode;
  switch (code) {
    case ErrorCode::Ok: return LZ_OK;
    case ErrorCode::NotHyperbolic: return LZ_NOT_HYPERBOLIC;
    case ErrorCode::DepthTooLarge: return LZ_DEPTH_TOO_LARGE;
    case ErrorCode::DegeneratePair: return LZ_DEGENERATE_PAIR;
    case ErrorCode::DegeneratePoints: return LZ_DEGENERATE_POINTS;
    case ErrorCode::AmbiguousGeometry: return LZ_AMBIGUOUS_GEOMETRY;
    case ErrorCode::MixedSignProfile: return LZ_MIXED_SIGN_PROFILE;
    case ErrorCode::InconsistentVerdicts: return LZ_INCONSISTENT_VERDICTS;
    case ErrorCode::ParseError: return LZ_PARSE_ERROR;
    case ErrorCode::ValidationError: return LZ_VALIDATION_ERROR;
    case ErrorCode::UnknownGenerator: return LZ_UNKNOWN_GENERATOR;
    case ErrorCode::InvalidArgument: return LZ_INVALID_ARGUMENT;
    case ErrorCode::IoError: return LZ_IO_ERROR;
  }
  return LZ_INTERNAL;
}

lz_status fail_with(lz_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
lz_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return LZ_OK;
  } catch (const lozenge::Error& e) {
    return fail_with(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail_with(LZ_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_with(LZ_INTERNAL, e.what());
  }
}

#define LZ_REQUIRE(cond, what) \
  do {                         \
    if (!(cond)) return fail_with(LZ_INVALID_ARGUMENT, what); \
  } while (0)

lozenge::ElementCache::Provider provider_of(lz_session* s) {
  if (!s->disk) return {};
  return s->disk->provider();
}

lz_status make_session(lozenge::Config config, lz_session** out) {
  auto session = std::make_unique<lz_session>();
  session->config = std::move(config);
  if (auto dir = lozenge::cache_dir_from_env()) session->disk.emplace(*dir);
  *out = session.release();
  return LZ_OK;
}

}  // namespace

extern "C" {

const char* lz_last_error(void) { return last_error.c_str(); }

const char* lz_status_name(lz_status status) {
  switch (status) {
    case LZ_OK: return "Ok";
    case LZ_INTERNAL: return "Internal";
    default: break;
  }
  if (status > LZ_OK && status <= LZ_IO_ERROR) return lozenge::error_name(static_cast<lozenge::ErrorCode>(status));
  return "Unknown";
}

lz_status lz_session_create(const char* group_name, lz_session** out) {
  LZ_REQUIRE(group_name && out, "null argument");
  lozenge::Config config;
  lz_status st = guarded([&] { config.group = lozenge::builtin_group(group_name); });
  if (st != LZ_OK) return st;
  return make_session(std::move(config), out);
}

lz_status lz_session_from_config_file(const char* path, lz_session** out) {
  LZ_REQUIRE(path && out, "null argument");
  lozenge::Config config;
  lz_status st = guarded([&] { config = lozenge::load_config(path); });
  if (st != LZ_OK) return st;
  return make_session(std::move(config), out);
}

lz_status lz_session_from_config_text(const char* json, lz_session** out) {
  LZ_REQUIRE(json && out, "null argument");
  lozenge::Config config;
  lz_status st = guarded([&] { config = lozenge::parse_config(json); });
  if (st != LZ_OK) return st;
  return make_session(std::move(config), out);
}

void lz_session_destroy(lz_session* session) { delete session; }

lz_status lz_session_set_group(lz_session* session, const char* group_name) {
  LZ_REQUIRE(session && group_name, "null argument");
  return guarded([&] {
    session->config.group = lozenge::builtin_group(group_name);
    session->elements.reset();
  });
}

lz_status lz_session_set_depths(lz_session* session, int lozenge, int linking, int oracle) {
  LZ_REQUIRE(session, "null session");
  if (lozenge >= 0) session->config.depths.lozenge = lozenge;
  if (linking >= 0) session->config.depths.linking = linking;
  if (oracle >= 0) session->config.depths.oracle = oracle;
  return LZ_OK;
}

lz_status lz_session_set_partner_range(lz_session* session, int range) {
  LZ_REQUIRE(session, "null session");
  LZ_REQUIRE(range >= 1, "partner range must be at least 1");
  session->config.partner_range = range;
  return LZ_OK;
}

lz_status lz_session_set_tolerance(lz_session* session, double eps) {
  LZ_REQUIRE(session, "null session");
  LZ_REQUIRE(eps > 0.0 && eps <= 1e-3, "tolerance must lie in (0, 1e-3]");
  session->config.tol.eps = eps;
  session->elements.reset();
  return LZ_OK;
}

lz_status lz_session_set_cache_dir(lz_session* session, const char* dir) {
  LZ_REQUIRE(session, "null session");
  session->elements.reset();
  if (dir == nullptr || *dir == '\0')
    session->disk.reset();
  else
    session->disk.emplace(dir);
  return LZ_OK;
}

lz_status lz_session_group_name(const lz_session* session, const char** out) {
  LZ_REQUIRE(session && out, "null argument");
  *out = session->config.group.name.c_str();
  return LZ_OK;
}

lz_status lz_session_rank(const lz_session* session, int* out) {
  LZ_REQUIRE(session && out, "null argument");
  *out = session->config.group.rank();
  return LZ_OK;
}

lz_status lz_run(lz_session* session, const char* command, const char* word, int n, int render, int timings,
                 lz_result** out) {
  LZ_REQUIRE(session && command && out, "null argument");
  return guarded([&] {
    lozenge::CommandRequest request;
    request.command = command;
    request.word = word ? word : "";
    request.n = n;
    request.render = render != 0;
    request.timings = timings != 0;
    auto outcome = lozenge::run_command(request, session->config, provider_of(session));
    auto result = std::make_unique<lz_result>();
    result->exit_code = outcome.exit_code;
    result->report = std::move(outcome.report);
    result->svg = std::move(outcome.svg);
    result->csv = std::move(outcome.csv);
    *out = result.release();
  });
}

int lz_result_exit_code(const lz_result* result) { return result ? result->exit_code : -1; }
const char* lz_result_report(const lz_result* result) { return result ? result->report.c_str() : nullptr; }
const char* lz_result_svg(const lz_result* result) {
  return result && result->svg ? result->svg->c_str() : nullptr;
}
const char* lz_result_csv(const lz_result* result) {
  return result && result->csv ? result->csv->c_str() : nullptr;
}
void lz_result_destroy(lz_result* result) { delete result; }

lz_status lz_element_from_word(const lz_session* session, const char* word, lz_element** out) {
  LZ_REQUIRE(session && word && out, "null argument");
  return guarded([&] {
    auto e = std::make_unique<lz_element>();
    e->value = lozenge::element_from_word(session->config.group,
                                          lozenge::parse_word(word, session->config.group.rank()));
    *out = e.release();
  });
}

void lz_element_destroy(lz_element* element) { delete element; }

lz_status lz_element_matrix(const lz_element* element, double out[4]) {
  LZ_REQUIRE(element && out, "null argument");
  const auto& m = element->value.matrix();
  for (int i = 0; i < 4; ++i) out[i] = m[static_cast<std::size_t>(i)];
  return LZ_OK;
}

lz_status lz_element_word(const lz_element* element, char* buffer, size_t capacity) {
  LZ_REQUIRE(element && buffer, "null argument");
  const std::string w = lozenge::format_word(element->value.word());
  if (w.size() + 1 > capacity) return fail_with(LZ_INVALID_ARGUMENT, "buffer too small");
  std::memcpy(buffer, w.c_str(), w.size() + 1);
  return LZ_OK;
}

lz_status lz_element_classify(const lz_session* session, const lz_element* element, lz_kind* out) {
  LZ_REQUIRE(session && element && out, "null argument");
  return guarded([&] {
    switch (lozenge::classify(element->value, session->config.tol).kind) {
      case lozenge::Kind::Identity: *out = LZ_IDENTITY; break;
      case lozenge::Kind::Hyperbolic: *out = LZ_HYPERBOLIC; break;
      case lozenge::Kind::Parabolic: *out = LZ_PARABOLIC; break;
      case lozenge::Kind::Elliptic: *out = LZ_ELLIPTIC; break;
    }
  });
}

lz_status lz_element_axis(const lz_session* session, const lz_element* element, double* attracting,
                          double* repelling) {
  LZ_REQUIRE(session && element && attracting && repelling, "null argument");
  return guarded([&] {
    const auto axis = lozenge::axis_endpoints(element->value, session->config.tol);
    *attracting = axis.attracting.angle();
    *repelling = axis.repelling.angle();
  });
}

lz_status lz_element_orbit(const lz_session* session, const lz_element* element, double* u, double* s) {
  LZ_REQUIRE(session && element && u && s, "null argument");
  return guarded([&] {
    const auto orbit = lozenge::orbit_of_element(element->value, session->config.tol);
    *u = orbit.point.u;
    *s = orbit.point.s;
  });
}

lz_status lz_eta_power(double u, double s, int n, double* u_out, double* s_out) {
  LZ_REQUIRE(u_out && s_out, "null argument");
  return guarded([&] {
    const auto p = lozenge::eta_power(lozenge::make_orbit_point(u, s), n);
    *u_out = p.u;
    *s_out = p.s;
  });
}

lz_status lz_linked(const double p[2], const double q[2], double eps, int* out) {
  LZ_REQUIRE(p && q && out, "null argument");
  LZ_REQUIRE(eps > 0.0, "tolerance must be positive");
  return guarded([&] {
    lozenge::Tolerance tol;
    tol.eps = eps;
    const lozenge::PointPair a{lozenge::CirclePoint(p[0]), lozenge::CirclePoint(p[1])};
    const lozenge::PointPair b{lozenge::CirclePoint(q[0]), lozenge::CirclePoint(q[1])};
    *out = lozenge::linked(a, b, tol) ? 1 : 0;
  });
}

lz_status lz_enumeration_count(lz_session* session, int depth, uint64_t* out) {
  LZ_REQUIRE(session && out, "null argument");
  LZ_REQUIRE(depth >= 0, "depth must be non-negative");
  return guarded([&] {
    if (!session->elements)
      session->elements.emplace(session->config.group,
                                lozenge::EnumerationOptions{session->config.cap, session->config.tol},
                                provider_of(session));
    *out = session->elements->elements(depth).size();
  });
}

}  // extern "C"
