#include "lozenge/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "lozenge/annulus.hpp"
#include "lozenge/cocylinder.hpp"
#include "lozenge/oracle.hpp"
#include "lozenge/render.hpp"
#include "lozenge/report.hpp"

namespace lozenge {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Ok: return kExitOk;
    case ErrorCode::DegeneratePoints:
    case ErrorCode::AmbiguousGeometry:
    case ErrorCode::DegeneratePair:
    case ErrorCode::MixedSignProfile: return kExitInconclusive;
    case ErrorCode::InconsistentVerdicts: return kExitViolation;
    case ErrorCode::NotHyperbolic:
    case ErrorCode::DepthTooLarge:
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::UnknownGenerator:
    case ErrorCode::InvalidArgument:
    case ErrorCode::IoError: return kExitInput;
  }
  return kExitInternal;
}

const char* const* command_names() {
  static const char* const names[] = {"info", "classify", "chain", "annulus", "cocyl", "render", nullptr};
  return names;
}

namespace {

struct Context {
  const CommandRequest& request;
  const Config& config;
  ElementCache cache;
  Report report;
  Scene scene;
  bool has_scene = false;
  int exit_code = kExitOk;

  Context(const CommandRequest& r, const Config& c, const ElementCache::Provider& provider)
      : request(r), config(c), cache(c.group, EnumerationOptions{c.cap, c.tol}, provider), report(r.command) {}

  int chain_length() const { return request.n > 0 ? request.n : config.chain_length; }

  void violation(const std::string& what) {
    report.add("violation", what);
    exit_code = std::max(exit_code, static_cast<int>(kExitViolation));
  }
};

void add_element(Report& r, const std::string& prefix, const MobiusElement& h) {
  r.add(prefix + ".word", format_word(h.word()));
  r.add(prefix + ".matrix", format_matrix(h.matrix()));
}

std::string depth_stamp(int depth) { return "none up to depth " + std::to_string(depth); }

void add_lozenge_witness(Report& r, const std::string& prefix, const SimplicityCertificate& cert) {
  if (!cert.witness) {
    r.add(prefix, depth_stamp(cert.depth));
    return;
  }
  const auto& w = *cert.witness;
  r.add(prefix, "non-simple at depth " + std::to_string(cert.depth));
  add_element(r, prefix + ".witness", w.element);
  r.add(prefix + ".witness.offset", w.offset);
  r.add(prefix + ".witness.corner", w.corner_index);
  r.add(prefix + ".witness.lozenge", w.lozenge_index);
  r.add(prefix + ".witness.image", format_point(w.image));
}

void add_header(Context& ctx) {
  Report& r = ctx.report;
  r.add("group", ctx.config.group.name);
  r.add("fingerprint", fingerprint(ctx.config.group));
  r.add("tolerance", ctx.config.tol.eps);
}

MobiusElement subject(Context& ctx) {
  const MobiusElement g = element_from_word(ctx.config.group, parse_word(ctx.request.word, ctx.config.group.rank()));
  Report& r = ctx.report;
  add_element(r, "input", g);
  const auto cls = classify(g, ctx.config.tol);
  r.add("input.trace", g.trace());
  r.add("input.kind", kind_name(cls.kind));
  if (cls.marginal) r.add("input.marginal", true);
  const auto axis = axis_endpoints(g, ctx.config.tol);  // NotHyperbolic for the rest
  r.add("input.axis.attracting", axis.attracting.angle());
  r.add("input.axis.repelling", axis.repelling.angle());
  return g;
}

void add_depths(Context& ctx) {
  ctx.report.add("depth.lozenge", ctx.config.depths.lozenge);
  ctx.report.add("depth.linking", ctx.config.depths.linking);
  ctx.report.add("depth.oracle", ctx.config.depths.oracle);
}

void warm(Context& ctx, int depth) {
  ctx.report.add("enumeration.count", static_cast<std::uint64_t>(ctx.cache.elements(depth).size()));
}

void witness_points(Scene& scene, const SimplicityCertificate& cert, const std::string& tag) {
  if (!cert.witness) return;
  const auto& w = *cert.witness;
  scene.witnesses.push_back({tag + " " + format_word(w.element.word()) + " k=" + std::to_string(w.offset), w.image});
}

void cmd_info(Context& ctx) {
  Report& r = ctx.report;
  const GroupSpec& g = ctx.config.group;
  r.add("rank", g.rank());
  r.add("model", g.model);
  for (int i = 0; i < g.rank(); ++i) {
    const auto& gen = g.generators[static_cast<std::size_t>(i)];
    const std::string key = "generator." + format_word({i + 1});
    r.add(key + ".matrix", format_matrix(gen.matrix()));
    r.add(key + ".trace", gen.trace());
    r.add(key + ".kind", kind_name(classify(gen, ctx.config.tol).kind));
  }
  add_depths(ctx);
  const int depth = ctx.config.depths.lozenge;
  r.add("enumeration.depth", depth);
  r.add("enumeration.projected", projected_count(g.rank(), depth));
  if (projected_count(g.rank(), depth) <= ctx.config.cap)
    warm(ctx, depth);
  else
    r.add("enumeration.count", "above cap");
}

void cmd_chain(Context& ctx) {
  const MobiusElement g = subject(ctx);
  Report& r = ctx.report;
  const int n = ctx.chain_length();
  const auto orbit = orbit_of_element(g, ctx.config.tol);
  const Chain chain = chain_between(orbit.point, n);
  r.add("chain.length", n);
  for (int i = chain.lo(); i <= chain.hi(); ++i) r.add("chain.corner." + std::to_string(i), format_point(chain.corner(i)));
  bool stabilized = true;
  for (int i = chain.lo(); i < chain.hi(); ++i) {
    const Lozenge l = chain.lozenge(i);
    const std::string key = "chain.lozenge." + std::to_string(i);
    r.add(key + ".u", "(" + format_real(l.u_range().lo) + ", " + format_real(l.u_range().hi) + ")");
    r.add(key + ".s", "(" + format_real(l.s_range().lo) + ", " + format_real(l.s_range().hi) + ")");
    stabilized = stabilized && check_stabilized(orbit.stabilizer, l, ctx.config.tol);
  }
  const bool disjoint = check_side_disjoint(chain);
  r.add("chain.side_disjoint", disjoint);
  r.add("chain.stabilized", stabilized);
  if (!disjoint) ctx.violation("lozenges of the chain share a side");
  if (!stabilized) ctx.violation("the stabilizer lift does not fix every corner");

  add_depths(ctx);
  warm(ctx, ctx.config.depths.lozenge);
  const auto cert = simplicity_check(chain, ctx.cache.elements(ctx.config.depths.lozenge), ctx.config.depths.lozenge,
                                     ctx.config.tol);
  add_lozenge_witness(r, "verdict.chain", cert);
  ctx.scene = chain_scene("chain of " + std::to_string(n) + " lozenges for " + format_word(g.word()), chain);
  witness_points(ctx.scene, cert, "witness");
  ctx.has_scene = true;
}

void cocyl_common(Context& ctx, const MobiusElement& g, CocylReport& out) {
  Report& r = ctx.report;
  add_depths(ctx);
  r.add("partner_range", ctx.config.partner_range);
  const auto& d = ctx.config.depths;
  warm(ctx, std::max({d.lozenge, d.linking, d.oracle}));
  out = cocyl_report(g, ctx.cache, d, ctx.config.partner_range);
  r.add("orbit", format_point(out.base));
  add_lozenge_witness(r, "verdict.lozenge", out.simple_verdict);
  if (out.linking.witness) {
    r.add("verdict.linking", "linked at depth " + std::to_string(out.linking.depth));
    add_element(r, "verdict.linking.witness", out.linking.witness->element);
    r.add("verdict.linking.pair", format_pair(out.linking.witness->pair));
    r.add("verdict.linking.image", format_pair(out.linking.witness->image_pair));
  } else {
    r.add("verdict.linking", depth_stamp(out.linking.depth));
  }
  r.add("verdict.oracle", out.oracle.lower_bound >= 1 ? "crossing at depth " + std::to_string(out.oracle.depth)
                                                       : depth_stamp(out.oracle.depth));
  r.add("verdict.oracle.crossing_classes", out.oracle.crossing_classes);
  r.add("verdict.oracle.lower_bound", out.oracle.lower_bound);
  r.add("simple", !out.non_simple());
  std::string partners = "[";
  for (std::size_t i = 0; i < out.partner_indices.size(); ++i)
    partners += (i ? ", " : "") + std::to_string(out.partner_indices[i]);
  r.add("partners", partners + "]");
  for (std::size_t i = 0; i < out.partner_certificates.size(); ++i)
    add_lozenge_witness(r, "partner." + std::to_string(i + 1), out.partner_certificates[i]);
  r.add("trivial_class_evidence", out.trivial_class_evidence());

  const int n = std::max(ctx.chain_length(), ctx.config.partner_range);
  const Chain chain = chain_between(out.base, n);
  ctx.scene = chain_scene("chain of " + std::to_string(n) + " lozenges for " + format_word(g.word()), chain);
  for (std::size_t i = 0; i < out.partner_certificates.size(); ++i)
    witness_points(ctx.scene, out.partner_certificates[i], "n=" + std::to_string(i + 1));
  ctx.has_scene = true;
}

void cmd_classify(Context& ctx) {
  const MobiusElement g = subject(ctx);
  CocylReport out;
  cocyl_common(ctx, g, out);
}

void cmd_cocyl(Context& ctx) {
  const MobiusElement g = subject(ctx);
  CocylReport out;
  cocyl_common(ctx, g, out);
  Report& r = ctx.report;
  const auto shift = cardinality_shift_check(g, ctx.cache, ctx.config.depths.lozenge, ctx.config.partner_range);
  for (std::size_t i = 0; i < shift.partner_sets.size(); ++i) {
    std::string set = "[";
    for (std::size_t j = 0; j < shift.partner_sets[i].size(); ++j)
      set += (j ? ", " : "") + std::to_string(shift.partner_sets[i][j]);
    r.add("shift." + std::to_string(i) + ".partners", set + "]");
  }
  r.add("shift.sets_agree", shift.sets_agree);
  r.add("shift.witnesses_transported", shift.witnesses_transported);
  r.add("shift.ok", shift.ok);
  if (!shift.ok) ctx.violation("partner sets are not carried by the eta shift");

  for (const auto& e : double_class(g, 3, ctx.config.tol)) {
    const std::string key = "double_class." + std::to_string(e.index);
    r.add(key + ".point", format_point(e.point));
    r.add(key + ".pair", format_pair(e.pair));
    r.add(key + ".orbit", e.orbit_label);
    r.add(key + ".reversed", e.reversed);
  }
}

void cmd_annulus(Context& ctx) {
  const MobiusElement g = subject(ctx);
  Report& r = ctx.report;
  add_depths(ctx);
  const int depth = ctx.config.depths.lozenge;
  warm(ctx, depth);
  AnnulusOptions options;
  options.tol = ctx.config.tol;
  options.samples = ctx.config.render.samples;
  const auto search = crossing_elements(g, ctx.cache.elements(depth), depth, options);
  r.add("interval", "[" + format_real(search.interval.lo) + ", " + format_real(search.interval.hi) + "]");
  r.add("candidates", static_cast<std::uint64_t>(search.candidates.size()));
  r.add("arcs", static_cast<std::uint64_t>(search.arcs.size()));
  auto add_arc = [&](std::size_t i, const CrossingArc& a) {
    const std::string key = "arc." + std::to_string(i);
    add_element(r, key, a.element);
    r.add(key + ".offset", a.offset);
    r.add(key + ".source", "[" + format_real(a.source.lo) + ", " + format_real(a.source.hi) + "]");
    r.add(key + ".target", "[" + format_real(a.target.lo) + ", " + format_real(a.target.hi) + "]");
    r.add(key + ".class", arc_class_name(a.classification));
    r.add(key + ".sign", sign_profile_name(a.sign_profile));
    r.add(key + ".gap", a.min_gap);
    r.add(key + ".coherent", a.coherent);
    if (!std::isnan(a.vertical)) r.add(key + ".vertical", a.vertical);
  };
  const bool claim = verify_claim(search.arcs);
  r.add("claim", claim);
  if (!claim) {
    for (std::size_t i = 0; i < search.arcs.size(); ++i) add_arc(i, search.arcs[i]);
    ctx.violation("an element maps the leaf interval strictly into itself");
    return;
  }
  try {
    const int samples = options.samples > 0 ? options.samples : default_samples(depth);
    const auto cert = build_trivialization(search.interval, search.arcs, samples, ctx.config.tol);
    for (std::size_t i = 0; i < cert.arcs.size(); ++i) add_arc(i, cert.arcs[i]);
    r.add("certificate.schedule_ok", cert.schedule_ok);
    r.add("certificate.min_gap", cert.min_gap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MixedSignProfile) throw;
    for (std::size_t i = 0; i < search.arcs.size(); ++i) add_arc(i, search.arcs[i]);
    r.add("certificate", "refused");
    throw;
  }
}

void cmd_render(Context& ctx) {
  cmd_chain(ctx);
  ctx.has_scene = true;
}

}  // namespace

CommandResult run_command(const CommandRequest& request, const Config& config, const ElementCache::Provider& provider) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx(request, config, provider);
  add_header(ctx);
  if (!request.word.empty()) ctx.report.add("word", request.word);
  try {
    const std::string& c = request.command;
    if (c != "info" && request.word.empty()) fail(ErrorCode::InvalidArgument, "command '" + c + "' needs a word");
    if (c != "info") validate_depths(config);
    if (c == "info")
      cmd_info(ctx);
    else if (c == "classify")
      cmd_classify(ctx);
    else if (c == "chain")
      cmd_chain(ctx);
    else if (c == "annulus")
      cmd_annulus(ctx);
    else if (c == "cocyl")
      cmd_cocyl(ctx);
    else if (c == "render")
      cmd_render(ctx);
    else
      fail(ErrorCode::InvalidArgument, "unknown command '" + c + "'");
  } catch (const Error& e) {
    ctx.report.add("error.code", error_name(e.code()));
    ctx.report.add("error.message", e.what());
    ctx.exit_code = std::max(ctx.exit_code, exit_code_for(e.code()));
  } catch (const std::exception& e) {
    ctx.report.add("error.code", "Internal");
    ctx.report.add("error.message", e.what());
    ctx.exit_code = kExitInternal;
  }
  ctx.report.add("status", ctx.exit_code == kExitOk ? "ok" : "failed");
  ctx.report.add("exit", ctx.exit_code);
  if (request.timings) {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    ctx.report.add("timing.ms", ms);
  }

  CommandResult result;
  result.exit_code = ctx.exit_code;
  result.report = ctx.report.str();
  if (ctx.has_scene && (request.render || request.command == "render")) {
    result.svg = render_svg(ctx.scene, config.render);
    result.csv = render_csv(ctx.scene);
  }
  return result;
}

}  // namespace lozenge
