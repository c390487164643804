// rrl: construct, verify and certify the real resultant polynomials.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rrl/certify.hpp"
#include "rrl/checks.hpp"
#include "rrl/errors.hpp"
#include "rrl/invariants.hpp"
#include "rrl/poly_io.hpp"
#include "rrl/rho.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace rrl;

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  const char* env = std::getenv("RRL_SEED");
  if (!env || !*env) return 42;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("RRL_SEED is not an unsigned integer: '") + env + "'");
  }
}

json header(const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

json claim(const std::string& anchor, const std::string& statement, bool pass, json details = json::object()) {
  json c;
  c["anchor"] = anchor;
  c["statement"] = statement;
  c["pass"] = pass;
  if (!details.empty()) c["details"] = std::move(details);
  return c;
}

bool all_pass(const json& claims) {
  for (const auto& c : claims) {
    if (!c.at("pass").get<bool>()) return false;
  }
  return true;
}

json point_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(out, text);
  }
}

// ---- construct ----------------------------------------------------------

struct ConstructArgs {
  std::string bundle;
  std::string out;
  std::string meta;
};

int cmd_construct(const ConstructArgs& a) {
  const BundleSpec spec = BundleSpec::parse(a.bundle);
  const RealChart chart = build_chart(spec);
  const RhoPolynomial rho = build_rho(chart);
  json j = header("construct");
  j["bundle"] = spec.to_string();
  j["flavor"] = std::string(flavor_name(spec.flavor));
  j["real_dim"] = chart.real_dim();
  j["variables"] = rho.poly.var_count();
  j["degree"] = *rho.poly.degree();
  j["homogeneous"] = rho.poly.is_homogeneous();
  j["term_count"] = rho.poly.term_count();
  j["normalization_sign"] = rho.normalization_sign;
  j["removed_content"] = to_string(rho.removed_content);
  j["probe"] = point_json(rho.probe);
  json claims = json::array();
  claims.push_back(claim("claim.degree", "rho is homogeneous of degree m + n",
                         rho.poly.is_homogeneous() && *rho.poly.degree() == spec.total_degree()));
  if (spec.m == 1 && spec.n == 1) {
    MultiPoly squares(4);
    for (std::size_t i = 0; i < 4; ++i) {
      const MultiPoly x = MultiPoly::variable(4, i);
      squares = squares + x * x;
    }
    claims.push_back(claim("example.four_squares", "rho of O(1)+O(1) is the sum of four squares of coordinates",
                           rho.poly == squares));
  }
  if (spec.m == 2 && spec.n == 2 && spec.flavor == Flavor::Even) {
    const MultiPoly ref = quartic_reference_form(chart);
    const Rational scale = ref.content();
    claims.push_back(claim("example.quartic_form", "rho of O(2)+O(2) is a positive multiple of the reference quartic",
                           ref == scale * rho.poly, {{"scale", to_string(scale)}}));
  }
  if (spec.m == 3 && spec.n == 3) {
    claims.push_back(claim("example.term_count", "rho of O(3)+O(3) has 224 terms in 8 variables of degree 6",
                           rho.poly.term_count() == 224 && rho.poly.var_count() == 8 && *rho.poly.degree() == 6,
                           {{"term_count", rho.poly.term_count()}}));
  }
  j["claims"] = claims;
  if (!a.out.empty()) write_file_atomic(a.out, format_poly(rho.poly));
  const std::string meta = !a.meta.empty() ? a.meta : (a.out.empty() ? std::string() : a.out + ".json");
  emit(j, meta);
  if (!meta.empty()) {
    std::cout << spec.to_string() << ": " << rho.poly.term_count() << " terms, degree " << *rho.poly.degree()
              << ", " << rho.poly.var_count() << " variables\n";
  }
  return all_pass(claims) ? kExitOk : kExitClaimFailed;
}

// ---- zeros --------------------------------------------------------------

struct ZerosArgs {
  std::string bundle;
  std::size_t count = 100;
  std::size_t per_z0 = 4;
  std::uint64_t seed = 0;
  std::string z0;
  std::string out;
};

ComplexScalar parse_complex(const std::string& text) {
  std::istringstream in(text);
  std::string re, im;
  if (!(in >> re >> im)) throw UsageError("z0 must be given as '<re> <im>'");
  return {parse_rational(re, false), parse_rational(im, false)};
}

int cmd_zeros(const ZerosArgs& a) {
  const BundleSpec spec = BundleSpec::parse(a.bundle);
  const RealChart chart = build_chart(spec);
  const RhoPolynomial rho = build_rho(chart);
  std::vector<RationalVector> points;
  if (!a.z0.empty()) {
    for (const auto& v : exact_zero_family(chart, parse_complex(a.z0))) {
      points.push_back(to_rational(primitive_integer(v)));
    }
  } else {
    if (a.per_z0 == 0) throw UsageError("--per-z0 must be positive");
    Sampler sampler(a.seed);
    const std::size_t z0_count = (a.count + a.per_z0 - 1) / a.per_z0;
    for (auto& z : sample_zeros(chart, z0_count, a.per_z0, sampler)) {
      if (points.size() == a.count) break;
      points.push_back(std::move(z.point));
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (evaluate(rho.poly, points[i]) != 0) {
      throw ConsistencyError("generated point " + std::to_string(i) + " is not a zero");
    }
  }
  const std::string text = format_points(points, chart.real_dim());
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(a.out, text);
    std::cout << points.size() << " exact zeros of " << spec.to_string() << " written\n";
  }
  return kExitOk;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string bundle;
  std::string poly;
  std::size_t samples = 100000;
  std::size_t z0_count = 25;
  std::size_t per_z0 = 4;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  const BundleSpec spec = BundleSpec::parse(a.bundle);
  const RealChart chart = build_chart(spec);
  const RhoPolynomial rho = build_rho(chart);
  json j = header("verify");
  j["bundle"] = spec.to_string();
  j["seed"] = a.seed;
  json claims = json::array();
  if (!a.poly.empty()) {
    const NamedPoly given = parse_poly(read_file(a.poly));
    claims.push_back(claim("artifact.poly_matches", "supplied polynomial equals the constructed rho",
                           given.poly == rho.poly));
  }
  claims.push_back(claim("claim.degree", "rho is homogeneous of degree m + n",
                         rho.poly.is_homogeneous() && *rho.poly.degree() == spec.total_degree()));

  Sampler sampler(a.seed);
  const NonnegativityReport nn = sample_nonnegativity(rho.poly, a.samples, sampler);
  claims.push_back(claim("claim.nonnegativity", "rho is nonnegative at every seeded rational sample",
                         nn.negatives == 0,
                         {{"samples", nn.samples},
                          {"negatives", nn.negatives},
                          {"min_value", to_string(nn.min_value)},
                          {"argmin", point_json(nn.argmin)}}));

  if (spec.flavor == Flavor::OddDiag && spec.m == 3) {
    const BracketInvariants inv = bracket_invariants(chart);
    claims.push_back(claim("identity.closed_form", "closed form in r, s, u, v equals rho exactly",
                           rho_closed_form(inv) == rho.poly));
    claims.push_back(claim("identity.bracket_rs", "r s equals |u|^2 + |v|^2 exactly",
                           inv.r * inv.s == inv.u.norm_sq() + inv.v.norm_sq()));
    claims.push_back(claim("identity.rational_form", "r rho equals (r^2 - |v|^2)^2 + |r conj(u) + u conj(v)|^2",
                           inv.r * rho.poly == rho_times_r_form(inv)));
  }

  Sampler zsampler(a.seed);
  const auto zeros = sample_zeros(chart, a.z0_count, a.per_z0, zsampler);
  j["zero_count"] = zeros.size();
  if (zeros.empty()) {
    j["zero_note"] = "zero families are trivial; rho vanishes only at the origin";
  } else {
    const HessianProbe probe(rho.poly);
    std::size_t vanish = 0, psd = 0, minors5 = 0, minors4 = 0, locus = 0;
    std::map<std::size_t, std::size_t> hist;
    json exceptions = json::array();
    std::optional<BracketInvariants> inv;
    if (spec.flavor == Flavor::OddDiag && spec.m == 3) inv = bracket_invariants(chart);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      const ZeroDiagnostics d = probe.analyze(zeros[i].point);
      vanish += d.value == 0;
      psd += d.hessian_psd;
      minors5 += d.all_minors5_vanish;
      minors4 += d.some_minor4_nonzero;
      ++hist[d.hessian_rank];
      if (d.hessian_rank != 4) {
        exceptions.push_back({{"index", i}, {"rank", d.hessian_rank}});
      }
      if (inv && evaluate(zero_locus_expression(*inv), zeros[i].point) == ComplexScalar{}) ++locus;
    }
    json h = json::object();
    for (const auto& [rank, count] : hist) h[std::to_string(rank)] = count;
    const std::size_t n = zeros.size();
    claims.push_back(claim("claim.zero_vanishing", "rho vanishes exactly on every sampled zero-family point",
                           vanish == n, {{"points", n}, {"vanishing", vanish}}));
    if (inv) {
      claims.push_back(claim("claim.zero_locus", "r conj(u) + u conj(v) vanishes at every sampled zero",
                             locus == n, {{"points", n}, {"vanishing", locus}}));
    }
    claims.push_back(claim("claim.hessian_psd", "the Hessian is PSD at every sampled zero", psd == n,
                           {{"psd", psd}}));
    claims.push_back(claim("claim.hessian_rank", "the Hessian has rank 4 at the sampled zeros", hist[4] == n,
                           {{"histogram", h}, {"exceptions", exceptions.size()}}));
    claims.push_back(claim("claim.hessian_minors", "all 5x5 Hessian minors vanish and some 4x4 minor does not",
                           minors5 == n && minors4 == n,
                           {{"all_5x5_vanish", minors5}, {"some_4x4_nonzero", minors4}}));
    j["rank_exceptions"] = exceptions;
  }
  j["claims"] = claims;
  emit(j, a.out);
  return all_pass(claims) ? kExitOk : kExitClaimFailed;
}

// ---- sos ----------------------------------------------------------------

struct SosArgs {
  std::string poly;
  std::string mode = "auto";
  std::string zeros;
  double tol = 1e-8;
  std::size_t max_iter = 50000;
  std::uint64_t seed = 0;
  std::string expect;
  std::string out;
};

// Exponent vector as "e0 e1 ...", the term layout of the polynomial format.
std::string monomial_text(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.var_count(); ++i) {
    if (i) s += ' ';
    s += std::to_string(m[i]);
  }
  return s;
}

int cmd_sos(const SosArgs& a) {
  if (!a.expect.empty() && a.expect != "sos" && a.expect != "not-sos") {
    throw UsageError("--expect must be 'sos' or 'not-sos'");
  }
  const NamedPoly input = parse_poly(read_file(a.poly));
  std::vector<RationalVector> zeros;
  if (!a.zeros.empty()) zeros = parse_points(read_file(a.zeros));
  CertifyOptions opts;
  opts.mode = parse_mode(a.mode);
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  opts.seed = a.seed;
  const Certificate cert = certify(input.poly, opts, zeros);
  const VerificationReport ver = verify_certificate(input.poly, cert, zeros);

  json j = header("sos");
  j["mode"] = mode_name(cert.mode);
  j["kind"] = cert.kind_name();
  j["branch"] = cert.branch;
  j["basis_size"] = cert.basis_size;
  j["zero_count"] = cert.zero_count;
  if (cert.face_dim) j["face_dim"] = *cert.face_dim;
  if (cert.span) {
    j["span_check"] = {{"face_dim", cert.span->face_dim},
                       {"products", cert.span->products},
                       {"rank_mod_p", cert.span->rank_mod_p},
                       {"reason", cert.span->reason}};
  }
  if (cert.sdp_residual) {
    j["sdp"] = {{"iterations", cert.sdp_iterations}, {"residual", *cert.sdp_residual}};
  }
  j["trail"] = cert.trail;
  if (const auto* w = std::get_if<SosWitness>(&cert.kind)) {
    json sq = json::array();
    for (const auto& s : w->squares) {
      sq.push_back({{"weight", to_string(s.weight)}, {"poly", format_poly(s.poly, input.names)}});
    }
    j["witness"] = {{"exact", w->exact},
                    {"square_count", w->squares.size()},
                    {"residual", to_string(w->residual)},
                    {"residual_float", w->residual.get_d()},
                    {"squares", sq}};
  } else if (const auto* e = std::get_if<NonSosExact>(&cert.kind)) {
    const GramProblem prob = gram_system(input.poly);
    json rows = json::array();
    for (std::size_t r : e->witness.rows) rows.push_back(monomial_text(prob.constraints[r].gamma));
    json w = {{"prime", e->witness.prime}, {"minor_rows", rows}};
    if (e->witness.functional) {
      json f = json::array();
      for (const auto& [idx, q] : *e->witness.functional) {
        f.push_back({{"monomial", monomial_text(prob.constraints[idx].gamma)}, {"weight", to_string(q)}});
      }
      w["functional"] = f;
    }
    j["evidence"] = {{"zero_count", e->zero_count}, {"face_dim", e->face_dim}, {"witness", w}};
  } else if (const auto* n = std::get_if<NonSosNumeric>(&cert.kind)) {
    j["evidence"] = {{"margin", n->margin},
                     {"separator_min_eigenvalue", n->separator_min_eigenvalue},
                     {"linear", n->linear},
                     {"face_dim", n->face_dim}};
  } else {
    j["reason"] = std::get<Undecided>(cert.kind).reason;
  }
  json v = {{"ok", ver.ok}, {"detail", ver.detail}};
  if (ver.residual) v["residual"] = to_string(*ver.residual);
  if (ver.relative_residual) v["relative_residual"] = *ver.relative_residual;
  if (ver.margin) v["margin"] = *ver.margin;
  j["verification"] = v;

  json claims = json::array();
  claims.push_back(claim("certificate.verified", "certificate re-checked independently", ver.ok));
  if (a.expect == "sos") {
    claims.push_back(claim("claim.sos", "polynomial is a sum of squares",
                           ver.ok && std::holds_alternative<SosWitness>(cert.kind)));
  } else if (a.expect == "not-sos") {
    const bool nonsos = std::holds_alternative<NonSosExact>(cert.kind) ||
                        std::holds_alternative<NonSosNumeric>(cert.kind);
    claims.push_back(claim("claim.not_sos", "polynomial is not a sum of squares", ver.ok && nonsos,
                           {{"branch", cert.branch}}));
  }
  j["claims"] = claims;
  emit(j, a.out);
  if (std::holds_alternative<Undecided>(cert.kind) && a.expect.empty()) return kExitOk;
  return all_pass(claims) ? kExitOk : kExitClaimFailed;
}

// ---- invariants ---------------------------------------------------------

json invariants_record(long d, long g, long r) {
  const CurveBundleParams p{d, g, r};
  const CohomologyClass ch = chern_character_sym2(p);
  const CohomologyClass c1 = first_chern_class(ch);
  const Rational c2 = second_chern_number(ch, g);
  const Rational c2_closed = second_chern_number_closed_form(p);
  const SosObstruction ob = sos_obstruction(d, g);
  json j;
  j["d"] = d;
  j["g"] = g;
  j["r"] = r;
  j["ch_rank"] = to_string(ch.c0);
  j["c1"] = {{"x", to_string(c1.cx)}, {"delta", to_string(c1.cdelta)}};
  j["c2_number"] = to_string(c2);
  j["c2_closed_form"] = to_string(c2_closed);
  j["degree_v2"] = degree_v2(d, g);
  j["obstruction"] = {{"bound", to_string(ob.bound)},
                      {"deg_v2", ob.deg_v2},
                      {"obstructed", ob.obstructed},
                      {"hypothesis", ob.hypothesis}};
  json claims = json::array();
  claims.push_back(claim("identity.c1", "c1 of the symmetric square is d x - r delta / 2",
                         c1.cx == Rational(d) && c1.cdelta == -Rational(r) / 2));
  claims.push_back(claim("identity.c2", "c2 number from the character equals the closed form", c2 == c2_closed));
  if (r == 2) {
    claims.push_back(claim("identity.degree_v2", "at rank 2 the c2 number equals the degree of V2",
                           c2 == Rational(degree_v2(d, g))));
  }
  claims.push_back(claim("claim.obstruction_implication", "d(d - 6) >= 4(g - 1) forces the degree obstruction",
                         !ob.hypothesis || ob.obstructed));
  j["claims"] = claims;
  return j;
}

struct InvariantsArgs {
  long d = 6;
  long g = 0;
  long r = 2;
  bool grid = false;
  std::string out;
};

int cmd_invariants(const InvariantsArgs& a) {
  json j = header("invariants");
  bool ok = true;
  if (a.grid) {
    json rows = json::array();
    for (long d = 2; d <= 12; ++d) {
      for (long g = 0; g <= 9; ++g) {
        json rec = invariants_record(d, g, a.r);
        ok = ok && all_pass(rec["claims"]);
        rows.push_back(std::move(rec));
      }
    }
    j["grid"] = rows;
    j["claims"] = json::array({claim("table.invariants", "every grid row satisfies its identities", ok)});
  } else {
    if (a.r < 1) throw UsageError("rank must be positive");
    if (a.g < 0) throw UsageError("genus must be nonnegative");
    json rec = invariants_record(a.d, a.g, a.r);
    ok = all_pass(rec["claims"]);
    for (auto& [k, v] : rec.items()) j[k] = v;
  }
  emit(j, a.out);
  return ok ? kExitOk : kExitClaimFailed;
}

// ---- report -------------------------------------------------------------

struct ReportArgs {
  std::vector<std::string> inputs;
  std::string out;
  std::string text;
};

std::string input_label(const json& j) {
  std::string label = j.value("command", std::string("unknown"));
  if (j.contains("bundle")) label += " " + j["bundle"].get<std::string>();
  if (j.contains("d")) {
    label += " d=" + std::to_string(j["d"].get<long>()) + " g=" + std::to_string(j["g"].get<long>()) +
             " r=" + std::to_string(j["r"].get<long>());
  }
  if (j.contains("grid")) label += " grid";
  return label;
}

int cmd_report(const ReportArgs& a) {
  if (a.inputs.empty()) throw UsageError("report needs at least one --input");
  json j = header("report");
  json sections = json::array();
  std::ostringstream txt;
  bool ok = true;
  for (const auto& path : a.inputs) {
    json in;
    try {
      in = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
      throw UsageError("'" + path + "' is not valid JSON");
    }
    if (!in.contains("schema_version") || !in.contains("claims")) {
      throw UsageError("'" + path + "' is not an rrl output");
    }
    const std::string label = input_label(in);
    json sec = {{"source", path}, {"label", label}, {"claims", in["claims"]}};
    txt << "[" << label << "]\n";
    if (in.value("command", "") == "sos") {
      sec["kind"] = in["kind"];
      sec["branch"] = in["branch"];
      txt << "  certificate: " << in["kind"].get<std::string>() << " via " << in["branch"].get<std::string>();
      if (in.contains("witness")) {
        txt << ", " << in["witness"]["square_count"].get<std::size_t>() << " squares, residual "
            << in["witness"]["residual"].get<std::string>();
      }
      txt << "\n";
    }
    for (const auto& c : in["claims"]) {
      const bool pass = c["pass"].get<bool>();
      ok = ok && pass;
      txt << "  " << (pass ? "PASS" : "FAIL") << "  " << c["anchor"].get<std::string>() << ": "
          << c["statement"].get<std::string>() << "\n";
    }
    sections.push_back(std::move(sec));
  }
  j["sections"] = sections;
  j["all_pass"] = ok;
  txt << (ok ? "all claims pass\n" : "some claims fail\n");
  emit(j, a.out);
  if (!a.text.empty()) {
    write_file_atomic(a.text, txt.str());
  } else if (!a.out.empty()) {
    std::cout << txt.str();
  }
  return ok ? kExitOk : kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real resultant polynomials of rank-2 bundles: construction, checks and SOS certificates"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build rho for a bundle and write it with metadata");
  construct->add_option("--bundle", ca.bundle, "bundle, e.g. O(3)+O(3)")->required();
  construct->add_option("--out", ca.out, "polynomial output file");
  construct->add_option("--meta", ca.meta, "metadata JSON (default: <out>.json)");

  VerifyArgs va;
  va.seed = seed;
  auto* verify = app.add_subcommand("verify", "nonnegativity, identities and zero-set checks");
  verify->add_option("--bundle", va.bundle, "bundle, e.g. O(3)+O(3)")->required();
  verify->add_option("--poly", va.poly, "constructed polynomial to compare against");
  verify->add_option("--samples", va.samples, "nonnegativity samples")->capture_default_str();
  verify->add_option("--z0-count", va.z0_count, "Gaussian-rational roots for zero sampling")->capture_default_str();
  verify->add_option("--per-z0", va.per_z0, "zeros per root")->capture_default_str();
  verify->add_option("--seed", va.seed, "seed (default: RRL_SEED or 42)");
  verify->add_option("--out", va.out, "report JSON");

  SosArgs sa;
  sa.seed = seed;
  auto* sos = app.add_subcommand("sos", "certify SOS or non-SOS");
  sos->add_option("--poly", sa.poly, "polynomial file")->required();
  sos->add_option("--mode", sa.mode, "auto | exact-only | sdp-only")->capture_default_str();
  sos->add_option("--zeros", sa.zeros, "exact zero list");
  sos->add_option("--tol", sa.tol, "SDP tolerance")->capture_default_str();
  sos->add_option("--max-iter", sa.max_iter, "SDP iteration cap")->capture_default_str();
  sos->add_option("--seed", sa.seed, "seed (default: RRL_SEED or 42)");
  sos->add_option("--expect", sa.expect, "sos | not-sos; exit 1 when the verdict differs");
  sos->add_option("--out", sa.out, "certificate JSON");

  InvariantsArgs ia;
  auto* inv = app.add_subcommand("invariants", "Chern numbers of the symmetric square and the SOS obstruction");
  inv->add_option("--d", ia.d, "degree")->capture_default_str();
  inv->add_option("--g", ia.g, "genus")->capture_default_str();
  inv->add_option("--r", ia.r, "rank")->capture_default_str();
  inv->add_flag("--grid", ia.grid, "table over d in 2..12, g in 0..9");
  inv->add_option("--out", ia.out, "JSON output");

  ZerosArgs za;
  za.seed = seed;
  auto* zeros = app.add_subcommand("zeros", "exact zeros of rho");
  zeros->add_option("--bundle", za.bundle, "bundle, e.g. O(3)+O(3)")->required();
  zeros->add_option("--count", za.count, "number of points")->capture_default_str();
  zeros->add_option("--per-z0", za.per_z0, "points per root")->capture_default_str();
  zeros->add_option("--seed", za.seed, "seed (default: RRL_SEED or 42)");
  zeros->add_option("--z0", za.z0, "emit the exact family basis at the root '<re> <im>'");
  zeros->add_option("--out", za.out, "zero-list output file");

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "aggregate JSON outputs into one summary");
  report->add_option("--input", ra.inputs, "JSON output of another command")->required();
  report->add_option("--out", ra.out, "aggregate JSON");
  report->add_option("--text", ra.text, "plain-text summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(ca);
    if (*verify) return cmd_verify(va);
    if (*sos) return cmd_sos(sa);
    if (*inv) return cmd_invariants(ia);
    if (*zeros) return cmd_zeros(za);
    if (*report) return cmd_report(ra);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitClaimFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
