#include "hmw/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "hmw/carousel.hpp"
#include "hmw/cone.hpp"
#include "hmw/errors.hpp"
#include "hmw/hasse_lattice.hpp"
#include "hmw/reduction.hpp"
#include "hmw/strata.hpp"

namespace hmw::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_fraction_string(x));
  return out;
}

Json to_json(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json profile_json(const SplittingProfile& profile) { return Json::parse(profile_to_json(profile)); }

Json labels(const Carousel& c, const std::vector<std::size_t>& taus) {
  Json out = Json::array();
  for (auto t : taus) out.push_back(to_string(c.at(t)));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

std::string join(const std::vector<Integer>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += xs[i].get_str();
  }
  return out;
}

Json certificate_json(const cone::MembershipCertificate& cert) {
  Json out;
  out["member"] = cert.member;
  out["kind"] = cone::to_string(cert.kind);
  out["witness"] = cert.witness ? Json(*cert.witness) : Json(nullptr);
  out["slacks"] = to_json(cert.values);
  return out;
}

Json subset_json(const cone::SubsetCertificate& cert) {
  Json out;
  out["holds"] = cert.holds;
  if (cert.holds) {
    out["kind"] = "ray_slack_table";
    out["witness"] = nullptr;
    Json table = Json::array();
    for (const auto& row : cert.slacks) table.push_back(to_json(row));
    out["slacks"] = table;
  } else {
    out["kind"] = "violating_ray";
    const auto [ray, row] = *cert.violation;
    out["witness"] = {{"ray", to_json(cert.rays_of_a.rays()[ray])},
                      {"row", to_json(cert.rows_of_b.normals()[row])},
                      {"slack", to_json(cert.violation_slack)}};
    out["slacks"] = Json::array();
  }
  return out;
}

Json cone_json(const cone::HRepCone& h, const cone::VRepCone& v) {
  return {{"hrep", to_json(h.normals())}, {"vrep", to_json(v.rays())}};
}

// ---------------------------------------------------------------------------
// Argument helpers

struct ProfileArgs {
  std::string profile;
  std::string minpoly;
  std::uint64_t p = 0;
  std::uint64_t seed = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void add_profile_options(CLI::App* cmd, ProfileArgs& args) {
  auto* prof = cmd->add_option("--profile", args.profile, "Profile document, inline JSON or @file");
  auto* mp = cmd->add_option("--minpoly", args.minpoly, "Monic minimal polynomial as [c0, c1, ..., 1]");
  auto* p = cmd->add_option("--p", args.p, "Prime for --minpoly");
  prof->excludes(mp);
  mp->needs(p);
  p->needs(mp);
  cmd->add_option("--seed", args.seed, "Seed for equal-degree factorization (default 0)");
}

std::string read_document(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1), std::ios::binary);
  if (!in) throw UsageError("cannot read profile file " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntVector parse_int_array(const std::string& text, const char* what) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw UsageError(std::string(what) + ": expected a JSON integer array");
  }
  if (!doc.is_array()) throw UsageError(std::string(what) + ": expected a JSON integer array");
  IntVector out;
  for (const auto& v : doc) {
    if (v.is_number_unsigned())
      out.emplace_back(std::to_string(v.get<std::uint64_t>()));
    else if (v.is_number_integer())
      out.emplace_back(std::to_string(v.get<std::int64_t>()));
    else if (v.is_string()) {
      Integer x;
      if (x.set_str(v.get<std::string>(), 10) != 0) throw UsageError(std::string(what) + ": malformed integer");
      out.push_back(x);
    } else
      throw UsageError(std::string(what) + ": entries must be integers");
  }
  return out;
}

struct ResolvedProfile {
  SplittingProfile profile;
  std::optional<MinPolySpec> minpoly;
};

ResolvedProfile resolve_profile(const ProfileArgs& args) {
  if (!args.minpoly.empty()) {
    MinPolySpec spec{parse_int_array(args.minpoly, "--minpoly"), args.p};
    return {profile_from_minpoly(spec, args.seed), spec};
  }
  if (args.profile.empty()) throw UsageError("one of --profile or --minpoly is required");
  return {parse_profile(read_document(args.profile), args.seed), std::nullopt};
}

Weight parse_weight(const std::string& text, const Carousel& c) {
  IntVector v = parse_int_array(text, "--weight");
  if (v.size() != c.size())
    throw DimensionMismatch("--weight: expected " + std::to_string(c.size()) + " entries in canonical order");
  return Weight(std::move(v));
}

std::size_t parse_tau(const std::string& text, const Carousel& c) {
  for (std::size_t t = 0; t < c.size(); ++t)
    if (to_string(c.at(t)) == text) return t;
  std::size_t pos = 0;
  unsigned long idx = 0;
  try {
    idx = std::stoul(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("--tau: expected an index or a label P<l>:b<beta>:i<i>");
  }
  if (pos != text.size()) throw UsageError("--tau: expected an index or a label P<l>:b<beta>:i<i>");
  c.at(idx);
  return idx;
}

Json command_echo(const std::string& name, const std::optional<SplittingProfile>& profile, Json options) {
  Json out;
  out["name"] = name;
  if (profile) out["profile"] = profile_json(*profile);
  out["options"] = std::move(options);
  return out;
}

std::string render_report(const Json& command, const Json& payload, int exit_status) {
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = command;
  report["payload"] = payload;
  report["exit_status"] = exit_status;
  return report.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Subcommands

RunResult cmd_profile(const ProfileArgs& args) {
  const ResolvedProfile rp = resolve_profile(args);
  const Carousel c(rp.profile);
  const HasseLattice lattice(c);
  Json payload;
  payload["profile"] = profile_json(rp.profile);
  payload["d"] = c.size();
  payload["totally_split"] = rp.profile.totally_split();
  Json emb = Json::array();
  for (std::size_t t = 0; t < c.size(); ++t)
    emb.push_back({{"index", t},
                   {"label", to_string(c.at(t))},
                   {"n", to_json(c.n(t))},
                   {"sigma", to_string(c.at(c.sigma(t)))},
                   {"sigma_inv", to_string(c.at(c.sigma_inv(t)))}});
  payload["embeddings"] = emb;
  payload["weight_order"] = labels(c, [&] {
    std::vector<std::size_t> all(c.size());
    for (std::size_t t = 0; t < all.size(); ++t) all[t] = t;
    return all;
  }());
  Json orbits = Json::array();
  for (std::size_t l = 0; l < rp.profile.loci().size(); ++l)
    orbits.push_back(labels(c, c.orbit(c.locus_members(l).front())));
  payload["orbits"] = orbits;
  Json rows = Json::array();
  for (std::size_t r = 0; r < c.size(); ++r) rows.push_back(to_json(lattice.matrix().row(r)));
  payload["hasse_matrix"] = rows;
  payload["hasse_determinant"] = to_json(lattice.determinant());
  payload["expected_abs_determinant"] = to_json(expected_hasse_determinant(rp.profile));
  if (rp.minpoly) {
    const auto fac = factor_mod_p(*rp.minpoly, args.seed);
    Json factors = Json::array();
    for (const auto& fp : fac.factors) {
      Json coeffs = Json::array();
      for (auto x : fp.factor.coeffs()) coeffs.push_back(x);
      factors.push_back({{"coefficients", coeffs}, {"text", fp.factor.to_string()}, {"multiplicity", fp.multiplicity}});
    }
    payload["factorization"] = factors;
    payload["dedekind_p_maximal"] = true;
  }
  Json opts;
  opts["seed"] = args.seed;
  return {render_report(command_echo("profile", rp.profile, opts), payload, kOk), "", kOk};
}

RunResult cmd_cones(const ProfileArgs& args, const std::string& weight_text) {
  const ResolvedProfile rp = resolve_profile(args);
  const Carousel c(rp.profile);
  const HasseLattice lattice(c);
  const auto hmin = cone::min_cone(c);
  const auto hst = cone::std_cone(c);
  const auto vhasse = cone::hasse_cone(c);
  const auto vmin = cone::dd_convert_h_to_v(hmin);
  const auto vst = cone::dd_convert_h_to_v(hst);
  const auto hhasse = cone::dd_convert_v_to_h(vhasse);

  Json payload;
  payload["profile"] = profile_json(rp.profile);
  payload["cones"] = {{"min", cone_json(hmin, vmin)}, {"st", cone_json(hst, vst)}, {"hasse", cone_json(hhasse, vhasse)}};
  const auto min_in_st = cone::cone_subset(vmin, hst);
  const auto st_in_hasse = cone::cone_subset(vst, hhasse);
  payload["chain"] = {{"min_in_st", subset_json(min_in_st)}, {"st_in_hasse", subset_json(st_in_hasse)}};
  const auto split = cone::split_equality_report(c);
  const bool split_agree = split.is_totally_split == split.cones_equal;
  payload["split_equality"] = {
      {"is_totally_split", split.is_totally_split}, {"cones_equal", split.cones_equal}, {"agree", split_agree}};
  bool ok = min_in_st.holds && st_in_hasse.holds && split_agree;

  Json opts = Json::object();
  if (!weight_text.empty()) {
    const Weight k = parse_weight(weight_text, c);
    opts["weight"] = to_json(k.coords());
    const RatVector x = to_rational(k.coords());
    const auto by_rows = cone::contains(hhasse, x);
    const auto by_coords = cone::contains_hasse(lattice, x);
    const bool agree = by_rows.member == by_coords.member;
    ok = ok && agree;
    payload["membership"] = {{"weight", to_json(k.coords())},
                             {"min", certificate_json(cone::contains(hmin, x))},
                             {"st", certificate_json(cone::contains(hst, x))},
                             {"hasse", certificate_json(by_rows)},
                             {"hasse_coordinates", certificate_json(by_coords)},
                             {"routes_agree", agree}};
  }
  const int code = ok ? kOk : kCheckFailed;
  return {render_report(command_echo("cones", rp.profile, opts), payload, code),
          ok ? "" : "internal check failed: cone chain, split criterion or membership routes disagree\n", code};
}

RunResult cmd_reduce(const ProfileArgs& args, const std::string& weight_text, bool enumerate) {
  const ResolvedProfile rp = resolve_profile(args);
  const Carousel c(rp.profile);
  const HasseLattice lattice(c);
  const Weight k = parse_weight(weight_text, c);
  const auto outcome = reduction::greedy_reduce(lattice, k);

  Json payload;
  payload["profile"] = profile_json(rp.profile);
  payload["weight"] = to_json(k.coords());
  payload["hasse_coordinates"] = to_json(lattice.coordinates(k));
  int code = kOk;
  std::string err;
  if (const auto* in = std::get_if<reduction::InMinCone>(&outcome.result)) {
    payload["outcome"] = "InMinCone";
    payload["w"] = to_json(in->decomposition.w().coords());
    payload["a"] = to_json(in->decomposition.a());
    payload["certificate"] = {{"kind", "min_cone_slacks"},
                              {"slacks", to_json(cone::contains(cone::min_cone(c), to_rational(in->decomposition.w().coords())).values)}};
  } else if (const auto* van = std::get_if<reduction::Vanishing>(&outcome.result)) {
    payload["outcome"] = "Vanishing";
    payload["w"] = to_json(van->at.coords());
    payload["a"] = to_json(van->a);
    payload["certificate"] = {{"kind", "negative_hasse_coordinate"},
                              {"tau", to_string(c.at(van->tau))},
                              {"index", van->tau},
                              {"y_tau", to_fraction_string(van->y_tau)}};
  } else {
    const auto& be = std::get<reduction::BudgetExceeded>(outcome.result);
    payload["outcome"] = "BudgetExceeded";
    payload["w"] = to_json(be.at.coords());
    payload["a"] = nullptr;
    payload["certificate"] = {{"kind", "budget"}, {"budget", be.budget}};
    code = kCheckFailed;
    err = "internal check failed: greedy reduction exhausted its step budget\n";
  }
  payload["steps"] = labels(c, outcome.steps);
  if (enumerate) {
    Json all = Json::array();
    for (const auto& dec : reduction::enumerate_min_decompositions(lattice, k))
      all.push_back({{"w", to_json(dec.w().coords())}, {"a", to_json(dec.a())}});
    Json maximal = Json::array();
    for (const auto& dec : reduction::pareto_maximal_decompositions(lattice, k))
      maximal.push_back({{"w", to_json(dec.w().coords())}, {"a", to_json(dec.a())}});
    payload["decompositions"] = all;
    payload["pareto_maximal"] = maximal;
  }
  payload["scope"] = "weight-level statement; says nothing about spaces of forms beyond weights";
  Json opts;
  opts["weight"] = to_json(k.coords());
  opts["enumerate"] = enumerate;
  return {render_report(command_echo("reduce", rp.profile, opts), payload, code), err, code};
}

struct PicardRow {
  std::string t;
  int dimension;
  strata::PicardSummary summary;
  std::string check;
};

RunResult cmd_picard(const ProfileArgs& args, const std::string& stratum, bool closed, bool csv) {
  const ResolvedProfile rp = resolve_profile(args);
  const Carousel c(rp.profile);
  std::vector<strata::StratumLabel> labels_to_run;
  if (!stratum.empty()) {
    auto t = strata::StratumLabel::parse(stratum);
    if (t.ambient() != c.size())
      throw DimensionMismatch("--stratum: expected " + std::to_string(c.size()) + " characters");
    labels_to_run.push_back(t);
  } else {
    if (c.size() > 20) throw UsageError("picard: sweeping all strata needs d <= 20; pass --stratum");
    for (std::uint64_t m = 0; m < (1ULL << c.size()); ++m) labels_to_run.emplace_back(c.size(), m);
  }

  std::vector<PicardRow> rows;
  bool ok = true;
  for (const auto& t : labels_to_run) {
    auto s = closed ? strata::torsion_summary_closed(c, t) : strata::torsion_summary(c, t);
    std::string check = s.checked.empty() ? "n/a" : (s.bound_holds ? "pass" : "fail");
    ok = ok && s.bound_holds;
    rows.push_back({t.to_bitstring(), strata::stratum_dimension(static_cast<int>(c.size()), t), std::move(s), check});
  }
  const int code = ok ? kOk : kCheckFailed;
  const std::string err = ok ? "" : "internal check failed: torsion order does not divide p^(2f) - 1\n";

  if (csv) {
    std::string out = csv_row({"T", "invariant_factors", "torsion_orders", "divisibility"});
    for (const auto& r : rows)
      out += csv_row({r.t, join(r.summary.invariant_factors), join(r.summary.torsion_order), r.check});
    return {out, err, code};
  }
  Json table = Json::array();
  for (const auto& r : rows)
    table.push_back({{"T", r.t},
                     {"dimension", r.dimension},
                     {"invariant_factors", to_json(r.summary.invariant_factors)},
                     {"torsion_orders", to_json(r.summary.torsion_order)},
                     {"group_order", to_json(r.summary.group_order())},
                     {"divisibility", r.check}});
  Json payload;
  payload["profile"] = profile_json(rp.profile);
  payload["locus"] = closed ? "closed" : "open";
  payload["strata_nonempty"] = "true by theorem, not computed";
  payload["rows"] = table;
  Json opts;
  opts["stratum"] = stratum.empty() ? Json(nullptr) : Json(stratum);
  opts["closed"] = closed;
  return {render_report(command_echo("picard", rp.profile, opts), payload, code), err, code};
}

RunResult cmd_bridge(const ProfileArgs& args, const std::string& weight_text, const std::string& tau_text,
                     unsigned r) {
  const ResolvedProfile rp = resolve_profile(args);
  const Carousel c(rp.profile);
  const Weight k = parse_weight(weight_text, c);
  const std::size_t tau0 = parse_tau(tau_text, c);
  const Integer deg = strata::fibre_degree(c, k, tau0, r);
  const auto dirs = reduction::reducible_directions(c, k);
  const bool reducible = std::find(dirs.begin(), dirs.end(), tau0) != dirs.end();
  const bool negative = deg < 0;
  Json payload;
  payload["profile"] = profile_json(rp.profile);
  payload["tau0"] = to_string(c.at(tau0));
  payload["r"] = r;
  payload["fibre_degree"] = to_json(deg);
  payload["negative"] = negative;
  payload["reducible"] = reducible;
  payload["agree"] = negative == reducible;
  const int code = negative == reducible ? kOk : kCheckFailed;
  Json opts;
  opts["weight"] = to_json(k.coords());
  opts["tau"] = tau0;
  opts["r"] = r;
  return {render_report(command_echo("bridge", rp.profile, opts), payload, code),
          code == kOk ? "" : "internal check failed: fibre degree sign disagrees with reducibility\n", code};
}

RunResult cmd_selftest(const SelftestOptions& options, bool csv) {
  const SelftestResult res = selftest(options);
  const int code = res.all_pass ? kOk : kCheckFailed;
  std::string err;
  for (const auto& w : res.warnings) err += "warning: " + w + "\n";
  if (!res.all_pass) err += "selftest: one or more checks failed\n";
  if (csv) {
    std::string out = csv_row({"profile", "check", "pass", "detail"});
    for (const auto& check : res.payload["checks"])
      out += csv_row({check["profile"].dump(), check["check"].get<std::string>(), check["pass"].get<bool>() ? "pass" : "fail",
                      check["detail"].get<std::string>()});
    return {out, err, code};
  }
  Json opts;
  opts["seed"] = options.seed;
  opts["inject_bad_hasse_sign"] = options.inject_bad_hasse_sign;
  opts["empty_panel"] = options.empty_panel;
  return {render_report(command_echo("selftest", std::nullopt, opts), res.payload, code), err, code};
}

// ---------------------------------------------------------------------------
// Selftest checks

std::vector<Weight> weight_box(std::size_t d, long lo, long hi) {
  std::vector<Weight> out;
  IntVector k(d, Integer(lo));
  for (;;) {
    out.emplace_back(k);
    std::size_t pos = d;
    while (pos-- > 0) {
      if (k[pos] < hi) {
        k[pos] += 1;
        break;
      }
      k[pos] = lo;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

struct CheckResult {
  bool pass;
  std::string detail;
};

CheckResult check_determinant(const Carousel& c, bool inject) {
  linalg::IntMatrix m = hasse_matrix(c);
  if (inject) {
    // h_τ0 = −n e_{σ⁻¹τ0} − e_τ0
    m(c.sigma_inv(0), 0) -= 2 * c.n(0);
  }
  Integer det = linalg::bareiss_determinant(m);
  Integer expected = expected_hasse_determinant(c.profile());
  const bool pass = abs(det) == expected;
  return {pass, "|det| = " + Integer(abs(det)).get_str() + ", expected " + expected.get_str()};
}

CheckResult check_chain(const Carousel& c) {
  const bool a = cone::cone_subset(cone::min_cone(c), cone::std_cone(c)).holds;
  const bool b = cone::cone_subset(cone::std_cone(c), cone::hasse_cone(c)).holds;
  return {a && b, std::string("min<=st ") + (a ? "yes" : "no") + ", st<=hasse " + (b ? "yes" : "no")};
}

CheckResult check_split(const Carousel& c) {
  const auto rep = cone::split_equality_report(c);
  return {rep.is_totally_split == rep.cones_equal, std::string("totally_split ") + (rep.is_totally_split ? "yes" : "no") +
                                                       ", cones_equal " + (rep.cones_equal ? "yes" : "no")};
}

CheckResult check_bridge(const Carousel& c) {
  std::size_t cases = 0, mismatches = 0;
  const long radius = c.size() <= 4 ? 4 : 2;
  for (const auto& k : weight_box(c.size(), -radius, radius)) {
    const auto dirs = reduction::reducible_directions(c, k);
    for (std::size_t tau0 = 0; tau0 < c.size(); ++tau0) {
      if (c.sigma(tau0) == tau0) continue;
      const bool reducible = std::find(dirs.begin(), dirs.end(), tau0) != dirs.end();
      for (unsigned r = 1; r <= 3; ++r) {
        ++cases;
        if (strata::theorem_bridge(c, k, tau0, r) != reducible) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches"};
}

CheckResult check_torsion(const Carousel& c) {
  std::size_t strata_count = 0, failures = 0;
  for (std::uint64_t m = 0; m < (1ULL << c.size()); ++m) {
    strata::StratumLabel t(c.size(), m);
    ++strata_count;
    if (!strata::torsion_summary(c, t).bound_holds) ++failures;
    if (!strata::torsion_summary_closed(c, t).bound_holds) ++failures;
  }
  return {failures == 0, std::to_string(strata_count) + " strata, " + std::to_string(failures) + " failures"};
}

CheckResult check_factorization(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 97};
  std::size_t failures = 0;
  const int trials = 20;
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t p = primes[rng() % std::size(primes)];
    const int deg = 1 + static_cast<int>(rng() % 8);
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(deg) + 1);
    for (auto& x : coeffs) x = rng() % p;
    coeffs.back() = 1;
    const PolyFp f(p, coeffs);
    const auto fac = factor_monic(f, seed + static_cast<std::uint64_t>(trial));
    bool ok = fac.product() == f;
    for (const auto& fp : fac.factors) ok = ok && is_irreducible(fp.factor);
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(trials) + " polynomials, " + std::to_string(failures) + " failures"};
}

}  // namespace

std::vector<SplittingProfile> selftest_panel() {
  return {
      SplittingProfile(2, {{2, 1}}),         SplittingProfile(2, {{1, 2}}), SplittingProfile(3, {{1, 1}, {1, 1}}),
      SplittingProfile(2, {{2, 2}}),         SplittingProfile(5, {{1, 3}}), SplittingProfile(2, {{3, 1}, {1, 1}}),
  };
}

SelftestResult selftest(const SelftestOptions& options) {
  SelftestResult res;
  Json checks = Json::array();
  Json panel = Json::array();
  auto record = [&](const Json& profile, const std::string& name, const CheckResult& r) {
    checks.push_back({{"profile", profile}, {"check", name}, {"pass", r.pass}, {"detail", r.detail}});
    res.all_pass = res.all_pass && r.pass;
  };

  if (options.empty_panel) {
    res.warnings.push_back("empty panel: no checks were run, pass is vacuous");
  } else {
    for (const auto& profile : selftest_panel()) {
      const Carousel c(profile);
      const Json pj = profile_json(profile);
      panel.push_back(pj);
      record(pj, "determinant_identity", check_determinant(c, options.inject_bad_hasse_sign));
      record(pj, "cone_chain", check_chain(c));
      record(pj, "split_criterion", check_split(c));
      record(pj, "bridge_identity", check_bridge(c));
      record(pj, "torsion_bound", check_torsion(c));
    }
    record(nullptr, "factorization", check_factorization(options.seed));
  }
  res.payload["seed"] = options.seed;
  res.payload["panel"] = panel;
  res.payload["checks"] = checks;
  res.payload["all_pass"] = res.all_pass;
  Json warnings = Json::array();
  for (const auto& w : res.warnings) warnings.push_back(w);
  res.payload["warnings"] = warnings;
  return res;
}

RunResult run(const std::vector<std::string>& argv) {
  CLI::App app{"Weight combinatorics of mod p Hilbert modular forms", argv.empty() ? "hmw" : argv.front()};
  app.require_subcommand(1);

  ProfileArgs pa;
  std::string weight, stratum, tau;
  unsigned r = 1;
  bool csv = false, closed = false, enumerate = false;
  SelftestOptions st;

  auto* profile_cmd = app.add_subcommand("profile", "Show Σ, σ, n_τ and the Hasse matrix for a profile");
  add_profile_options(profile_cmd, pa);

  auto* cones_cmd = app.add_subcommand("cones", "Minimal, standard and Hasse cones with certificates");
  add_profile_options(cones_cmd, pa);
  cones_cmd->add_option("--weight", weight, "Weight to test for membership, JSON integer array");

  auto* reduce_cmd = app.add_subcommand("reduce", "Greedy reduction of a weight into the minimal cone");
  add_profile_options(reduce_cmd, pa);
  reduce_cmd->add_option("--weight", weight, "Weight, JSON integer array in canonical Σ order")->required();
  reduce_cmd->add_flag("--enumerate", enumerate, "Also list every minimal-cone decomposition");

  auto* picard_cmd = app.add_subcommand("picard", "Torsion orders of the ω_τ on strata");
  add_profile_options(picard_cmd, pa);
  picard_cmd->add_option("--stratum", stratum, "Stratum T as a bitstring over Σ (default: all strata)");
  picard_cmd->add_flag("--closed", closed, "Use the closed stratum Z_T (relations for τ ∈ T only)");
  picard_cmd->add_flag("--csv", csv, "Emit RFC-4180 CSV");

  auto* bridge_cmd = app.add_subcommand("bridge", "Fibre degree sign versus reducibility at τ0");
  add_profile_options(bridge_cmd, pa);
  bridge_cmd->add_option("--weight", weight, "Weight, JSON integer array")->required();
  bridge_cmd->add_option("--tau", tau, "τ0 as an index or a P<l>:b<beta>:i<i> label")->required();
  bridge_cmd->add_option("--r", r, "Frobenius exponent r >= 0 (default 1)");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the embedded invariant suite on the fixed panel");
  selftest_cmd->add_option("--seed", st.seed, "Seed for the factorization check (default 0)");
  selftest_cmd->add_flag("--csv", csv, "Emit RFC-4180 CSV");
  selftest_cmd->add_flag("--inject-bad-hasse-sign", st.inject_bad_hasse_sign, "Debug hook: corrupt one h_τ");
  selftest_cmd->add_flag("--empty-panel", st.empty_panel, "Run no profiles");

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    if (app.exit(e, out, err) == 0) return {out.str(), err.str(), kOk};
    return {out.str(), err.str() + "\n" + app.help(), kUsage};
  }

  try {
    if (*profile_cmd) return cmd_profile(pa);
    if (*cones_cmd) return cmd_cones(pa, weight);
    if (*reduce_cmd) return cmd_reduce(pa, weight, enumerate);
    if (*picard_cmd) return cmd_picard(pa, stratum, closed, csv);
    if (*bridge_cmd) return cmd_bridge(pa, weight, tau, r);
    if (*selftest_cmd) return cmd_selftest(st, csv);
  } catch (const UsageError& e) {
    return {"", std::string("usage error: ") + e.what() + "\n", kUsage};
  } catch (const SchemaError& e) {
    return {"", std::string("usage error: ") + e.what() + "\n", kUsage};
  } catch (const DimensionMismatch& e) {
    return {"", std::string("usage error: ") + e.what() + "\n", kUsage};
  } catch (const ForeignEmbedding& e) {
    return {"", std::string("usage error: ") + e.what() + "\n", kUsage};
  } catch (const CheckFailure& e) {
    return {"", std::string("internal check failed: ") + e.what() + "\n", kCheckFailed};
  } catch (const Error& e) {
    return {"", std::string("error: ") + e.what() + "\n", kInvariant};
  } catch (const std::exception& e) {
    return {"", std::string("internal error: ") + e.what() + "\n", kCheckFailed};
  }
  return {"", "no subcommand\n", kUsage};
}

}  // namespace hmw::cli
