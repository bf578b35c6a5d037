#include "hmw/splitting_profile.hpp"

#include <json.hpp>

#include "hmw/errors.hpp"
#include "hmw/primes.hpp"

namespace hmw {

SplittingProfile::SplittingProfile(std::uint64_t p, std::vector<PrimeLocus> loci) : p_(p), loci_(std::move(loci)) {
  if (!is_prime_u64(p_)) throw InvariantError("profile: p = " + std::to_string(p_) + " is not prime");
  if (loci_.empty()) throw InvariantError("profile: no prime loci");
  long d = 0;
  for (const auto& locus : loci_) {
    if (locus.e < 1) throw InvariantError("profile: ramification index e must be >= 1");
    if (locus.f < 1) throw InvariantError("profile: residue degree f must be >= 1");
    if (locus.e > kMaxDegree || locus.f > kMaxDegree) throw InvariantError("profile: degree exceeds 64");
    d += static_cast<long>(locus.e) * locus.f;
    if (d > kMaxDegree) throw InvariantError("profile: degree exceeds 64");
  }
  if (d < 2) throw InvariantError("profile: degree d = " + std::to_string(d) + " must be >= 2");
  degree_ = static_cast<int>(d);
}

Integer SplittingProfile::p_integer() const { return Integer(std::to_string(p_)); }

bool SplittingProfile::totally_split() const {
  for (const auto& locus : loci_)
    if (locus.e != 1 || locus.f != 1) return false;
  return true;
}

void MinPolySpec::validate(int min_degree) const {
  if (!is_prime_u64(p)) throw InvariantError("minpoly: p = " + std::to_string(p) + " is not prime");
  if (coefficients.empty() || coefficients.back() != 1) throw InvariantError("minpoly: polynomial must be monic");
  if (degree() < min_degree) throw InvariantError("minpoly: degree must be >= " + std::to_string(min_degree));
  if (degree() > SplittingProfile::kMaxDegree) throw InvariantError("minpoly: degree exceeds 64");
}

ModPFactorization factor_mod_p(const MinPolySpec& g, std::uint64_t seed) {
  g.validate(1);
  return factor_monic(PolyFp::reduce(g.p, g.coefficients), seed);
}

namespace {

IntVector lift(const PolyFp& f) {
  IntVector out;
  for (auto c : f.coeffs()) out.emplace_back(std::to_string(c));
  return out;
}

IntVector int_mul(const IntVector& a, const IntVector& b) {
  if (a.empty() || b.empty()) return {};
  IntVector out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

bool dedekind_p_maximal(const MinPolySpec& g, std::uint64_t seed) {
  g.validate(2);
  const std::uint64_t p = g.p;
  const PolyFp g_bar = PolyFp::reduce(p, g.coefficients);
  const ModPFactorization fac = factor_monic(g_bar, seed);

  PolyFp g_star_bar = PolyFp::constant(p, 1);
  for (const auto& fp : fac.factors) g_star_bar = g_star_bar * fp.factor;
  const PolyFp h_star_bar = g_bar / g_star_bar;

  IntVector g_star{Integer(1)};
  for (const auto& fp : fac.factors) g_star = int_mul(g_star, lift(fp.factor));
  IntVector diff = int_mul(g_star, lift(h_star_bar));
  diff.resize(std::max(diff.size(), g.coefficients.size()), Integer(0));
  for (std::size_t i = 0; i < g.coefficients.size(); ++i) diff[i] -= g.coefficients[i];

  const Integer pz(std::to_string(p));
  for (auto& c : diff) {
    if (!mpz_divisible_p(c.get_mpz_t(), pz.get_mpz_t()))
      throw CheckFailure("dedekind: g*·h* - g is not divisible by p");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
  }
  const PolyFp f_bar = PolyFp::reduce(p, diff);
  return gcd(gcd(f_bar, g_star_bar), h_star_bar).is_one();
}

SplittingProfile profile_from_minpoly(const MinPolySpec& g, std::uint64_t seed) {
  if (!dedekind_p_maximal(g, seed))
    throw NotPMaximal("minpoly: Z[x]/(g) is not maximal at p = " + std::to_string(g.p) +
                      "; supply the splitting profile directly");
  const ModPFactorization fac = factor_mod_p(g, seed);
  std::vector<PrimeLocus> loci;
  for (const auto& fp : fac.factors) loci.push_back({static_cast<int>(fp.multiplicity), fp.factor.degree()});
  return SplittingProfile(g.p, std::move(loci));
}

namespace {

using nlohmann::json;

std::uint64_t json_prime_field(const json& doc) {
  if (!doc.contains("p")) throw SchemaError("profile: missing field \"p\"");
  const json& p = doc.at("p");
  if (p.is_number_unsigned()) return p.get<std::uint64_t>();
  if (p.is_number_integer()) {
    const auto v = p.get<std::int64_t>();
    if (v < 0) throw InvariantError("profile: p must be positive");
    return static_cast<std::uint64_t>(v);
  }
  throw SchemaError("profile: \"p\" must be an integer");
}

int json_small_int(const json& v, const char* name) {
  if (!v.is_number_integer()) throw SchemaError(std::string("profile: \"") + name + "\" must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < -1'000'000 || x > 1'000'000) throw InvariantError(std::string("profile: \"") + name + "\" out of range");
  return static_cast<int>(x);
}

Integer json_big_int(const json& v) {
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0) throw SchemaError("minpoly: malformed integer string");
    return out;
  }
  throw SchemaError("minpoly: coefficients must be integers");
}

}  // namespace

SplittingProfile parse_profile(std::string_view document, std::uint64_t seed) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("profile: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("profile: top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "p" && key != "loci" && key != "minpoly" && key != "d")
      throw SchemaError("profile: unknown field \"" + key + "\"");
  const std::uint64_t p = json_prime_field(doc);
  const bool has_loci = doc.contains("loci");
  const bool has_minpoly = doc.contains("minpoly");
  if (has_loci == has_minpoly) throw SchemaError("profile: exactly one of \"loci\" or \"minpoly\" is required");

  auto check_declared_degree = [&](const SplittingProfile& profile) {
    if (doc.contains("d") && json_small_int(doc.at("d"), "d") != profile.degree())
      throw InvariantError("profile: declared d does not equal the sum of e*f");
    return profile;
  };

  if (has_minpoly) {
    const json& coeffs = doc.at("minpoly");
    if (!coeffs.is_array()) throw SchemaError("profile: \"minpoly\" must be an array");
    MinPolySpec spec{{}, p};
    for (const auto& c : coeffs) spec.coefficients.push_back(json_big_int(c));
    return check_declared_degree(profile_from_minpoly(spec, seed));
  }

  const json& loci = doc.at("loci");
  if (!loci.is_array()) throw SchemaError("profile: \"loci\" must be an array");
  std::vector<PrimeLocus> out;
  for (const auto& entry : loci) {
    if (!entry.is_object() || !entry.contains("e") || !entry.contains("f") || entry.size() != 2)
      throw SchemaError("profile: each locus must be an object {\"e\": int, \"f\": int}");
    out.push_back({json_small_int(entry.at("e"), "e"), json_small_int(entry.at("f"), "f")});
  }
  return check_declared_degree(SplittingProfile(p, std::move(out)));
}

std::string profile_to_json(const SplittingProfile& profile) {
  json loci = json::array();
  for (const auto& l : profile.loci()) loci.push_back({{"e", l.e}, {"f", l.f}});
  json doc;
  doc["p"] = profile.p();
  doc["loci"] = loci;
  return doc.dump();
}

}  // namespace hmw
