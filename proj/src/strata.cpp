#include "hmw/strata.hpp"

#include <bit>

#include "hmw/errors.hpp"

namespace hmw::strata {

StratumLabel::StratumLabel(std::size_t d, std::uint64_t mask) : d_(d), mask_(mask) {
  if (d > 64) throw InvariantError("stratum: at most 64 embeddings");
  if (d < 64 && (mask >> d) != 0) throw InvariantError("stratum: label has members outside Σ");
}

StratumLabel StratumLabel::full(std::size_t d) { return {d, d == 64 ? ~0ULL : ((1ULL << d) - 1)}; }

StratumLabel StratumLabel::parse(const std::string& bits) {
  if (bits.empty() || bits.size() > 64) throw SchemaError("stratum: bitstring must have 1..64 characters");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      mask |= 1ULL << i;
    else if (bits[i] != '0')
      throw SchemaError("stratum: bitstring may contain only 0 and 1");
  }
  return {bits.size(), mask};
}

std::size_t StratumLabel::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

bool StratumLabel::is_subset_of(const StratumLabel& other) const {
  return d_ == other.d_ && (mask_ & ~other.mask_) == 0;
}

std::string StratumLabel::to_bitstring() const {
  std::string s(d_, '0');
  for (std::size_t i = 0; i < d_; ++i)
    if (contains(i)) s[i] = '1';
  return s;
}

int stratum_dimension(int d, const StratumLabel& t) {
  if (static_cast<std::size_t>(d) != t.ambient()) throw DimensionMismatch("stratum: label ambient size differs from d");
  return d - static_cast<int>(t.size());
}

std::vector<StratumLabel> closure_set(const StratumLabel& t) {
  const std::uint64_t free = StratumLabel::full(t.ambient()).mask() & ~t.mask();
  std::vector<StratumLabel> out;
  // Enumerate submasks of `free` in increasing order.
  std::uint64_t sub = 0;
  for (;;) {
    out.emplace_back(t.ambient(), t.mask() | sub);
    if (sub == free) break;
    sub = (sub - free) & free;
  }
  return out;
}

RelationLattice picard_relations(const Carousel& c, const StratumLabel& t, Locus locus) {
  const std::size_t d = c.size();
  if (t.ambient() != d) throw DimensionMismatch("stratum label has wrong length");
  RelationLattice out;
  for (std::size_t tau = 0; tau < d; ++tau) {
    const bool in_t = t.contains(tau);
    if (!in_t && locus == Locus::Closed) continue;
    IntVector row(d, Integer(0));
    row[tau] += 1;
    if (in_t)
      row[c.sigma_inv(tau)] += c.n(tau);
    else
      row[c.sigma_inv(tau)] -= c.n(tau);
    out.rows.push_back(std::move(row));
    out.taus.push_back(tau);
  }
  return out;
}

Integer PicardSummary::group_order() const {
  Integer prod = 1;
  for (const auto& f : invariant_factors) prod *= f;
  return prod;
}

std::vector<Integer> unit_vector_orders(const linalg::IntMatrix& relations) {
  const std::size_t n = relations.cols();
  const linalg::SmithForm snf = linalg::smith_normal_form(relations);
  const std::vector<Integer> diag = snf.diagonal();
  // x ↦ x·V carries rowspan(A) onto rowspan(D), so e_τ has the order of row τ of V
  // in ⊕ ℤ/d_j.
  std::vector<Integer> out(n);
  for (std::size_t tau = 0; tau < n; ++tau) {
    Integer order = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& v = snf.v(tau, j);
      if (v == 0) continue;
      const Integer dj = j < diag.size() ? diag[j] : Integer(0);
      if (dj == 0) {
        order = 0;
        break;
      }
      Integer g;
      mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), dj.get_mpz_t());
      const Integer part = dj / g;
      mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), part.get_mpz_t());
    }
    out[tau] = order;
  }
  return out;
}

namespace {

PicardSummary summarize(const Carousel& c, const RelationLattice& rel, const std::vector<std::size_t>& checked) {
  const std::size_t d = c.size();
  PicardSummary out;
  if (rel.rows.empty()) {
    out.invariant_factors.assign(0, Integer(0));
    out.torsion_order.assign(d, Integer(0));
  } else {
    const auto a = linalg::IntMatrix::from_rows(rel.rows, d);
    out.invariant_factors = linalg::smith_normal_form(a).diagonal();
    out.torsion_order = unit_vector_orders(a);
  }
  // Rank-deficient directions: one zero invariant factor per missing rank.
  while (out.invariant_factors.size() < d) out.invariant_factors.emplace_back(0);
  out.checked = checked;
  const Integer p = c.profile().p_integer();
  for (std::size_t tau : checked) {
    const unsigned long f = static_cast<unsigned long>(c.profile().loci()[c.locus_of(tau)].f);
    const Integer bound = ipow(p, 2 * f) - 1;
    const Integer& order = out.torsion_order[tau];
    if (order == 0 || !mpz_divisible_p(bound.get_mpz_t(), order.get_mpz_t())) out.bound_holds = false;
  }
  return out;
}

}  // namespace

PicardSummary torsion_summary(const Carousel& c, const StratumLabel& t) {
  std::vector<std::size_t> all(c.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return summarize(c, picard_relations(c, t, Locus::Open), all);
}

PicardSummary torsion_summary_closed(const Carousel& c, const StratumLabel& t) {
  std::vector<std::size_t> checked;
  for (std::size_t l = 0; l < c.profile().loci().size(); ++l) {
    const auto members = c.locus_members(l);
    bool covered = true;
    for (std::size_t tau : members) covered = covered && t.contains(tau);
    if (covered) checked.insert(checked.end(), members.begin(), members.end());
  }
  return summarize(c, picard_relations(c, t, Locus::Closed), checked);
}

Integer fibre_degree(const Carousel& c, const Weight& k, std::size_t tau0, unsigned r) {
  if (k.size() != c.size()) throw DimensionMismatch("weight has wrong length");
  if (c.sigma(tau0) == tau0)
    throw SingletonOrbit("fibre degree: " + to_string(c.at(tau0)) + " is fixed by sigma");
  const Integer pr = ipow(c.profile().p_integer(), r);
  const Integer& n = c.n(tau0);
  if (!mpz_divisible_p(pr.get_mpz_t(), n.get_mpz_t()))
    throw MultiplierNotDividing("fibre degree: n_tau0 does not divide p^r");
  return pr * k[tau0] - (pr / n) * k[c.sigma_inv(tau0)];
}

bool theorem_bridge(const Carousel& c, const Weight& k, std::size_t tau0, unsigned r) {
  return fibre_degree(c, k, tau0, r) < 0;
}

}  // namespace hmw::strata
