#include "hmw/poly_fp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hmw/errors.hpp"
#include "hmw/primes.hpp"

namespace hmw {

namespace {

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= p - b ? a - (p - b) : a + b; }
std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw InvariantError("PolyFp: inverse of zero");
  return powmod(a, p - 2, p);
}

void require_same_field(const PolyFp& a, const PolyFp& b) {
  if (a.modulus() != b.modulus()) throw InvariantError("PolyFp: operands over different fields");
}

}  // namespace

PolyFp::PolyFp(std::uint64_t p) : p_(p) {
  if (p < 2) throw InvariantError("PolyFp: modulus must be >= 2");
}

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw InvariantError("PolyFp: modulus must be >= 2");
  for (auto& c : c_) c %= p_;
  trim();
}

PolyFp PolyFp::constant(std::uint64_t p, std::uint64_t c) { return PolyFp(p, {c}); }
PolyFp PolyFp::x(std::uint64_t p) { return PolyFp(p, {0, 1}); }

PolyFp PolyFp::reduce(std::uint64_t p, const IntVector& coeffs) {
  std::vector<std::uint64_t> out;
  out.reserve(coeffs.size());
  const Integer modulus(std::to_string(p));
  for (const auto& c : coeffs) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    out.push_back(std::stoull(r.get_str()));
  }
  return PolyFp(p, std::move(out));
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = invmod(lead(), p_);
  std::vector<std::uint64_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mulmod(c_[i], inv, p_);
  return PolyFp(p_, std::move(out));
}

PolyFp PolyFp::derivative() const {
  if (c_.size() <= 1) return PolyFp(p_);
  std::vector<std::uint64_t> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = mulmod(c_[i], i % p_, p_);
  return PolyFp(p_, std::move(out));
}

std::uint64_t PolyFp::eval(std::uint64_t at) const {
  std::uint64_t acc = 0;
  at %= p_;
  for (std::size_t i = c_.size(); i-- > 0;) acc = addmod(mulmod(acc, at, p_), c_[i], p_);
  return acc;
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = addmod(a[i], b[i], a.p_);
  return PolyFp(a.p_, std::move(out));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = submod(a[i], b[i], a.p_);
  return PolyFp(a.p_, std::move(out));
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return PolyFp(a.p_);
  std::vector<std::uint64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = addmod(out[i + j], mulmod(a.c_[i], b.c_[j], a.p_), a.p_);
  }
  return PolyFp(a.p_, std::move(out));
}

std::pair<PolyFp, PolyFp> PolyFp::divmod(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw InvariantError("PolyFp: division by zero polynomial");
  const std::uint64_t p = a.p_;
  if (a.degree() < b.degree()) return {PolyFp(p), a};
  std::vector<std::uint64_t> rem = a.c_;
  std::vector<std::uint64_t> quot(a.c_.size() - b.c_.size() + 1, 0);
  const std::uint64_t inv = invmod(b.lead(), p);
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::uint64_t coef = mulmod(rem[k + db], inv, p);
    quot[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = submod(rem[k + j], mulmod(coef, b.c_[j], p), p);
  }
  return {PolyFp(p, std::move(quot)), PolyFp(p, std::move(rem))};
}

bool canonical_less(const PolyFp& a, const PolyFp& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c_ < b.c_;
}

std::string PolyFp::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

PolyFp gcd(PolyFp a, PolyFp b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    PolyFp r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyFp powmod(const PolyFp& base, std::uint64_t exponent, const PolyFp& modulus) {
  PolyFp result = PolyFp::constant(base.modulus(), 1) % modulus;
  PolyFp b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = (result * b) % modulus;
    b = (b * b) % modulus;
    exponent >>= 1;
  }
  return result;
}

PolyFp powmod(const PolyFp& base, const Integer& exponent, const PolyFp& modulus) {
  if (exponent < 0) throw InvariantError("powmod: negative exponent");
  PolyFp result = PolyFp::constant(base.modulus(), 1) % modulus;
  PolyFp b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(p^k) mod f by k Frobenius steps.
PolyFp frobenius_power(const PolyFp& f, int k) {
  PolyFp h = PolyFp::x(f.modulus()) % f;
  for (int i = 0; i < k; ++i) h = powmod(h, f.modulus(), f);
  return h;
}

struct SquarefreePart {
  PolyFp poly;
  unsigned multiplicity;
};

std::vector<SquarefreePart> squarefree_split(const PolyFp& f) {
  const std::uint64_t p = f.modulus();
  std::vector<SquarefreePart> out;
  if (f.degree() <= 0) return out;
  const PolyFp df = f.derivative();
  if (df.is_zero()) {
    // f = g(x^p) = g(x)^p since a^p = a in F_p.
    std::vector<std::uint64_t> root;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) root.push_back(f.coeffs()[i]);
    for (auto& part : squarefree_split(PolyFp(p, std::move(root)))) {
      part.multiplicity *= static_cast<unsigned>(p);
      out.push_back(std::move(part));
    }
    return out;
  }
  PolyFp c = gcd(f, df);
  PolyFp w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    PolyFp y = gcd(w, c);
    PolyFp part = w / y;
    if (!part.is_one()) out.push_back({part.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    std::vector<std::uint64_t> root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
    for (auto& part : squarefree_split(PolyFp(p, std::move(root)).monic())) {
      part.multiplicity *= static_cast<unsigned>(p);
      out.push_back(std::move(part));
    }
  }
  return out;
}

struct DegreePart {
  PolyFp poly;
  int factor_degree;
};

std::vector<DegreePart> distinct_degree_split(PolyFp f) {
  std::vector<DegreePart> out;
  const std::uint64_t p = f.modulus();
  PolyFp h = PolyFp::x(p) % f;
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = powmod(h, p, f);
    PolyFp g = gcd(h - PolyFp::x(p), f);
    if (!g.is_one()) {
      out.push_back({g, i});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f.monic(), f.degree()});
  return out;
}

PolyFp random_poly(std::uint64_t p, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(below_degree));
  for (auto& x : c) x = coef(rng);
  return PolyFp(p, std::move(c));
}

void equal_degree_split(const PolyFp& f, int k, std::mt19937_64& rng, std::vector<PolyFp>& out) {
  if (f.degree() == k) {
    out.push_back(f.monic());
    return;
  }
  const std::uint64_t p = f.modulus();
  for (;;) {
    PolyFp a = random_poly(p, f.degree(), rng);
    if (a.degree() < 1) continue;
    PolyFp b(p);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(k-1)).
      PolyFp t = a % f;
      b = t;
      for (int i = 1; i < k; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      Integer e = (ipow(Integer(std::to_string(p)), static_cast<unsigned long>(k)) - 1) / 2;
      b = powmod(a, e, f) - PolyFp::constant(p, 1);
    }
    PolyFp g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, k, rng, out);
      equal_degree_split(f / g, k, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const PolyFp& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  PolyFp m = f.monic();
  if (!(frobenius_power(m, n) == PolyFp::x(f.modulus()) % m)) return false;
  for (int q : prime_divisors(n)) {
    PolyFp g = gcd(frobenius_power(m, n / q) - PolyFp::x(f.modulus()), m);
    if (!g.is_one()) return false;
  }
  return true;
}

PolyFp ModPFactorization::product() const {
  PolyFp acc = PolyFp::constant(p, 1);
  for (const auto& fp : factors)
    for (unsigned i = 0; i < fp.multiplicity; ++i) acc = acc * fp.factor;
  return acc;
}

ModPFactorization factor_monic(const PolyFp& f, std::uint64_t seed) {
  if (f.is_zero() || f.lead() != 1) throw InvariantError("factor_monic: polynomial must be monic");
  std::mt19937_64 rng(seed);
  ModPFactorization result{f.modulus(), {}};
  for (const auto& sf : squarefree_split(f)) {
    for (const auto& dd : distinct_degree_split(sf.poly)) {
      std::vector<PolyFp> irreducibles;
      equal_degree_split(dd.poly, dd.factor_degree, rng, irreducibles);
      for (auto& g : irreducibles) result.factors.push_back({std::move(g), sf.multiplicity});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
  return result;
}

}  // namespace hmw
