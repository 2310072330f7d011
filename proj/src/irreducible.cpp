#include <algorithm>
#include <array>
#include <optional>

#include "mutalg/datum.hpp"
#include "mutalg/error.hpp"

namespace mutalg {

namespace {

constexpr std::array<long, 25> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                          43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Divisor enumeration is skipped above this bound; the caller reports Unknown.
const mpz_class kDivisorLimit("1000000000000");

std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class& value) {
  mpz_class n = abs(value);
  if (n > kDivisorLimit) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const std::vector<mpz_class>& coeffs, const Rational& t) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

// Some rational root, nullopt when there is none, and an error flag when the
// coefficients are too large to enumerate candidates.
struct RootSearch {
  std::optional<Rational> root;
  bool exhaustive = true;
};

RootSearch find_rational_root(const std::vector<mpz_class>& coeffs) {
  auto numerators = positive_divisors(coeffs.front());
  auto denominators = positive_divisors(coeffs.back());
  if (!numerators || !denominators) return {std::nullopt, false};
  for (const mpz_class& p : *numerators) {
    for (const mpz_class& q : *denominators) {
      for (int sign : {1, -1}) {
        Rational candidate(mpz_class(sign * p), q);
        candidate.canonicalize();
        if (evaluate(coeffs, candidate) == 0) return {candidate, true};
      }
    }
  }
  return {std::nullopt, true};
}

// Dense polynomials over F_p, low degree first, no trailing zeros.
using ModPoly = std::vector<long>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod_inverse(long a, long p) {
  long result = 1, base = ((a % p) + p) % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

ModPoly mod_reduce(ModPoly a, const ModPoly& f, long p) {
  trim(a);
  const long inv = mod_inverse(f.back(), p);
  while (a.size() >= f.size()) {
    long factor = a.back() * inv % p;
    std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
      a[shift + i] = ((a[shift + i] - factor * f[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& f, long p) {
  if (a.empty() || b.empty()) return {};
  ModPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return mod_reduce(std::move(prod), f, p);
}

ModPoly pow_mod(ModPoly base, long e, const ModPoly& f, long p) {
  ModPoly result{1};
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_reduce(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree n is irreducible over F_p iff gcd(f, x^(p^i) - x) = 1
// for every i <= n/2.
bool irreducible_mod_p(const ModPoly& f, long p) {
  const std::size_t n = f.size() - 1;
  ModPoly x{0, 1};
  ModPoly power = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    power = pow_mod(power, p, f, p);
    ModPoly diff = power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (gcd_mod(f, diff, p).size() > 1) return false;
  }
  return true;
}

}  // namespace

const char* irreducibility_name(Irreducibility s) {
  switch (s) {
    case Irreducibility::CertifiedIrreducible: return "CertifiedIrreducible";
    case Irreducibility::CertifiedReducible: return "CertifiedReducible";
    case Irreducibility::DeclaredIrreducible: return "DeclaredIrreducible";
    case Irreducibility::Unknown: return "Unknown";
  }
  return "Unknown";
}

IrreducibilityCertificate certify_univariate(const std::vector<Rational>& coefficients) {
  if (coefficients.size() < 2 || coefficients.front() == 0 || coefficients.back() == 0) {
    throw Error("univariate irreducibility needs degree >= 1 and a nonzero constant term");
  }
  const std::size_t degree = coefficients.size() - 1;
  if (degree == 1) return {Irreducibility::CertifiedIrreducible, "degree 1"};

  mpz_class denominators = 1;
  for (const Rational& q : coefficients) mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const Rational& q : coefficients) ints.push_back(q.get_num() * (denominators / q.get_den()));

  RootSearch search = find_rational_root(ints);
  if (search.root) {
    return {Irreducibility::CertifiedReducible, "rational root " + search.root->get_str()};
  }
  if (degree <= 3) {
    if (search.exhaustive) return {Irreducibility::CertifiedIrreducible, "no rational root, degree <= 3"};
    return {Irreducibility::Unknown, "coefficients too large for the rational root test"};
  }
  for (long p : kPrimes) {
    mpz_class mp = p;
    if (ints.front() % mp == 0 || ints.back() % mp == 0) continue;
    ModPoly reduced;
    for (const mpz_class& c : ints) {
      mpz_class r = c % mp;
      if (r < 0) r += mp;
      reduced.push_back(r.get_si());
    }
    if (irreducible_mod_p(reduced, p)) {
      return {Irreducibility::CertifiedIrreducible, "irreducible modulo " + std::to_string(p)};
    }
  }
  return {Irreducibility::Unknown, "no certificate among the first 25 primes"};
}

IrreducibilityCertificate certify_irreducible(const LaurentPolynomial& g) {
  if (g.is_zero()) throw Error("irreducibility of zero is undefined");
  if (g.is_monomial()) throw Error("monomials are units in the Laurent ring");

  // Write every support point as base + t*direction with direction primitive.
  const Exponent& base = g.terms().begin()->first;
  LatticeVector direction;
  std::vector<std::pair<long, Rational>> points;
  for (const auto& [e, c] : g.terms()) {
    LatticeVector diff(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) diff[i] = e[i] - base[i];
    if (direction.rank() == 0 && !diff.is_zero()) direction = primitive_part(diff);
    long t = 0;
    if (!diff.is_zero()) {
      std::size_t lead = 0;
      while (direction[lead] == 0) ++lead;
      if (diff[lead] % direction[lead] != 0) {
        return {Irreducibility::Unknown, "support is not contained in a lattice segment"};
      }
      t = diff[lead] / direction[lead];
      if (!(t * direction == diff)) {
        return {Irreducibility::Unknown, "support is not contained in a lattice segment"};
      }
    }
    points.emplace_back(t, c);
  }
  long lo = points.front().first, hi = lo;
  for (const auto& [t, c] : points) {
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [t, c] : points) coeffs[static_cast<std::size_t>(t - lo)] = c;
  IrreducibilityCertificate cert = certify_univariate(coeffs);
  cert.method = "segment along " + to_string(direction) + ": " + cert.method;
  return cert;
}

}  // namespace mutalg
