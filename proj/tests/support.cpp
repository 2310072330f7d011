#include "support.hpp"

#include <numeric>
#include <stdexcept>

namespace testing_support {

Rational evaluate(const mutalg::LaurentPolynomial& f, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      long k = e[i];
      Rational base = k < 0 ? Rational(1) / point[i] : point[i];
      for (long j = 0; j < (k < 0 ? -k : k); ++j) term *= base;
    }
    total += term;
  }
  return total;
}

Rational evaluate(const mutalg::RationalFunction& f, const std::vector<Rational>& point) {
  Rational den = evaluate(f.denominator(), point);
  if (den == 0) throw std::domain_error("denominator vanishes");
  return evaluate(f.numerator(), point) / den;
}

std::vector<Rational> random_point(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
  std::vector<Rational> out;
  while (out.size() < n) {
    long p = num(rng);
    if (p == 0) continue;
    Rational q(p, den(rng));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

mutalg::LaurentPolynomial random_laurent(const mutalg::VariableContext& c, std::mt19937_64& rng, std::size_t terms,
                                         long lo, long hi) {
  std::uniform_int_distribution<long> ex(lo, hi), co(-5, 5);
  mutalg::LaurentPolynomial f(c);
  for (std::size_t t = 0; t < terms; ++t) {
    mutalg::Exponent e(c.size());
    for (auto& x : e) x = ex(rng);
    f.add_term(e, co(rng));
  }
  return f;
}

mutalg::Seed random_seed(std::mt19937_64& rng, const SeedShape& shape) {
  std::uniform_int_distribution<std::size_t> size(1, shape.max_vertices);
  std::size_t n = size(rng);
  std::size_t m = n;
  if (shape.allow_frozen && n > 1) m = std::uniform_int_distribution<std::size_t>(1, n)(rng);
  std::vector<long> d(m, 1);
  if (shape.symmetrizable) {
    for (auto& x : d) x = std::uniform_int_distribution<long>(1, 2)(rng);
  }
  long cap = shape.max_entry;
  std::vector<std::vector<long>> s(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      // Keep |s_ij * d_j| <= cap on both sides.
      long bound = cap / std::max(d[i], d[j]);
      long v = std::uniform_int_distribution<long>(-bound, bound)(rng);
      s[i][j] = v;
      s[j][i] = -v;
    }
  }
  mutalg::ExchangeMatrix em;
  em.b = mutalg::IntMatrix(n, m);
  for (std::size_t c = 0; c < m; ++c) em.mutable_vertices.push_back(c);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) em.b(i, j) = s[i][j] * d[j];
  }
  std::uniform_int_distribution<long> fr(-cap, cap);
  for (std::size_t i = m; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) em.b(i, j) = fr(rng);
  }
  std::vector<std::string> labels, names;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    names.push_back("x" + std::to_string(i + 1));
  }
  return mutalg::Seed(labels, em, names);
}

std::vector<std::vector<long>> left_kernel(const mutalg::IntMatrix& b) {
  // Solve B^T y = 0: reduce the m x n matrix B^T to reduced row echelon form.
  std::size_t n = b.rows(), m = b.cols();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = b(c, r);
  }
  std::vector<long> pivot_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t p = row;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    Rational inv = Rational(1) / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_of_col[c] = static_cast<long>(row);
    ++row;
  }
  std::vector<std::vector<long>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Rational> y(n, 0);
    y[free] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_of_col[c] >= 0) y[c] = -a[pivot_of_col[c]][free];
    }
    mpz_class l = 1;
    for (const auto& q : y) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<long> v;
    for (const auto& q : y) {
      mpz_class z = q.get_num() * (l / q.get_den());
      v.push_back(z.get_si());
    }
    out.push_back(v);
  }
  return out;
}

mutalg::Grading random_compatible_grading(const mutalg::Seed& s, std::mt19937_64& rng, std::size_t rank) {
  auto kernel = left_kernel(s.matrix().b);
  mutalg::Grading g;
  g.rank = rank;
  std::uniform_int_distribution<long> coef(-2, 2);
  std::vector<std::vector<long>> rows(rank, std::vector<long>(s.size(), 0));
  for (auto& r : rows) {
    for (const auto& k : kernel) {
      long c = coef(rng);
      for (std::size_t i = 0; i < s.size(); ++i) r[i] += c * k[i];
    }
  }
  auto names = s.names();
  for (std::size_t i = 0; i < s.size(); ++i) {
    mutalg::Degree d(rank);
    for (std::size_t r = 0; r < rank; ++r) d[r] = rows[r][i];
    g.degrees[names[i]] = d;
  }
  return g;
}

}  // namespace testing_support
