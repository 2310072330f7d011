#include "mutalg/seed.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "mutalg/error.hpp"
#include "mutalg/substitute.hpp"

namespace mutalg {

std::optional<std::size_t> ExchangeMatrix::column_of(std::size_t vertex) const {
  auto it = std::find(mutable_vertices.begin(), mutable_vertices.end(), vertex);
  if (it == mutable_vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - mutable_vertices.begin());
}

long ExchangeMatrix::at(std::size_t j, std::size_t k) const {
  auto c = column_of(k);
  if (!c) throw Error("vertex " + std::to_string(k + 1) + " is frozen");
  return b(j, *c);
}

IntMatrix ExchangeMatrix::principal_part() const {
  std::size_t m = mutable_vertices.size();
  IntMatrix p(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) p(r, c) = b(mutable_vertices[r], c);
  }
  return p;
}

ExchangeMatrix quiver_to_matrix(const Quiver& q) {
  ExchangeMatrix out;
  for (std::size_t v = 0; v < q.frozen.size(); ++v) {
    if (!q.frozen[v]) out.mutable_vertices.push_back(v);
  }
  out.b = IntMatrix(q.frozen.size(), out.mutable_vertices.size());
  for (const Arrow& a : q.arrows) {
    if (a.source >= q.frozen.size() || a.target >= q.frozen.size()) throw Error("arrow endpoint out of range");
    if (a.source == a.target) throw Error("quiver loops are not allowed");
    if (auto c = out.column_of(a.target)) out.b(a.source, *c) += a.multiplicity;
    if (auto c = out.column_of(a.source)) out.b(a.target, *c) -= a.multiplicity;
  }
  return out;
}

ExchangeMatrix matrix_mutate(const ExchangeMatrix& m, std::size_t k) {
  auto kc = m.column_of(k);
  if (!kc) throw Error("cannot mutate at frozen vertex " + std::to_string(k + 1));
  ExchangeMatrix out = m;
  for (std::size_t i = 0; i < m.b.rows(); ++i) {
    for (std::size_t c = 0; c < m.b.cols(); ++c) {
      std::size_t j = m.mutable_vertices[c];
      if (i == k || j == k) {
        out.b(i, c) = -m.b(i, c);
        continue;
      }
      long bik = m.b(i, *kc);
      long bkj = m.b(k, c);
      long prod = bik * bkj;
      if (prod > 0) out.b(i, c) = m.b(i, c) + (bik > 0 ? prod : -prod);
    }
  }
  return out;
}

std::optional<std::vector<long>> is_skew_symmetrizable(const IntMatrix& b) {
  std::size_t n = b.rows();
  if (b.cols() != n) throw Error("skew-symmetrizability needs a square matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((b(i, j) == 0) != (b(j, i) == 0)) return std::nullopt;
      if (b(i, j) != 0 && (b(i, j) > 0) == (b(j, i) > 0)) return std::nullopt;
    }
  }
  // d_i b_ij = -d_j b_ji, propagated along a spanning forest of the support graph.
  std::vector<std::optional<Rational>> d(n);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root]) continue;
    components.emplace_back();
    d[root] = Rational(1);
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      std::size_t i = todo.front();
      todo.pop();
      components.back().push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0 || d[j]) continue;
        d[j] = Rational(-*d[i] * b(i, j) / b(j, i));
        todo.push(j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (*d[i] * b(i, j) != -*d[j] * b(j, i)) return std::nullopt;
    }
  }
  std::vector<long> out(n);
  for (const auto& comp : components) {
    mpz_class l = 1;
    for (std::size_t i : comp) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[i]->get_den_mpz_t());
    mpz_class g = 0;
    for (std::size_t i : comp) {
      mpz_class v = d[i]->get_num() * (l / d[i]->get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    for (std::size_t i : comp) {
      mpz_class v = d[i]->get_num() * (l / d[i]->get_den()) / g;
      if (!v.fits_slong_p()) throw Error("skew-symmetrizer entry out of range");
      out[i] = v.get_si();
    }
  }
  return out;
}

namespace {

void check_principal_part(const ExchangeMatrix& b) {
  if (b.b.cols() != b.mutable_vertices.size()) throw Error("exchange matrix column count mismatch");
  for (std::size_t v : b.mutable_vertices) {
    if (v >= b.b.rows()) throw Error("mutable vertex out of range");
  }
  if (!is_skew_symmetrizable(b.principal_part())) {
    throw Error("principal part of the exchange matrix is not skew-symmetrizable");
  }
}

}  // namespace

Seed::Seed(std::vector<std::string> labels, ExchangeMatrix b, std::vector<std::string> names)
    : Seed(labels, b, names, VariableContext(names), coordinate_images(VariableContext(names))) {}

Seed::Seed(std::vector<std::string> labels, ExchangeMatrix b, std::vector<std::string> names,
           VariableContext ambient, std::vector<RationalFunction> ledger)
    : labels_(std::move(labels)),
      matrix_(std::move(b)),
      base_names_(std::move(names)),
      counts_(labels_.size(), 0),
      ambient_(std::move(ambient)),
      initial_(base_names_),
      ledger_(std::move(ledger)) {
  if (matrix_.b.rows() != labels_.size()) throw Error("exchange matrix row count does not match the vertices");
  if (base_names_.size() != labels_.size()) throw Error("one variable name per vertex is required");
  if (ledger_.size() != labels_.size()) throw Error("one ledger entry per vertex is required");
  for (const auto& f : ledger_) {
    if (!(f.context() == ambient_)) throw Error("ledger entry outside the ambient context");
    if (f.is_zero()) throw Error("ledger entries must be nonzero");
  }
  check_principal_part(matrix_);
  if (ambient_ == initial_ && ledger_ == coordinate_images(initial_)) inverse_ = ledger_;
}

std::size_t Seed::vertex(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error("unknown vertex '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::string> Seed::names() const {
  std::vector<std::string> out(base_names_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = counts_[i] == 0 ? base_names_[i] : base_names_[i] + "_" + std::to_string(counts_[i]);
  }
  return out;
}

VariableContext Seed::cluster_context() const { return VariableContext(names()); }

bool Seed::is_initial() const {
  return std::all_of(counts_.begin(), counts_.end(), [](long c) { return c == 0; });
}

void Seed::set_inverse_ledger(std::vector<RationalFunction> images) {
  if (images.size() != ambient_.size()) throw Error("inverse ledger needs one image per ambient variable");
  for (const auto& f : images) {
    if (!(f.context() == initial_)) throw Error("inverse ledger images must use the initial cluster variables");
  }
  if (!is_initial()) throw Error("inverse ledger can only be attached to an initial seed");
  auto back = coordinate_images(initial_);
  for (std::size_t i = 0; i < ledger_.size(); ++i) {
    if (!(substitute(ledger_[i], images, initial_) == back[i])) {
      throw Error("inverse ledger does not invert the ledger at vertex '" + labels_[i] + "'");
    }
  }
  auto amb = coordinate_images(ambient_);
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (!(substitute(images[a], ledger_, ambient_) == amb[a])) {
      throw Error("inverse ledger image of '" + ambient_.name(a) + "' is not a right inverse");
    }
  }
  inverse_ = std::move(images);
}

std::pair<LaurentPolynomial, LaurentPolynomial> exchange_binomials(const Seed& s, std::size_t k) {
  const ExchangeMatrix& m = s.matrix();
  auto kc = m.column_of(k);
  if (!kc) throw Error("vertex '" + s.labels().at(k) + "' is frozen");
  VariableContext ctx = s.cluster_context();
  Exponent plus(s.size(), 0), minus(s.size(), 0);
  for (std::size_t j = 0; j < s.size(); ++j) {
    long v = m.b(j, *kc);
    if (v > 0) plus[j] = v;
    if (v < 0) minus[j] = -v;
  }
  return {LaurentPolynomial::monomial(ctx, plus), LaurentPolynomial::monomial(ctx, minus)};
}

bool is_degenerate_direction(const Seed& s, std::size_t k) {
  auto kc = s.matrix().column_of(k);
  if (!kc) throw Error("vertex '" + s.labels().at(k) + "' is frozen");
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s.matrix().b(j, *kc) != 0) return false;
  }
  return true;
}

Seed seed_mutate(const Seed& s, std::size_t k) {
  if (k >= s.size()) throw Error("vertex index out of range");
  auto [plus, minus] = exchange_binomials(s, k);
  RationalFunction numerator = substitute(plus + minus, s.ledger_, s.ambient_);
  Seed out = s;
  out.matrix_ = matrix_mutate(s.matrix_, k);
  out.ledger_[k] = numerator / s.ledger_[k];
  out.counts_[k] += 1;
  return out;
}

Seed mutate_sequence(const Seed& s, const std::vector<std::size_t>& ks) {
  Seed out = s;
  for (std::size_t k : ks) out = seed_mutate(out, k);
  return out;
}

bool is_maximal_rank(const ExchangeMatrix& b) { return rank(b.b) == b.b.cols(); }
bool is_maximal_rank(const Seed& s) { return is_maximal_rank(s.matrix()); }

bool is_primitive_seed(const ExchangeMatrix& b) {
  for (std::size_t c = 0; c < b.b.cols(); ++c) {
    long g = 0;
    for (std::size_t r = 0; r < b.b.rows(); ++r) g = std::gcd(g, b.b(r, c));
    if (g != 1) return false;
  }
  return true;
}
bool is_primitive_seed(const Seed& s) { return is_primitive_seed(s.matrix()); }

}  // namespace mutalg
