#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutalg/matrix.hpp"
#include "mutalg/rational_function.hpp"

namespace mutalg {

struct Arrow {
  std::size_t source;
  std::size_t target;
  long multiplicity = 1;
};

/// Vertices are positions 0..n-1; `frozen[i]` marks frozen vertices.
struct Quiver {
  std::vector<bool> frozen;
  std::vector<Arrow> arrows;
};

/// B indexed by all vertices (rows) and the mutable vertices (columns), with
/// column c belonging to vertex mutable_vertices[c].
struct ExchangeMatrix {
  IntMatrix b;
  std::vector<std::size_t> mutable_vertices;

  std::size_t vertex_count() const { return b.rows(); }
  std::optional<std::size_t> column_of(std::size_t vertex) const;
  /// b_{j,k} for vertex j and mutable vertex k.
  long at(std::size_t j, std::size_t k) const;
  /// The mutable-by-mutable block, rows and columns in mutable_vertices order.
  IntMatrix principal_part() const;
  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) = default;
};

/// b_{jk} = #(j -> k) - #(k -> j) for every vertex j and mutable vertex k.
/// Arrows between two frozen vertices are ignored.
ExchangeMatrix quiver_to_matrix(const Quiver& q);

/// Mutation in direction k (a vertex index). Throws if k is frozen.
ExchangeMatrix matrix_mutate(const ExchangeMatrix& b, std::size_t k);

/// Positive integer diagonal D with D*B skew-symmetric, or nullopt.
std::optional<std::vector<long>> is_skew_symmetrizable(const IntMatrix& square);

/// A seed of geometric type together with its ledger: every cluster variable
/// written as a rational function over a fixed ambient context.
class Seed {
 public:
  /// Initial seed whose ledger is the identity on `names`.
  Seed(std::vector<std::string> labels, ExchangeMatrix b, std::vector<std::string> names);
  /// Initial seed with explicit ledger over `ambient`. Throws if the ledger
  /// size does not match or the principal part is not skew-symmetrizable.
  Seed(std::vector<std::string> labels, ExchangeMatrix b, std::vector<std::string> names,
       VariableContext ambient, std::vector<RationalFunction> ledger);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Vertex index of a label; throws when absent.
  std::size_t vertex(const std::string& label) const;
  bool is_frozen(std::size_t v) const { return !matrix_.column_of(v).has_value(); }
  const ExchangeMatrix& matrix() const { return matrix_; }

  /// Current cluster variable names (base name plus mutation count suffix).
  std::vector<std::string> names() const;
  /// Context of the current cluster variables.
  VariableContext cluster_context() const;
  const std::vector<std::string>& base_names() const { return base_names_; }
  const std::vector<long>& mutation_counts() const { return counts_; }

  const VariableContext& ambient() const { return ambient_; }
  const std::vector<RationalFunction>& ledger() const { return ledger_; }

  /// Images of the ambient variables in the initial cluster variables.
  const std::optional<std::vector<RationalFunction>>& inverse_ledger() const { return inverse_; }
  /// Installs the inverse ledger after checking both composites are identities.
  void set_inverse_ledger(std::vector<RationalFunction> images);
  /// Context of the initial cluster, the domain of inverse_ledger.
  const VariableContext& initial_context() const { return initial_; }
  /// True when no mutation has been applied.
  bool is_initial() const;

  friend Seed seed_mutate(const Seed& s, std::size_t k);

 private:
  std::vector<std::string> labels_;
  ExchangeMatrix matrix_;
  std::vector<std::string> base_names_;
  std::vector<long> counts_;
  VariableContext ambient_;
  VariableContext initial_;
  std::vector<RationalFunction> ledger_;
  std::optional<std::vector<RationalFunction>> inverse_;
};

/// (prod x_j^[b_jk]+, prod x_j^[-b_jk]+) in the seed's own cluster variables.
std::pair<LaurentPolynomial, LaurentPolynomial> exchange_binomials(const Seed& s, std::size_t k);

/// True when column k is zero; the exchange relation then reads x_k x_k' = 2.
bool is_degenerate_direction(const Seed& s, std::size_t k);

Seed seed_mutate(const Seed& s, std::size_t k);
Seed mutate_sequence(const Seed& s, const std::vector<std::size_t>& ks);

bool is_maximal_rank(const Seed& s);
bool is_maximal_rank(const ExchangeMatrix& b);
bool is_primitive_seed(const Seed& s);
bool is_primitive_seed(const ExchangeMatrix& b);

}  // namespace mutalg
