#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mutalg {

/// Ordered list of distinct variable names shared by polynomials.
///
/// Copies share the same immutable storage. Two contexts compare equal when
/// their name lists are equal.
class VariableContext {
 public:
  VariableContext();
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const;
  const std::string& name(std::size_t index) const;
  const std::vector<std::string>& names() const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Context with `extra` appended; throws on duplicates.
  VariableContext extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

bool is_identifier(std::string_view text);

}  // namespace mutalg
