#include "mutalg/context.hpp"

#include <unordered_map>

#include "mutalg/error.hpp"

namespace mutalg {

struct VariableContext::Data {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
};

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) return false;
  for (char c : text) {
    if (!alpha(c) && !digit(c)) return false;
  }
  return true;
}

VariableContext::VariableContext() : VariableContext(std::vector<std::string>{}) {}

VariableContext::VariableContext(std::vector<std::string> names) {
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_identifier(names[i])) throw Error("invalid variable name '" + names[i] + "'");
    if (!data->index.emplace(names[i], i).second) {
      throw Error("duplicate variable name '" + names[i] + "'");
    }
  }
  data->names = std::move(names);
  data_ = std::move(data);
}

std::size_t VariableContext::size() const { return data_->names.size(); }

const std::string& VariableContext::name(std::size_t index) const { return data_->names.at(index); }

const std::vector<std::string>& VariableContext::names() const { return data_->names; }

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

VariableContext VariableContext::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = data_->names;
  all.insert(all.end(), extra.begin(), extra.end());
  return VariableContext(std::move(all));
}

bool operator==(const VariableContext& a, const VariableContext& b) {
  return a.data_ == b.data_ || a.data_->names == b.data_->names;
}

}  // namespace mutalg
