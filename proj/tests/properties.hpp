#pragma once

#include <cstdint>
#include <string>

namespace properties {

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;
};

Outcome mutation_involution(std::uint64_t seed, std::size_t seeds = 500);
Outcome structure_preservation(std::uint64_t seed, std::size_t seeds = 500);
Outcome laurent_regression(std::uint64_t seed, std::size_t seeds = 300);
Outcome datum_bridge(std::uint64_t seed, std::size_t seeds = 200);
Outcome valuation_additivity(std::uint64_t seed, std::size_t cases = 300);
Outcome multiplicity_additivity(std::uint64_t seed, std::size_t cases = 200);
Outcome membership_closure(std::uint64_t seed, std::size_t cases = 60);
Outcome graded_compatibility(std::uint64_t seed, std::size_t cases = 200);

}  // namespace properties
