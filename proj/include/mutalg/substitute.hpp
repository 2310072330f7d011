#pragma once

#include <map>
#include <string>
#include <vector>

#include "mutalg/rational_function.hpp"

namespace mutalg {

/// Ring homomorphism sending context variable i of f to images[i].
///
/// All images share one target context. Throws when the number of images does
/// not match f's arity, or when a variable with a negative exponent maps to 0.
RationalFunction substitute(const LaurentPolynomial& f, const std::vector<RationalFunction>& images,
                            const VariableContext& target);
RationalFunction substitute(const RationalFunction& f, const std::vector<RationalFunction>& images,
                            const VariableContext& target);

/// Name-keyed form; every variable of f's context must have an image.
RationalFunction substitute(const RationalFunction& f,
                            const std::map<std::string, RationalFunction>& images,
                            const VariableContext& target);

/// The identity images x_i -> x_i of a context.
std::vector<RationalFunction> coordinate_images(const VariableContext& ctx);

}  // namespace mutalg
