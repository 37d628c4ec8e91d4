#pragma once

#include <string>

#include "hyperclass/diffop.hpp"

namespace hyperclass {

/// Parses expressions such as "w*(1-w)*D + 1/2*(alpha+beta+1)".
///
/// Names: w, v, alpha, beta, mu, theta, lambda, i (imaginary unit) and D,
/// the derivative in the working variable. Products are compositions, so D
/// acts on everything to its right. Division and powers are only allowed on
/// multiplication operators (integer exponents).
DiffOperator parse_operator(const std::string& text, Sym var = Sym::w);

// The expression must be free of D.
RatFun parse_ratfun(const std::string& text);
// The expression must be a polynomial.
MultiPoly parse_poly(const std::string& text);

}  // namespace hyperclass
