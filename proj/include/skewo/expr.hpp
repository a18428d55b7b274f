#pragma once

// Text expressions for elements of Gamma x| U(sl2^{+n}):
//
//   atoms      e<i> f<i> h<i> (1-based), rational literals, parameters c d u v t<k>,
//              group atoms s(i,j) and cyc(i..j)
//   operators  + - * ^k, parentheses, commutators [a,b]
//
// Errors are ParseError with the 0-based offset and the expected token.

#include "skewo/pbw.hpp"

#include <string_view>

namespace skewo {

AlgebraElement parse_algebra_expr(std::string_view text, const GammaSpec& gamma);

}  // namespace skewo
