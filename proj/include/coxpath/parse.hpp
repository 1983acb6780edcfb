#pragma once

#include <string>

#include "coxpath/lincomb.hpp"

namespace coxpath {

/* Canonical text form, tip first:
 *   element   := ["-"] term (" + " | " - ") term ...
 *   path term := [coeff "*"] "[" name ("," name)* "]"
 *   word term := [coeff "*"] factor ("*" factor)* | coeff
 *   factor    := "x[" name "," name "]" | "X[" name "," name "]" | "1"
 *   coeff     := integer | integer "/" integer
 * X[] is the barred letter; zero prints as "0".  parse accepts arbitrary
 * whitespace and signs attached to coefficients. */

std::string print_rational(const Rational& q);
std::string print_path(const PathMono& p, const CoxeterMatrix& names);
std::string print_element(const LinComb<PathMono>& x, const CoxeterMatrix& names);
std::string print_word_element(const LinComb<WordMono>& x, const CoxeterMatrix& base);

/* Vertex words that are not paths are an error unless lax_paths, which maps
 * them to zero. Throws std::invalid_argument with a column position. */
LinComb<PathMono> parse_element(const std::string& text, const CoxeterMatrix& names,
                                bool lax_paths = false);
LinComb<WordMono> parse_word_element(const std::string& text, const CoxeterMatrix& base);

} // namespace coxpath
