#pragma once

#include "binform/binary_form.hpp"

#include <string>
#include <utility>

namespace binform {

struct FormInput {
    std::string source;
    BinaryForm form;
    std::pair<std::string, std::string> vars{"x", "y"};
};

// Recursive-descent parse of +, -, *, ^ over two variables and rational
// literals (e.g. "3/2"), with implicit multiplication ("2x^3y"). The result
// must be homogeneous of degree 2..6.
// Throws SyntaxError (with byte offset), NotHomogeneous, UnsupportedDegree.
FormInput parse_form(const std::string& text, const std::string& var_x = "x",
                     const std::string& var_y = "y");

// Parse a leading-first comma-separated coefficient list "a_d,...,a_0".
BinaryForm parse_coeff_list(const std::string& text);

}  // namespace binform
