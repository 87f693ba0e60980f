#ifndef HOMSUPER_CLI_FORMAT_HPP
#define HOMSUPER_CLI_FORMAT_HPP

#include <iosfwd>
#include <string>

#include "homsuper/core_algebra.hpp"

namespace homsuper {

// Line-oriented description: name / even / odd / alpha / bracket lines.
// '#' starts a comment, omitted brackets are zero, and the table is completed
// by super skew-symmetry. Violations throw ParseError with a 1-based line.
HomLieSuperAlgebra parse_algebra(std::istream& in);
HomLieSuperAlgebra parse_algebra_string(const std::string& text);
HomLieSuperAlgebra load_algebra_file(const std::string& path);

// Canonical form: parse(serialize(a)) == a and serialize is idempotent.
std::string serialize_algebra(const HomLieSuperAlgebra& a);

bool is_valid_identifier(const std::string& s);

}  // namespace homsuper

#endif
