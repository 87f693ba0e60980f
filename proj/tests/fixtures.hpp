#ifndef HOMSUPER_TESTS_FIXTURES_HPP
#define HOMSUPER_TESTS_FIXTURES_HPP

#include <string>

#include "homsuper/cli_format.hpp"

inline homsuper::HomLieSuperAlgebra fx(const std::string& name) {
  return homsuper::load_algebra_file(std::string(HOMSUPER_FIXTURE_DIR) + "/" + name + ".halg");
}

#endif
