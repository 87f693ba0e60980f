#ifndef HOMSUPER_CLI_REPORTS_HPP
#define HOMSUPER_CLI_REPORTS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homsuper/core_algebra.hpp"
#include "homsuper/ideals.hpp"
#include "json.hpp"

namespace homsuper {

// Key order in these documents is insertion order and part of the output
// contract: identical inputs produce identical bytes.
using Json = nlohmann::ordered_json;

Json verify_report(const HomLieSuperAlgebra& a);
Json analyze_report(const HomLieSuperAlgebra& a);
Json killing_report(const HomLieSuperAlgebra& a);
Json forms_report(const HomLieSuperAlgebra& a);

// Labeled seed vectors; all basis vectors when empty.
Json ideals_report(const HomLieSuperAlgebra& a,
                   const std::vector<std::pair<std::string, Vec>>& seeds,
                   const IdealSpec& spec);

Json decompose_report(const HomLieSuperAlgebra& a);
// No parity filter: both parities.
Json derivations_report(const HomLieSuperAlgebra& a, long k, std::optional<Parity> parity);
Json criterion_report(const HomLieSuperAlgebra& a);

// Indented key: value rendering of a report document.
void render_text(std::ostream& out, const Json& doc);

}  // namespace homsuper

#endif
