#pragma once

#include <string>

#include "alexbq/groebner.hpp"
#include "alexbq/ideals.hpp"
#include "alexbq/invariants.hpp"
#include "alexbq/presentation.hpp"

namespace alexbq {

// Compact single-line JSON documents; polynomials appear in the text format
// accepted by parse_laurent and parse_poly4.
std::string matrix_json(const PresentationMatrix& m);
std::string ideal_json(const ElementaryIdeal& ideal);
std::string basis_json(const GroebnerBasis& b);
/// {name, options, levels: [{k, principal, groebner: {order, elements}, cardinality, sum, max}]}
std::string report_json(const InvariantReport& r);

}  // namespace alexbq
