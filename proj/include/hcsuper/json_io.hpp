#ifndef HCSUPER_JSON_IO_HPP
#define HCSUPER_JSON_IO_HPP

#include "hcsuper/catalog.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hcsuper {

// nlohmann::json keeps object keys sorted, which gives the canonical key order.
using Json = nlohmann::json;

// Every loader throws ParseError on malformed or unexpected input.

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// [{"k", "coeff"}] in index order.
Json vector_to_json(const SparseVec& v);
SparseVec vector_from_json(const Json& j, std::size_t dim);

Json algebra_to_json(const LieSuperalgebra& g);
/// Rejects unknown fields; does not validate the structure constants.
LieSuperalgebra algebra_from_json(const Json& j);

/// [{"monomial", "coeff"}] in canonical monomial order.
Json uea_to_json(const UEAElement& u);
/// Monomials are arbitrary words in the basis of env's algebra; they are multiplied out.
UEAElement uea_from_json(const Json& j, const EnvelopingAlgebra& env);

/// [{"coeff", "exponents": {name: power}}], zero powers omitted.
Json poly_to_json(const APolynomial& p, const std::vector<std::string>& names);
/// Accepts the list form, a single exponent map {name: power} (coefficient 1)
/// or a bare variable name.
APolynomial poly_from_json(const Json& j, const std::vector<std::string>& names);
/// Parses text as JSON, falling back to a bare variable name.
APolynomial poly_from_text(const std::string& text, const std::vector<std::string>& names);

Json roots_to_json(const PairData& entry);
Json exact_sequence_to_json(const ExactSequenceReport& r);
/// Timing is left out unless asked for, so that reports are reproducible byte for byte.
Json report_to_json(const VerificationReport& r, bool with_timing = false);
Json violations_to_json(const LieSuperalgebra& g, const ValidationReport& report);

} // namespace hcsuper

#endif
