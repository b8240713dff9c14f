#pragma once

/**
 * @file json_io.hpp
 * @brief JSON wire formats for decompositions and verification reports.
 *
 * All big integers are serialized as decimal strings; key order is fixed so
 * identical inputs produce byte-identical output.
 */

#include "ratapprox/decompose.hpp"
#include "ratapprox/oracle.hpp"

#include <json.hpp>

#include <string>

namespace ratapprox {

nlohmann::ordered_json decomposition_json(const ProblemSpec& spec, const Decomposition& d);

struct ParsedDecomposition {
    ProblemSpec spec;
    Decomposition decomposition;
};

/// Inverse of decomposition_json; mode/epsilon are not part of the wire
/// format and come back as defaults. Throws std::domain_error on bad input.
ParsedDecomposition decomposition_from_json(const std::string& text);

nlohmann::ordered_json verification_json(const VerificationReport& report);

nlohmann::ordered_json oracle_json(const Int& a, const Int& q, int n, const Int& D,
                                   const OracleResult& result);

}  // namespace ratapprox
