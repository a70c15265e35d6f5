#pragma once

// JSON documents and reports for the command-line front end.
//
// Documents describe inputs: a map document is {"n": int, "components":
// [poly-strings]} with an optional "coordinates" list of variable names
// (defaulting to x0..xn) and an optional "provenance" note; a family
// document additionally carries "param". Reports describe results; every
// report embeds the resolved configuration that produced it under
// "config", so identical inputs and seeds reproduce byte-identical output.
//
// Exact values never pass through floating point: rationals, primes, and
// seeds are serialized as strings.

#include <cstdint>
#include <string>
#include <vector>

#include "cremona/birmap.hpp"
#include "cremona/family.hpp"
#include "cremona/jonquieres.hpp"
#include "cremona/oracle.hpp"
#include "json.hpp"

namespace cremona::docs {

using Json = nlohmann::ordered_json;

// Canonical rendering: two-space indent and a trailing newline.
std::string dump(const Json& j);

// Resolve a document argument: inline JSON when it starts with '{',
// a built-in document for "builtin:NAME", otherwise a file path.
Json load_document(const std::string& source);

std::vector<std::string> builtin_names();
Json builtin_document(const std::string& name);

bool is_family_document(const Json& doc);

// --- maps -----------------------------------------------------------------

Json map_to_json(const RationalMap& f, const std::string& provenance = "");
RationalMap map_from_json(const Json& doc);

// --- families -------------------------------------------------------------

Json family_to_json(const ParamWriting& w);
ParamWriting family_from_json(const Json& doc);

// --- reports --------------------------------------------------------------

Json map_info_report(const RationalMap& f);
Json identity_report(const RationalMap& f);
Json jacobian_report(const RationalMap& f);
Json powers_report(const RationalMap& f, int max_power);
Json compose_report(const RationalMap& f, const RationalMap& g);
Json conjugate_report(const RationalMap& f, const RationalMap& by);

Json jonq_check_report(const RationalMap& f);
Json rho_report(const RationalMap& f);
// h is a map of P^(n-1); accepts standard coordinates x0..x(n-1) (shifted
// onto the hyperplane coordinates x1..xn) or those coordinates directly.
Json sigma_report(const RationalMap& h, int ell);

Json family_deg_report(const ParamWriting& w);
Json stratify_report(const ParamWriting& w, const DropScanOptions& options);
Json scan_report(const ParamWriting& w, int samples, uint64_t seed,
                 const DropScanOptions& options);
Json family_compose_report(const ParamWriting& w1, const ParamWriting& w2);
Json reparam_report(const ParamWriting& w, const Mobius& mobius);

Json oracle_gcd_report(const std::vector<Poly>& polys, const OracleConfig& cfg);
Json oracle_identity_report(const RationalMap& f, const OracleConfig& cfg);
Json oracle_profile_report(const ParamWriting& w, int samples, const OracleConfig& cfg);

// Plain-text rendering of any report produced above.
std::string render_text(const Json& report);

}  // namespace cremona::docs
