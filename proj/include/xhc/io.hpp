#pragma once

#include <string>

#include "xhc/cartan.hpp"
#include "xhc/homology.hpp"

namespace xhc {

/// File parsing (throws ParseError on malformed input, including syntax
/// errors, unknown names, non-prime characteristics, and float coefficients)
/// and canonical serialization. Serialized output is byte-stable: fixed key
/// order, two-space indentation, trailing newline.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Algebra file: {"field":{"kind":"rational"|"prime","p":..}, "basis":
/// [{"name","degree"}], "unit":"..", "products":[{"left","right","result":
/// [{"basis","coeff"}]}], "differential":[{"on","result":[..]}]}. Omitted
/// differential rows are zero; omitted products are zero except the unit
/// laws, which are filled in. Coefficients are integer or "p/q" strings.
DGAlgebra parse_algebra(const std::string& text);
std::string algebra_to_json(const DGAlgebra& a);

/// Group file: {"elements":[..], "table":[[..]], "identity":"..",
/// "action":{"<elem>":[{"on":"<basis>","result":[{"basis","coeff"}]}]}}.
/// Table entries are element names; omitted action rows act as the identity
/// on that basis element.
GroupAction parse_group(const std::string& text, const DGAlgebra& a);
std::string group_to_json(const GroupAction& act, const DGAlgebra& a);

/// Cochain file: {"arity","map_degree","values":[{"args":[..],"result":
/// [{"basis","coeff"}]}]}. Omitted argument tuples are zero; argument names
/// must be non-unit basis elements.
Cochain parse_cochain(const std::string& text, const DGAlgebra& a);
std::string cochain_to_json(const Cochain& d);

std::string homology_table_to_json(const HomologyTable& t);
std::string identity_reports_to_json(const std::vector<IdentityReport>& reports);
std::string certificate_to_json(const SignCertificate& cert);
std::string decomposition_to_json(const DecompositionReport& rep);
std::string violations_to_json(const std::vector<Violation>& v);

}  // namespace xhc
