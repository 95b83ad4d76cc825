#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "brouwerlab/brouwer.hpp"
#include "brouwerlab/logic.hpp"
#include "brouwerlab/order.hpp"

namespace brouwerlab {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws BadInput with the byte offset of a
/// parse error as witness.
Json load_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

/// {"size": n, "labels": [...], "leq": [[i, j], ...]} listing the non-reflexive pairs.
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);

/// {"poset": {...}, "join": [[a, b, a+b], ...]} or {"poset": {...}, "derive_join": true}.
Json usl_to_json(const UpperSemilattice& u);
UpperSemilattice usl_from_json(const Json& j);

/// Flat row-major tables: {"size", "leq", "meet", "join", "arrow", "bottom",
/// "top", "provenance", "labels"}. Round trips bit-exactly.
Json algebra_to_json(const BrouwerAlgebra& b);
BrouwerAlgebra algebra_from_json(const Json& j);

/// {"members": [...]} or a bare array of element indices.
Mask downset_from_json(const Json& j, const Poset& host);

/// [{"name", "formula", "expect"}], expect defaulting to "free".
Corpus corpus_from_json(const Json& j);
Json corpus_to_json(const Corpus& c);

/// "canned:<poset>" such as canned:chain(3), or a file path.
Poset load_poset(const std::string& source);
/// "canned:powerset(n)", "canned:boolean_reverse(n)", "canned:<poset>" with
/// the derived join, or a file path.
UpperSemilattice load_usl(const std::string& source);
/// "canned:B<n>", "canned:up:<poset>", or a file path holding tables.
BrouwerAlgebra load_algebra(const std::string& source, bool allow_large = false);
Corpus load_corpus(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace brouwerlab
