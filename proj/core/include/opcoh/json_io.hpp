#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "opcoh/coherence.hpp"
#include "opcoh/complex.hpp"
#include "opcoh/geometry.hpp"
#include "opcoh/homotopy.hpp"
#include "opcoh/nesting.hpp"
#include "opcoh/path.hpp"
#include "opcoh/tree.hpp"

// Every top-level document carries "schema": "v1". Readers throw FormatError
// naming the offending field.
namespace opcoh::io {

using nlohmann::json;

inline constexpr const char* kSchema = "v1";

/// {"schema":"v1","vertices":[{"id":0,"label":"k","children":[1],"leafSlots":[0,1]}]}
json tree_to_json(const PlanarTree& t);
PlanarTree tree_from_json(const json& j);

/// Sorted arrays of sorted vertex ids.
json nesting_to_json(const Nesting& n);
Nesting nesting_from_json(const PlanarTree& t, const json& j);

/// {"schema":"v1","vertices":N,"edges":[[a,b]],"cells":[[v0,"+e0",v1,"-e3",...]]}
json complex_to_json(const Complex2& c);
/// Validates the result.
Complex2 complex_from_json(const json& j);

/// Array of 0/1; a document {"orientation":[...]} is also accepted.
json orientation_to_json(const Orientation& o);
Orientation orientation_from_json(const Complex2& c, const json& j);

/// {"schema":"v1","start":v,"steps":[[e,1],[e,-1]]}
json path_to_json(const CombinatorialPath& p);
CombinatorialPath path_from_json(const json& j);

/// Source and target paths plus the move list, with the complex embedded so the
/// document can be checked on its own.
json certificate_to_json(const Complex2& c, const HomotopyCertificate& cert);
HomotopyCertificate certificate_from_json(const json& j);
/// The embedded complex. Throws FormatError when absent.
Complex2 certificate_complex(const json& j);

/// {"schema":"v1","object":"((a:1 o1 b:1) o1 c:1)","moves":[{"removed":[0,1],"added":[1,2],"sign":1}]}
json word_to_json(const MorphismWord& w);
MorphismWord word_from_json(const json& j);

/// {"schema":"v1","dimension":d,"points":{"0":["3/1","2/1","1/1"]}}
json realization_to_json(const std::vector<RationalPoint>& points);
std::vector<RationalPoint> realization_from_json(const json& j);

json morse_to_json(const MorseResult& r);

/// Parses text, or throws FormatError with the line and column.
json parse(std::string_view text, std::string_view origin);
json read_file(const std::string& path);

/// Writes through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& contents);

/// Two-space indentation and a trailing newline.
std::string dump(const json& j);

}  // namespace opcoh::io
