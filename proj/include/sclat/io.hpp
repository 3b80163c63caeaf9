#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "sclat/asc.hpp"
#include "sclat/extension.hpp"
#include "sclat/geometry.hpp"
#include "sclat/scaled.hpp"

namespace sclat::io {

using Json = nlohmann::json;

inline constexpr std::string_view format_tag = "sclat/1";

Json to_json(const PosetPresentation& p);  // canonical order
PosetPresentation poset_from_json(const Json& j);

// {"format", "d", "poset", "dimlabel", optional "asc"}.
struct LatticeFile {
  ScaledBase base;
  std::optional<AscBase> asc;  // present when the file has an "asc" object
};

Json lattice_to_json(const ScaledBase& base);
Json lattice_to_json(const AscBase& base);
LatticeFile lattice_from_json(const Json& j);

// Elements are written as the sorted names of their maximal points.
Json element_to_json(const ScaledBase& base, PointSet downset);
PointSet element_from_json(const ScaledBase& base, const Json& j);

Json signature_to_json(const ScaledBase& base, const Signature& s);
Signature signature_from_json(const ScaledBase& base, const Json& j);
Json signature_to_json(const AscBase& base, const AscSignature& s);
AscSignature asc_signature_from_json(const AscBase& base, const Json& j);

// {"ambient", "varieties": [{"axes": [1-based], "basepoint": {"j": "p/q"}}]}.
Json sls_to_json(const LinearSet& s);
LinearSet sls_from_json(const Json& j);

// Map file written next to a representation: the source lattice and the
// image of every element.
Json representation_to_json(const ScaledBase& base, const Representation& r);
Json representation_to_json(const AscBase& base, const Representation& r);

Json parse_text(std::string_view text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
std::string dump(const Json& j);  // two-space indent, trailing newline

}  // namespace sclat::io
