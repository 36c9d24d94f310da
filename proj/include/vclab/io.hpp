#ifndef VCLAB_IO_HPP
#define VCLAB_IO_HPP

#include "vclab/search.hpp"
#include "vclab/shatter.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace vclab {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;
std::string_view library_version() noexcept;

/// Integers that fit in 64 bits become JSON numbers, everything else "num/den".
Json to_json(const Scalar &x);
/// Accepts JSON integers and strings; floats are rejected with Parse.
Scalar scalar_from_json(const Json &j);
ExtendedScalar extended_from_json(const Json &j);

Json to_json(const Point &p);
/// {"dim": d, "points": [[...], ...]}
Json to_json(const PointSet &s);
/// Throws Parse on malformed input, including duplicate points and wrong arity.
PointSet point_set_from_json(const Json &j);
PointSet parse_point_set(std::string_view text);
PointSet read_point_set_file(const std::string &path);

/// [["lo", "hi"], ...] with "-inf" and "inf" for unbounded sides.
Json to_json(const Box &b);
Box box_from_json(const Json &j);

/// {"type": "box" | "cube" | "cut", ...}
Json to_json(const Concept &region);
Concept concept_from_json(const Json &j);

/// {"kind", "dim", "anchor"}; anchor is null unless the class is anchored.
Json to_json(const ClassDescriptor &cls);
ClassDescriptor class_from_json(const Json &j);

/// Bit string ("0110", little-endian) or index list ("1,2", "{1,2}", "[1,2]", "" or "{}" for empty).
/// Throws InvalidArgument when the width does not match n.
SubsetMask parse_mask(std::string_view text, std::size_t n);
/// Index-list form, e.g. "{0,2}".
std::string mask_indices(const SubsetMask &mask);

/// {"set", "class", "witnesses": [{"mask", "region"}, ...]} with witnesses in mask order.
Json to_json(const ShatteringCertificate &cert);
ShatteringCertificate certificate_from_json(const Json &j);

Json to_json(const OrderConfig &config);

std::string sha256_hex(std::string_view data);
/// Digest of the compact serialisation.
std::string digest(const Json &j);

/// Copy of j with every "wall_time_seconds" member removed, at any depth.
Json without_timing(const Json &j);

} // namespace vclab

#endif
