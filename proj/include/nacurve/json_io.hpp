#ifndef NACURVE_JSON_IO_HPP
#define NACURVE_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "nacurve/cover.hpp"
#include "nacurve/disk.hpp"
#include "nacurve/disk_tree.hpp"
#include "nacurve/skeleton.hpp"

namespace nacurve {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Rationals serialize as integers when integral (and small enough for a JSON
// number), as canonical "num/den" strings otherwise; parsing accepts both forms.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json valuation_to_json(const Valuation& v);  // "inf" for infinity

Json disk_to_json(const ClosedDisk& d);
ClosedDisk disk_from_json(const Json& j, const Int& prime);

struct DisksDocument {
    Int prime;
    std::vector<ClosedDisk> disks;
};

// {"schema_version":1, "prime":p, "disks":[{"center":..,"v":..},...]}
DisksDocument parse_disks_document(const Json& j);

Json tree_to_json(const DiskTree& t);
DiskTree parse_tree_document(const Json& j);

// {"schema_version":1, "vertices":[{"g":..},...], "edges":[[u,v],...],
//  "legs":[v,...], "thickness":[..]? }
Json skeleton_to_json(const Skeleton& s);
Skeleton parse_skeleton_document(const Json& j);

struct CoverDocument {
    CoverSpec spec;
    std::optional<Skeleton> x_skeleton;
    std::optional<Int> ell;
};

// Full cover spec document; see README for the schema. The base collection must
// already be closed (run the tree subcommand to close a raw collection first).
CoverDocument parse_cover_document(const Json& j);

// Reads either a file or standard input ("" or "-"). Throws std::runtime_error
// with a parse diagnostic on malformed JSON.
Json load_json(const std::string& path);

// Canonical text form used by every CLI output (sorted keys, 2-space indent,
// trailing newline) so identical inputs produce byte-identical output.
std::string dump_canonical(const Json& j);

}  // namespace nacurve

#endif
