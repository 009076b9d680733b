#ifndef KAL_JSON_IO_HPP
#define KAL_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "kal/model.hpp"
#include "kal/set_system.hpp"

namespace kal {

// Key order is part of the file format (byte-reproducible outputs), so all
// serialization uses ordered_json. Rationals travel as "num/den" strings,
// never as floats.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"n": int, "weights": ["p/q", ...], "capacity": "p/q"}
Json to_json(const KnapsackInstance& inst);
KnapsackInstance instance_from_json(const Json& j);

/// {"n": int, "rows": [{"coeffs": [...], "rhs": "p/q"}, ...]}
Json to_json(const LinearSystem& sys);
LinearSystem linear_system_from_json(const Json& j);

Json to_json(const DownMonotoneSystem& sys);
DownMonotoneSystem system_from_json(const Json& j);

/// {"p": int, "d": int, "sets": [[indices], ...]} in family order.
Json to_json(const SetSystem& sys);
SetSystem set_system_from_json(const Json& j);

Json to_json(const PairPolicy& policy);
PairPolicy pair_policy_from_json(const Json& j);

/// Reads a whole file; paths ending in ".gz" (or files starting with the
/// gzip magic) are decompressed transparently.
std::string read_text_file(const std::string& path);

/// Writes a whole file; a ".gz" suffix selects gzip compression.
void write_text_file(const std::string& path, const std::string& content);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

} // namespace kal

#endif // KAL_JSON_IO_HPP
