#ifndef MHG_IO_HPP
#define MHG_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mhg/enumerate.hpp"
#include "mhg/metric_space.hpp"
#include "mhg/params.hpp"

namespace mhg {

using nlohmann::json;

/// {"n": <int>, "upper": [<int>...]}, row-major upper triangle.
json to_json(const MetricSpace& a);
MetricSpace space_from_json(const json& j);

/// Integer or the string "inf".
json to_json(ExtNat e);
ExtNat extnat_from_json(const json& j);

/// {"delta":3,"k1":1,"k2":3,"c0":10,"c1":11,"henson":[<space>...]}
json to_json(const ParameterSequence& p);
ParameterSequence params_from_json(const json& j);

/// {"code": [...], "n": ..., "upper": [...]}
json to_json(const TypeEntry& t);
/// One JSON object per line, in level order.
void write_dump(std::ostream& os, const Level& level);

json to_json(const Profile& p);
json to_json(const Census& c);

/// Parses a file, or the argument itself when it starts with '{' or '['.
json load_json(const std::string& path_or_inline);

}  // namespace mhg

#endif  // MHG_IO_HPP
