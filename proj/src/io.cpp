#include "mhg/io.hpp"

#include <fstream>
#include <ostream>

namespace mhg {

json to_json(const MetricSpace& a) {
  return json{{"n", a.size()}, {"upper", std::vector<Distance>(a.upper().begin(), a.upper().end())}};
}

MetricSpace space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("upper"))
    throw InvalidInput("space must be an object with \"n\" and \"upper\"");
  if (!j["n"].is_number_integer() || !j["upper"].is_array()) throw InvalidInput("space fields have wrong types");
  std::vector<Distance> upper;
  for (const auto& v : j["upper"]) {
    if (!v.is_number_integer()) throw InvalidInput("distances must be integers");
    upper.push_back(v.get<Distance>());
  }
  return MetricSpace(j["n"].get<int>(), std::move(upper));
}

json to_json(ExtNat e) {
  if (!e.is_finite()) return "inf";
  return e.value();
}

ExtNat extnat_from_json(const json& j) {
  if (j.is_string()) return ExtNat::parse(j.get<std::string>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return ExtNat(j.get<std::int64_t>());
  throw InvalidParameters("expected a nonnegative integer or \"inf\", got " + j.dump());
}

json to_json(const ParameterSequence& p) {
  json henson = json::array();
  for (const auto& h : p.henson().constraints()) henson.push_back(to_json(h));
  return json{{"delta", p.delta()}, {"k1", to_json(p.k1())}, {"k2", to_json(p.k2())},
              {"c0", to_json(p.c0())},  {"c1", to_json(p.c1())}, {"henson", henson}};
}

ParameterSequence params_from_json(const json& j) {
  if (!j.is_object()) throw InvalidParameters("parameters must be a JSON object");
  for (const char* key : {"delta", "k1", "k2", "c0", "c1"})
    if (!j.contains(key)) throw InvalidParameters(std::string("missing parameter \"") + key + "\"");
  if (!j["delta"].is_number_integer()) throw InvalidParameters("delta must be an integer");
  std::vector<MetricSpace> henson;
  if (j.contains("henson")) {
    if (!j["henson"].is_array()) throw InvalidParameters("henson must be an array of spaces");
    for (const auto& h : j["henson"]) henson.push_back(space_from_json(h));
  }
  return ParameterSequence(j["delta"].get<int>(), extnat_from_json(j["k1"]), extnat_from_json(j["k2"]),
                           extnat_from_json(j["c0"]), extnat_from_json(j["c1"]), HensonSet(std::move(henson)));
}

json to_json(const TypeEntry& t) {
  return json{{"code", t.code.tokens()},
              {"n", t.rep.size()},
              {"upper", std::vector<Distance>(t.rep.upper().begin(), t.rep.upper().end())}};
}

void write_dump(std::ostream& os, const Level& level) {
  for (const auto& t : level) os << to_json(t).dump() << '\n';
}

namespace {

json counts_json(const std::vector<mpz_class>& v, std::size_t from) {
  json out = json::array();
  for (std::size_t i = from; i < v.size(); ++i) {
    if (v[i].fits_ulong_p())
      out.push_back(v[i].get_ui());
    else
      out.push_back(v[i].get_str());
  }
  return out;
}

}  // namespace

json to_json(const Profile& p) { return counts_json(p.counts, 0); }

json to_json(const Census& c) { return counts_json(c.counts, 1); }

json load_json(const std::string& path_or_inline) {
  if (!path_or_inline.empty() && (path_or_inline.front() == '{' || path_or_inline.front() == '[')) {
    try {
      return json::parse(path_or_inline);
    } catch (const json::parse_error& e) {
      throw InvalidInput(std::string("malformed inline JSON: ") + e.what());
    }
  }
  std::ifstream in(path_or_inline);
  if (!in) throw InvalidInput("cannot open " + path_or_inline);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON in " + path_or_inline + ": " + e.what());
  }
}

}  // namespace mhg
