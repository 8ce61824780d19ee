#include "contrast/formats.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <sstream>

namespace contrast {

namespace {

using Json = nlohmann::ordered_json;

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& y : values) out.push_back(y.to_string());
  return out;
}

Json document() {
  Json doc = Json::object();
  doc["schema_version"] = kSchemaVersion;
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json witness_object(const Greyscale& f) {
  Json out = Json::object();
  for (int v = 0; v < f.size(); ++v) out[std::to_string(v)] = f[v].to_string();
  return out;
}

}  // namespace

std::string fk_json(const EnchainedSet& set) {
  Json doc = document();
  doc["k"] = set.k;
  doc["values"] = rationals(set.values);
  doc["cardinality"] = set.cardinality();
  if (set.strata) {
    Json strata = Json::array();
    for (const auto& s : *set.strata) strata.push_back(rationals(s));
    doc["strata"] = std::move(strata);
    doc["stratum_min_step"] = rationals(set.stratum_min_step);
  }
  return dump(doc);
}

std::string vector_json(std::string_view key, const std::vector<Rational>& tones) {
  Json doc = document();
  doc[std::string(key)] = rationals(tones);
  return dump(doc);
}

std::string macg_json(const MacgResult& result, int chromatic_number) {
  Json doc = document();
  doc["vector"] = rationals(result.vector.tones);
  doc["witness"] = witness_object(result.witness);
  doc["value_set"] = rationals(result.value_set);
  doc["nodes"] = result.nodes;
  doc["chromatic_number"] = chromatic_number;
  return dump(doc);
}

std::string rmacg_json(const RmacgResult& result) {
  Json doc = document();
  doc["vector"] = rationals(result.vector.tones);
  doc["witness"] = witness_object(result.witness);
  doc["method"] = result.method;
  doc["vc_partition"] = {{"phi0", result.partition.match_phi0},
                         {"phi1", result.partition.match_phi1}};
  doc["nodes"] = result.nodes;
  return dump(doc);
}

std::string verification_json(const VerificationReport& report) {
  Json doc = document();
  doc["passed"] = report.passed;
  doc["scope"] = VerificationReport::kScope;
  Json list = Json::array();
  for (const Violation& v : report.violations) {
    Json item = Json::object();
    item["condition"] = v.condition;
    if (v.vertex) item["vertex"] = *v.vertex;
    if (v.edge) item["edge"] = {v.edge->u, v.edge->v};
    item["detail"] = v.detail;
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  return dump(doc);
}

std::string format_set(const std::vector<Rational>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].to_string();
  }
  return out + "}";
}

std::vector<Rational> parse_value_set(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::vector<Rational> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
      for (const auto& item : doc.at("values")) out.push_back(Rational::parse(item.get<std::string>()));
    } catch (const Json::exception& ex) {
      throw Error(ErrorCode::kMalformedInput, std::string("value set JSON: ") + ex.what());
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      line = line.substr(0, line.find('#'));
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream fields(line);
      for (std::string token; fields >> token;) out.push_back(Rational::parse(token));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw Error(ErrorCode::kMalformedInput, "value set is empty");
  return out;
}

}  // namespace contrast
