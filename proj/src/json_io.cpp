#include "latt/json_io.hpp"

#include <fstream>

namespace latt {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json gram_to_json(const GramMatrix& g) {
  ordered_json j;
  j["rank"] = g.rank;
  j["gram"] = g.entries;
  return j;
}

GramMatrix gram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("gram"))
    throw Error(ErrorCode::InvalidInput,
                "expected an object with \"rank\" and \"gram\"");
  if (!j["rank"].is_number_integer())
    throw Error(ErrorCode::InvalidInput, "\"rank\" must be an integer");
  i64 rank = j["rank"].get<i64>();
  if (rank < 1 || rank > 64)
    throw Error(ErrorCode::InvalidInput, "rank out of range");
  const json& rows = j["gram"];
  if (!rows.is_array() || static_cast<i64>(rows.size()) != rank)
    throw Error(ErrorCode::InvalidInput, "\"gram\" must have `rank` rows");
  GramMatrix g;
  g.rank = static_cast<int>(rank);
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<i64>(row.size()) != rank)
      throw Error(ErrorCode::InvalidInput, "gram rows must have `rank` entries");
    Vec r;
    for (const json& e : row) {
      if (!e.is_number_integer())
        throw Error(ErrorCode::InvalidInput, "gram entries must be integers");
      r.push_back(e.get<i64>());
    }
    g.entries.push_back(std::move(r));
  }
  for (int i = 0; i < g.rank; ++i)
    for (int k = i + 1; k < g.rank; ++k)
      if (g.entries[i][k] != g.entries[k][i])
        throw Error(ErrorCode::NotSymmetric, "gram matrix is not symmetric");
  return g;
}

GramMatrix read_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput,
                std::string("JSON parse error: ") + e.what());
  }
  return gram_from_json(j);
}

ordered_json image_report_to_json(const ImageReport& r) {
  ordered_json j;
  j["bound"] = r.bound;
  j["count"] = r.values.size();
  j["values"] = r.values;
  if (r.witnesses) {
    ordered_json w = ordered_json::array();
    for (const auto& [d, v] : *r.witnesses) {
      ordered_json e;
      e["d"] = d;
      e["vector"] = v;
      w.push_back(std::move(e));
    }
    j["witnesses"] = std::move(w);
  }
  return j;
}

ordered_json certificate_to_json(const ZCertificate& c) {
  ordered_json j;
  j["digest"] = c.lattice_digest;
  j["bound"] = c.bound;
  j["mode"] = c.mode == ZMode::Proof ? "proof" : "enumeration";
  ordered_json w = ordered_json::array();
  for (const auto& [d, v] : c.witnesses) {
    ordered_json e;
    e["d"] = d;
    e["vector"] = v;
    w.push_back(std::move(e));
  }
  j["witnesses"] = std::move(w);
  return j;
}

std::string canonical_dump(const ordered_json& j) {
  // Fixed key order (ordered_json) and no whitespace variation.
  return j.dump();
}

}  // namespace latt
