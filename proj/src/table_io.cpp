#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "covkit/chartab.hpp"

// JSON ingestion and byte-deterministic export of character tables, plus the
// relabeling search used to compare tables of the same group from different
// constructions.

namespace covkit {

namespace {

long long small_int(const BigInt& v, const char* what) {
  if (!v.fits_slong_p()) throw MathError(std::string(what) + " too large for the JSON schema");
  return (long long)v.get_si();
}

}  // namespace

std::string export_table(const CharacterTable& T) {
  nlohmann::json j;
  j["name"] = T.group_name;
  j["order"] = small_int(T.order, "export_table: order");
  nlohmann::json cls = nlohmann::json::array();
  for (const ClassInfo& c : T.classes) {
    nlohmann::json e;
    e["label"] = c.label;
    e["size"] = small_int(c.size, "export_table: class size");
    e["order"] = c.element_order;
    cls.push_back(e);
  }
  j["classes"] = cls;
  nlohmann::json irr = nlohmann::json::array();
  for (const auto& row : T.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const CycloNum& v : row) r.push_back(cyclo_print(v));
    irr.push_back(r);
  }
  j["irreducibles"] = irr;
  return j.dump();
}

CharacterTable ingest_table(const std::string& bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const std::exception& e) {
    throw UsageError(std::string("ingest_table: JSON parse failure: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("ingest_table: top level is not an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "name" && it.key() != "order" && it.key() != "classes" &&
        it.key() != "irreducibles")
      throw UsageError("ingest_table: unknown key \"" + it.key() + "\"");
  if (!j.contains("name") || !j["name"].is_string())
    throw UsageError("ingest_table: missing string \"name\"");
  if (!j.contains("order") || !j["order"].is_number_integer())
    throw UsageError("ingest_table: missing integer \"order\"");
  if (!j.contains("classes") || !j["classes"].is_array())
    throw UsageError("ingest_table: missing array \"classes\"");
  if (!j.contains("irreducibles") || !j["irreducibles"].is_array())
    throw UsageError("ingest_table: missing array \"irreducibles\"");

  CharacterTable T;
  T.provenance = Provenance::Ingested;
  T.group_name = j["name"].get<std::string>();
  T.order = BigInt((long)j["order"].get<long long>());

  for (std::size_t i = 0; i < j["classes"].size(); ++i) {
    const auto& e = j["classes"][i];
    std::string where = "ingest_table: classes[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("label") || !e["label"].is_string() ||
        !e.contains("size") || !e["size"].is_number_integer() || !e.contains("order") ||
        !e["order"].is_number_integer())
      throw UsageError(where + " needs label/size/order fields");
    for (auto it = e.begin(); it != e.end(); ++it)
      if (it.key() != "label" && it.key() != "size" && it.key() != "order")
        throw UsageError(where + ": unknown key \"" + it.key() + "\"");
    T.classes.push_back({e["label"].get<std::string>(),
                         BigInt((long)e["size"].get<long long>()),
                         (long)e["order"].get<long long>()});
  }

  std::size_t k = T.classes.size();
  if (j["irreducibles"].size() != k)
    throw UsageError("ingest_table: table is not square (rows vs classes)");
  for (std::size_t r = 0; r < k; ++r) {
    const auto& jr = j["irreducibles"][r];
    if (!jr.is_array() || jr.size() != k)
      throw UsageError("ingest_table: irreducibles[" + std::to_string(r) +
                       "] is not a row of length " + std::to_string(k));
    std::vector<CycloNum> row;
    for (std::size_t c = 0; c < k; ++c) {
      if (!jr[c].is_string())
        throw UsageError("ingest_table: irreducibles[" + std::to_string(r) + "][" +
                         std::to_string(c) + "] is not a string");
      try {
        row.push_back(cyclo_parse(jr[c].get<std::string>()));
      } catch (const UsageError& e) {
        throw UsageError("ingest_table: irreducibles[" + std::to_string(r) + "][" +
                         std::to_string(c) + "]: " + e.what());
      }
    }
    T.rows.push_back(std::move(row));
  }

  validate_table(T);  // rejection happens here, naming the offending pair
  return T;
}

// ---------------------------------------------------------------------------
// Relabeling search.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<std::string>> value_strings(const CharacterTable& T) {
  std::vector<std::vector<std::string>> S(T.rows.size());
  for (std::size_t r = 0; r < T.rows.size(); ++r)
    for (const CycloNum& v : T.rows[r]) S[r].push_back(v.str());
  return S;
}

std::string column_fingerprint(const CharacterTable& T,
                               const std::vector<std::vector<std::string>>& S, long c) {
  std::vector<std::string> vals;
  for (std::size_t r = 0; r < S.size(); ++r) vals.push_back(S[r][(std::size_t)c]);
  std::sort(vals.begin(), vals.end());
  std::ostringstream os;
  os << T.classes[(std::size_t)c].size << '|' << T.classes[(std::size_t)c].element_order;
  for (const auto& v : vals) os << ';' << v;
  return os.str();
}

}  // namespace

std::optional<std::pair<std::vector<long>, std::vector<long>>> match_tables(
    const CharacterTable& A, const CharacterTable& B) {
  long k = A.k();
  if (B.k() != k || A.order != B.order) return std::nullopt;

  auto SA = value_strings(A), SB = value_strings(B);

  std::map<std::string, std::vector<long>> bcols;
  for (long c = 0; c < k; ++c) bcols[column_fingerprint(B, SB, c)].push_back(c);
  std::vector<std::string> afp;
  for (long c = 0; c < k; ++c) {
    afp.push_back(column_fingerprint(A, SA, c));
    auto it = bcols.find(afp.back());
    if (it == bcols.end()) return std::nullopt;
  }

  // Assign the most constrained columns first.
  std::vector<long> acols(k);
  for (long c = 0; c < k; ++c) acols[(std::size_t)c] = c;
  std::sort(acols.begin(), acols.end(), [&](long x, long y) {
    std::size_t bx = bcols[afp[(std::size_t)x]].size(), by = bcols[afp[(std::size_t)y]].size();
    if (bx != by) return bx < by;
    return x < y;
  });

  std::vector<long> col_map((std::size_t)k, -1);
  std::vector<bool> used((std::size_t)k, false);

  // With columns fixed, rows must match one-to-one as relabeled sequences.
  auto rows_match = [&](std::vector<long>& row_map) {
    std::map<std::string, std::vector<long>> brows;
    for (long r = 0; r < k; ++r) {
      std::ostringstream os;
      for (long c = 0; c < k; ++c) os << SB[(std::size_t)r][(std::size_t)c] << ';';
      brows[os.str()].push_back(r);
    }
    row_map.assign((std::size_t)k, -1);
    for (long r = 0; r < k; ++r) {
      std::vector<std::string> re((std::size_t)k);
      for (long c = 0; c < k; ++c)
        re[(std::size_t)col_map[(std::size_t)c]] = SA[(std::size_t)r][(std::size_t)c];
      std::ostringstream os;
      for (const auto& s : re) os << s << ';';
      auto it = brows.find(os.str());
      if (it == brows.end() || it->second.empty()) return false;
      row_map[(std::size_t)r] = it->second.back();
      it->second.pop_back();
    }
    return true;
  };

  std::vector<long> row_map;
  std::function<bool(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == (std::size_t)k) return rows_match(row_map);
    long ac = acols[pos];
    for (long bc : bcols[afp[(std::size_t)ac]]) {
      if (used[(std::size_t)bc]) continue;
      used[(std::size_t)bc] = true;
      col_map[(std::size_t)ac] = bc;
      if (dfs(pos + 1)) return true;
      used[(std::size_t)bc] = false;
      col_map[(std::size_t)ac] = -1;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return std::make_pair(row_map, col_map);
}

}  // namespace covkit
