#pragma once

// JSON document forms for every value the CLI reads or writes.  Integers
// with absolute value up to 2^53 - 1 travel as JSON numbers; anything larger
// must be a decimal string, so documents survive double-precision parsers.
// Readers are strict: unknown keys, missing keys, floats, and shape
// mismatches are all rejected.

#include "picard2/ring2mod.hpp"
#include "picard2/sgp2.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace picard2 {

using Json = nlohmann::ordered_json;

inline const Int& json_int_limit() {
  static const Int limit = (Int(1) << 53) - 1;  // largest exactly-representable double
  return limit;
}

inline Json write_int(const Int& v) {
  if (int_abs(v) <= json_int_limit()) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

inline Int read_int(const Json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    if (j.is_number_unsigned()) {
      std::uint64_t u = j.get<std::uint64_t>();
      if (Int(u) > json_int_limit())
        throw invalid_input(where + ": integer above 2^53-1 must be a decimal string");
      return Int(u);
    }
    std::int64_t v = j.get<std::int64_t>();
    if (int_abs(Int(v)) > json_int_limit())
      throw invalid_input(where + ": integer above 2^53-1 must be a decimal string");
    return Int(v);
  }
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    size_t pos = s.size() > 0 && s[0] == '-' ? 1 : 0;
    if (pos == s.size()) throw invalid_input(where + ": malformed integer string");
    for (size_t i = pos; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw invalid_input(where + ": malformed integer string");
    return Int(s);
  }
  throw invalid_input(where + ": expected an integer (number or decimal string)");
}

inline int read_small_int(const Json& j, const std::string& where) {
  Int v = read_int(j, where);
  if (v < -1000000000 || v > 1000000000) throw invalid_input(where + ": value out of range");
  return v.convert_to<int>();
}

inline void require_keys(const Json& j, std::initializer_list<const char*> keys,
                         const std::string& where) {
  if (!j.is_object()) throw invalid_input(where + ": expected an object");
  for (const char* k : keys)
    if (!j.contains(k)) throw invalid_input(where + ": missing key '" + k + "'");
  if (j.size() != keys.size()) throw invalid_input(where + ": unexpected extra keys");
}

inline void require_type(const Json& j, const char* type, const std::string& where) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string() ||
      j["type"].get_ref<const std::string&>() != type)
    throw invalid_input(where + ": expected a document of type '" + type + "'");
}

inline std::string doc_type(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw invalid_input("document: missing 'type'");
  return j["type"].get<std::string>();
}

// ---------------------------------------------------------------------------
// Matrices

inline Json write_matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(write_int(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Fixed shape, known in advance from the surrounding document.
inline IntMatrix read_matrix(const Json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || int(j.size()) != rows)
    throw invalid_input(where + ": expected " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[size_t(i)];
    if (!row.is_array() || int(row.size()) != cols)
      throw invalid_input(where + ": expected rows of length " + std::to_string(cols));
    for (int c = 0; c < cols; ++c) m.at(i, c) = read_int(row[size_t(c)], where);
  }
  return m;
}

// Row count free, column count fixed (relation matrices).
inline IntMatrix read_matrix_rows(const Json& j, int cols, const std::string& where) {
  if (!j.is_array()) throw invalid_input(where + ": expected an array of rows");
  return read_matrix(j, int(j.size()), cols, where);
}

// ---------------------------------------------------------------------------
// Groups and homomorphisms

inline Json write_fgab(const FinGenAbGroup& g) {
  Json j;
  j["type"] = "fgab";
  j["gens"] = g.gens;
  j["rels"] = write_matrix(g.rels);
  return j;
}

inline FinGenAbGroup read_fgab(const Json& j, const std::string& where = "fgab") {
  require_type(j, "fgab", where);
  require_keys(j, {"type", "gens", "rels"}, where);
  int gens = read_small_int(j["gens"], where + ".gens");
  if (gens < 0) throw invalid_input(where + ".gens: negative");
  return make_group(gens, read_matrix_rows(j["rels"], gens, where + ".rels"));
}

inline Json write_abhom(const AbHom& f) {
  Json j;
  j["type"] = "abhom";
  j["src"] = write_fgab(f.src);
  j["dst"] = write_fgab(f.dst);
  j["matrix"] = write_matrix(f.matrix);
  return j;
}

inline AbHom read_abhom(const Json& j, const std::string& where = "abhom") {
  require_type(j, "abhom", where);
  require_keys(j, {"type", "src", "dst", "matrix"}, where);
  FinGenAbGroup src = read_fgab(j["src"], where + ".src");
  FinGenAbGroup dst = read_fgab(j["dst"], where + ".dst");
  IntMatrix m = read_matrix(j["matrix"], dst.gens, src.gens, where + ".matrix");
  return make_hom(std::move(src), std::move(dst), std::move(m));
}

inline Json write_sgp2(const PicardComplex& a) {
  Json j;
  j["type"] = "sgp2";
  j["c1"] = write_fgab(a.c1);
  j["c0"] = write_fgab(a.c0);
  j["delta"] = write_matrix(a.delta.matrix);
  return j;
}

inline PicardComplex read_sgp2(const Json& j, const std::string& where = "sgp2") {
  require_type(j, "sgp2", where);
  require_keys(j, {"type", "c1", "c0", "delta"}, where);
  FinGenAbGroup c1 = read_fgab(j["c1"], where + ".c1");
  FinGenAbGroup c0 = read_fgab(j["c0"], where + ".c0");
  IntMatrix d = read_matrix(j["delta"], c0.gens, c1.gens, where + ".delta");
  AbHom delta = make_hom(c1, c0, std::move(d));
  return make_complex(std::move(c1), std::move(c0), std::move(delta));
}

inline Json write_sgp2hom(const ChainHom& f) {
  Json j;
  j["type"] = "sgp2hom";
  j["src"] = write_sgp2(f.src);
  j["dst"] = write_sgp2(f.dst);
  j["f1"] = write_matrix(f.f1.matrix);
  j["f0"] = write_matrix(f.f0.matrix);
  return j;
}

inline ChainHom read_sgp2hom(const Json& j, const std::string& where = "sgp2hom") {
  require_type(j, "sgp2hom", where);
  require_keys(j, {"type", "src", "dst", "f1", "f0"}, where);
  PicardComplex src = read_sgp2(j["src"], where + ".src");
  PicardComplex dst = read_sgp2(j["dst"], where + ".dst");
  AbHom f1 = make_hom(src.c1, dst.c1,
                      read_matrix(j["f1"], dst.c1.gens, src.c1.gens, where + ".f1"));
  AbHom f0 = make_hom(src.c0, dst.c0,
                      read_matrix(j["f0"], dst.c0.gens, src.c0.gens, where + ".f0"));
  return make_chain_hom(std::move(src), std::move(dst), std::move(f1), std::move(f0));
}

inline Json write_htpy(const Homotopy& h) {
  Json j;
  j["type"] = "htpy";
  j["t"] = write_matrix(h.t.matrix);
  return j;
}

// ---------------------------------------------------------------------------
// Tables

inline Json write_table(const Table& t) {
  Json rows = Json::array();
  for (const auto& r : t) {
    Json row = Json::array();
    for (int x : r) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Table read_table(const Json& j, const std::string& where) {
  if (!j.is_array()) throw invalid_input(where + ": expected an array of rows");
  Table t;
  for (const auto& row : j) {
    if (!row.is_array()) throw invalid_input(where + ": expected rows to be arrays");
    std::vector<int> r;
    for (const auto& x : row) r.push_back(read_small_int(x, where));
    t.push_back(std::move(r));
  }
  return t;
}

inline std::vector<int> read_int_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw invalid_input(where + ": expected an array");
  std::vector<int> v;
  for (const auto& x : j) v.push_back(read_small_int(x, where));
  return v;
}

inline Json write_int_vector(const std::vector<int>& v) {
  Json j = Json::array();
  for (int x : v) j.push_back(x);
  return j;
}

inline Json write_finring(const FinRing& r) {
  Json j;
  j["type"] = "finring";
  j["size"] = r.size;
  j["add"] = write_table(r.add);
  j["mul"] = write_table(r.mul);
  j["zero"] = r.zero;
  j["one"] = r.one;
  return j;
}

inline FinRing read_finring(const Json& j, const std::string& where = "finring") {
  require_type(j, "finring", where);
  require_keys(j, {"type", "size", "add", "mul", "zero", "one"}, where);
  FinRing r;
  r.size = read_small_int(j["size"], where + ".size");
  r.add = read_table(j["add"], where + ".add");
  r.mul = read_table(j["mul"], where + ".mul");
  r.zero = read_small_int(j["zero"], where + ".zero");
  r.one = read_small_int(j["one"], where + ".one");
  validate_ring(r);
  return r;
}

inline Json write_finmod(const FinMod& m) {
  Json j;
  j["type"] = "finmod";
  j["ring"] = write_finring(m.ring);
  j["size"] = m.size;
  j["add"] = write_table(m.add);
  j["act"] = write_table(m.act);
  return j;
}

inline FinMod read_finmod(const Json& j, const std::string& where = "finmod") {
  require_type(j, "finmod", where);
  require_keys(j, {"type", "ring", "size", "add", "act"}, where);
  FinMod m;
  m.ring = read_finring(j["ring"], where + ".ring");
  m.size = read_small_int(j["size"], where + ".size");
  m.add = read_table(j["add"], where + ".add");
  m.act = read_table(j["act"], where + ".act");
  validate_module(m);
  return m;
}

inline Json write_ring2(const Strict2Ring& r) {
  Json j;
  j["type"] = "ring2";
  j["r1"] = Json{{"size", r.r1.size}, {"add", write_table(r.r1.add)}};
  j["r0"] = write_finring(r.r0);
  j["delta"] = write_int_vector(r.delta);
  j["left"] = write_table(r.left);
  j["right"] = write_table(r.right);
  return j;
}

inline Strict2Ring read_ring2(const Json& j, const std::string& where = "ring2") {
  require_type(j, "ring2", where);
  require_keys(j, {"type", "r1", "r0", "delta", "left", "right"}, where);
  Strict2Ring r;
  require_keys(j["r1"], {"size", "add"}, where + ".r1");
  r.r1.size = read_small_int(j["r1"]["size"], where + ".r1.size");
  r.r1.add = read_table(j["r1"]["add"], where + ".r1.add");
  r.r0 = read_finring(j["r0"], where + ".r0");
  r.delta = read_int_vector(j["delta"], where + ".delta");
  r.left = read_table(j["left"], where + ".left");
  r.right = read_table(j["right"], where + ".right");
  validate_ring2(r);
  return r;
}

inline Json write_mod2(const Mod2& m) {
  Json j;
  j["type"] = "mod2";
  j["ring"] = write_finring(m.ring);
  j["m1"] = Json{{"size", m.m1.size}, {"add", write_table(m.m1.add)}, {"act", write_table(m.m1.act)}};
  j["m0"] = Json{{"size", m.m0.size}, {"add", write_table(m.m0.add)}, {"act", write_table(m.m0.act)}};
  j["delta"] = write_int_vector(m.delta);
  return j;
}

inline Mod2 read_mod2(const Json& j, const std::string& where = "mod2") {
  require_type(j, "mod2", where);
  require_keys(j, {"type", "ring", "m1", "m0", "delta"}, where);
  Mod2 m;
  m.ring = read_finring(j["ring"], where + ".ring");
  auto read_part = [&](const Json& p, const std::string& w) {
    require_keys(p, {"size", "add", "act"}, w);
    FinMod part;
    part.ring = m.ring;
    part.size = read_small_int(p["size"], w + ".size");
    part.add = read_table(p["add"], w + ".add");
    part.act = read_table(p["act"], w + ".act");
    return part;
  };
  m.m1 = read_part(j["m1"], where + ".m1");
  m.m0 = read_part(j["m0"], where + ".m0");
  m.delta = read_int_vector(j["delta"], where + ".delta");
  validate_mod2(m);
  return m;
}

inline Json write_mod2hom(const Mod2Hom& f) {
  Json j;
  j["type"] = "mod2hom";
  j["src"] = write_mod2(f.src);
  j["dst"] = write_mod2(f.dst);
  j["h1"] = write_int_vector(f.h1);
  j["h0"] = write_int_vector(f.h0);
  return j;
}

inline Mod2Hom read_mod2hom(const Json& j, const std::string& where = "mod2hom") {
  require_type(j, "mod2hom", where);
  require_keys(j, {"type", "src", "dst", "h1", "h0"}, where);
  Mod2Hom f;
  f.src = read_mod2(j["src"], where + ".src");
  f.dst = read_mod2(j["dst"], where + ".dst");
  f.h1 = read_int_vector(j["h1"], where + ".h1");
  f.h0 = read_int_vector(j["h0"], where + ".h0");
  validate_mod2hom(f);
  return f;
}

}  // namespace picard2
