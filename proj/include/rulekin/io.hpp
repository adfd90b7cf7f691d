#pragma once

#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "rulekin/curve.hpp"
#include "rulekin/dual.hpp"
#include "rulekin/errors.hpp"
#include "rulekin/invariants.hpp"
#include "rulekin/minkowski.hpp"
#include "rulekin/parallel.hpp"
#include "rulekin/verify.hpp"

namespace rulekin {

inline constexpr const char* kVersion = "rulekin 0.1.0";

/// In-memory form of a curve file: the geometric spec plus run defaults.
struct CurveFile {
  CurveSpec spec;
  std::size_t samples = 1024;
  std::optional<DualScalar> phi;  // offset angle, when the file provides one
};

namespace detail {

using json = nlohmann::ordered_json;

[[noreturn]] inline void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError("curve file: " + what + " at " + (path.empty() ? "top level" : path));
}

inline void check_keys(const json& obj, const std::vector<std::string>& allowed,
                       const std::string& path) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const auto& k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) schema_fail(path, "unknown key '" + item.key() + "'");
  }
}

inline const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) schema_fail(path, std::string("missing key '") + key + "'");
  return obj.at(key);
}

inline double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) schema_fail(path, "expected a number");
  return j.get<double>();
}

inline RealVec3 as_vec3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) schema_fail(path, "expected an array of 3 numbers");
  return {as_number(j[0], path + "[0]"), as_number(j[1], path + "[1]"),
          as_number(j[2], path + "[2]")};
}

inline std::vector<double> as_number_list(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline FourierSeries3 as_fourier(const json& j, const std::string& path) {
  FourierSeries3 out;
  out.constant = as_vec3(require(j, "constant", path), path + ".constant");
  for (const char* key : {"cos", "sin"}) {
    if (!j.contains(key)) continue;
    const json& rows = j.at(key);
    const std::string rpath = path + "." + key;
    if (!rows.is_array() || rows.size() != 3) {
      schema_fail(rpath, "expected an array of 3 amplitude lists");
    }
    auto& target = (std::string(key) == "cos") ? out.cos_amp : out.sin_amp;
    for (std::size_t c = 0; c < 3; ++c) {
      target[c] = as_number_list(rows[c], rpath + "[" + std::to_string(c) + "]");
    }
  }
  return out;
}

inline DualScalar as_dual(const json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "expected an object with 'real' and 'dual'");
  check_keys(j, {"real", "dual"}, path);
  DualScalar out;
  out.real = as_number(require(j, "real", path), path + ".real");
  if (j.contains("dual")) out.dual = as_number(j.at("dual"), path + ".dual");
  return out;
}

}  // namespace detail

/// Parse a curve file from JSON text. Schema:
///   period   positive number (optional, default 2*pi)
///   samples  integer >= 16 (optional, default 1024)
///   director { "type": "hyperboloid_circle", "a": <number> }
///          | { "type": "fourier", "constant": [3], "cos": [[..]x3], "sin": [[..]x3] }
///   moment   { "type": "zero" }
///          | { "type": "point", "p": [3] }
///          | { "type": "base_curve", "constant": [3], "cos": ..., "sin": ... }
///   phi      { "real": <number>, "dual": <number> }   (optional)
/// Unknown keys are rejected with their path; out-of-range values raise
/// ValueError naming the field.
inline CurveFile parse_curve_file(const std::string& text) {
  detail::json root;
  try {
    root = detail::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("curve file: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("curve file: top level must be an object");
  detail::check_keys(root, {"period", "samples", "director", "moment", "phi"}, "");

  CurveFile out;

  if (root.contains("period")) {
    out.spec.period = detail::as_number(root.at("period"), "period");
    if (!(out.spec.period > 0.0)) {
      throw ValueError("curve file: 'period' must be positive, got " +
                       std::to_string(out.spec.period));
    }
  }
  if (root.contains("samples")) {
    const detail::json& s = root.at("samples");
    if (!s.is_number_integer()) detail::schema_fail("samples", "expected an integer");
    const long long v = s.get<long long>();
    if (v < 16) throw ValueError("curve file: 'samples' must be at least 16, got " + std::to_string(v));
    out.samples = static_cast<std::size_t>(v);
  }

  const detail::json& dir = detail::require(root, "director", "");
  if (!dir.is_object()) detail::schema_fail("director", "expected an object");
  const std::string dtype =
      detail::require(dir, "type", "director").is_string()
          ? dir.at("type").get<std::string>()
          : (detail::schema_fail("director.type", "expected a string"), "");
  if (dtype == "hyperboloid_circle") {
    detail::check_keys(dir, {"type", "a"}, "director");
    HyperboloidCircle h;
    h.a = detail::as_number(detail::require(dir, "a", "director"), "director.a");
    if (!(h.a > 0.0)) throw ValueError("curve file: 'director.a' must be positive");
    out.spec.director = h;
  } else if (dtype == "fourier") {
    detail::check_keys(dir, {"type", "constant", "cos", "sin"}, "director");
    out.spec.director = detail::as_fourier(dir, "director");
  } else {
    throw ValueError("curve file: 'director.type' must be 'hyperboloid_circle' or 'fourier', got '" +
                     dtype + "'");
  }

  if (root.contains("moment")) {
    const detail::json& mom = root.at("moment");
    if (!mom.is_object()) detail::schema_fail("moment", "expected an object");
    const std::string mtype =
        detail::require(mom, "type", "moment").is_string()
            ? mom.at("type").get<std::string>()
            : (detail::schema_fail("moment.type", "expected a string"), "");
    if (mtype == "zero") {
      detail::check_keys(mom, {"type"}, "moment");
      out.spec.moment = MomentZero{};
    } else if (mtype == "point") {
      detail::check_keys(mom, {"type", "p"}, "moment");
      MomentPoint mp;
      mp.p = detail::as_vec3(detail::require(mom, "p", "moment"), "moment.p");
      out.spec.moment = mp;
    } else if (mtype == "base_curve") {
      detail::check_keys(mom, {"type", "constant", "cos", "sin"}, "moment");
      MomentBaseCurve mb;
      mb.alpha = detail::as_fourier(mom, "moment");
      out.spec.moment = mb;
    } else {
      throw ValueError("curve file: 'moment.type' must be 'zero', 'point', or 'base_curve', got '" +
                       mtype + "'");
    }
  }

  if (root.contains("phi")) {
    out.phi = detail::as_dual(root.at("phi"), "phi");
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IOError("read failure on '" + path + "'");
  return buf.str();
}

inline CurveFile load_curve_file(const std::string& path) {
  return parse_curve_file(read_text_file(path));
}

/// Write `text` to `path` through a sibling temp file and an atomic rename, so
/// a crash never leaves a half-written artifact behind.
inline void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IOError("cannot open '" + tmp + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IOError("write failure on '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IOError("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

// ---- deterministic JSON reports --------------------------------------------------

namespace detail {

inline json dual_json(DualScalar v) { return json{{"real", v.real}, {"dual", v.dual}}; }

inline json triple_json(const InvariantTriple& t) {
  json j;
  j["axis"] = t.axis;
  j["angle_of_pitch"] = dual_json(t.Lambda);
  j["lambda"] = t.lambda;
  j["pitch"] = t.pitch;
  j["pitch_integral"] = t.pitch_integral;
  if (t.drall.empty()) {
    j["drall"] = json{{"defined", false}, {"note", t.drall_note}};
  } else {
    double lo = t.drall[0], hi = t.drall[0];
    KahanSum sum;
    for (double d : t.drall) {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      sum.add(d);
    }
    j["drall"] = json{{"defined", true},
                      {"min", lo},
                      {"max", hi},
                      {"mean", sum.sum / static_cast<double>(t.drall.size())}};
  }
  return j;
}

inline json entry_json(const RelationEntry& e) {
  json j;
  j["id"] = e.id;
  j["status"] = to_string(e.status);
  if (e.status != EntryStatus::Skipped) {
    j["abs_residual"] = e.abs_residual;
    j["rel_residual"] = e.rel_residual;
  }
  if (e.lhs) j["lhs"] = dual_json(*e.lhs);
  if (e.rhs) j["rhs"] = dual_json(*e.rhs);
  if (!e.variants.empty()) {
    json vs = json::array();
    for (const auto& v : e.variants) {
      vs.push_back(json{{"name", v.name},
                        {"abs_residual", v.abs_residual},
                        {"rel_residual", v.rel_residual},
                        {"matches", v.matches}});
    }
    j["variants"] = std::move(vs);
  }
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

}  // namespace detail

inline detail::json report_json(const RelationReport& r) {
  detail::json j;
  j["version"] = kVersion;
  j["command"] = "verify";
  j["samples"] = r.samples;
  j["tolerances"] = detail::json{{"abs", r.tol_abs}, {"rel", r.tol_rel}};
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& e : r.entries) {
    switch (e.status) {
      case EntryStatus::Pass: ++pass; break;
      case EntryStatus::Fail: ++fail; break;
      case EntryStatus::Skipped: ++skipped; break;
    }
  }
  j["summary"] = detail::json{{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  detail::json entries = detail::json::array();
  for (const auto& e : r.entries) entries.push_back(detail::entry_json(e));
  j["relations"] = std::move(entries);
  return j;
}

// ---- ruled surface mesh -----------------------------------------------------------

namespace detail {

inline void append_number(std::string& out, double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), res.ptr);
}

}  // namespace detail

/// Wavefront OBJ mesh of the closed ruled surface traced by `lines`: each node
/// contributes the two ruling endpoints foot -+ half_length * direction, and
/// consecutive rulings are joined by quads (closing back to the first ruling).
/// Vertex indices are 1-based as the format requires.
inline std::string ruled_mesh_obj(const std::vector<DualVec3>& lines, double half_length) {
  if (lines.size() < 2) throw BadSpec("ruled_mesh_obj: need at least 2 rulings");
  if (!(half_length > 0.0)) throw BadSpec("ruled_mesh_obj: half_length must be positive");
  const std::size_t n = lines.size();
  std::string out;
  out.reserve(n * 80);
  for (std::size_t i = 0; i < n; ++i) {
    const RealVec3 foot = foot_point(lines[i]);
    const RealVec3 e = lines[i].real;
    const RealVec3 a = foot - half_length * e;
    const RealVec3 bpt = foot + half_length * e;
    for (const RealVec3& p : {a, bpt}) {
      out += "v ";
      detail::append_number(out, p.c0);
      out += ' ';
      detail::append_number(out, p.c1);
      out += ' ';
      detail::append_number(out, p.c2);
      out += '\n';
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const std::size_t a0 = 2 * i + 1, a1 = 2 * i + 2;
    const std::size_t b0 = 2 * j + 1, b1 = 2 * j + 2;
    out += "f " + std::to_string(a0) + ' ' + std::to_string(a1) + ' ' + std::to_string(b1) + ' ' +
           std::to_string(b0) + '\n';
  }
  return out;
}

inline void write_ruled_mesh(const std::string& path, const std::vector<DualVec3>& lines,
                             double half_length) {
  write_text_atomic(path, ruled_mesh_obj(lines, half_length));
}

}  // namespace rulekin
