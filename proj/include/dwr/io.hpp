#pragma once

// JSON matrix and block files, a canonical JSON writer, shell CSV and the
// report serializers used by the command-line tool.
//
// Canonical JSON: object keys sorted, two-space indentation, floating-point
// numbers with 17 significant digits, arrays without objects and at most two
// levels deep written on one line.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwr/blockops.hpp"
#include "dwr/bounds.hpp"
#include "dwr/matrix.hpp"
#include "dwr/radius.hpp"
#include "dwr/verify.hpp"

namespace dwr {

using Json = nlohmann::json;

/// Malformed document or a value that violates its schema.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Canonical writer

inline std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline int array_depth(const Json& j) {
  if (!j.is_array()) return 0;
  int d = 0;
  for (const auto& e : j) {
    if (e.is_object()) return 1000;
    d = std::max(d, array_depth(e));
  }
  return d + 1;
}

inline void write_scalar(std::ostream& os, const Json& j) {
  switch (j.type()) {
    case Json::value_t::number_float: os << format_double(j.get<double>()); break;
    case Json::value_t::string: os << Json(j.get<std::string>()).dump(); break;
    default: os << j.dump(); break;
  }
}

inline void write_inline(std::ostream& os, const Json& j) {
  if (!j.is_array()) return write_scalar(os, j);
  os << '[';
  bool first = true;
  for (const auto& e : j) {
    if (!first) os << ", ";
    first = false;
    write_inline(os, e);
  }
  os << ']';
}

inline void write_canonical(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {  // std::map storage: sorted
      if (!first) os << ",\n";
      first = false;
      os << pad << Json(it.key()).dump() << ": ";
      write_canonical(os, it.value(), indent + 2);
    }
    os << '\n' << close << '}';
  } else if (j.is_array()) {
    if (j.empty() || array_depth(j) <= 2) {
      write_inline(os, j);
      return;
    }
    os << "[\n";
    bool first = true;
    for (const auto& e : j) {
      if (!first) os << ",\n";
      first = false;
      os << pad;
      write_canonical(os, e, indent + 2);
    }
    os << '\n' << close << ']';
  } else {
    write_scalar(os, j);
  }
}

}  // namespace detail

/// Canonical text of `j`, newline-terminated.
inline std::string to_canonical_json(const Json& j) {
  std::ostringstream os;
  detail::write_canonical(os, j, 0);
  os << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Files

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// MatrixFile {"rows": R, "cols": C, "entries": [[[re, im], ...], ...]}

namespace detail {

inline std::size_t positive_size(const Json& j, const char* key, const std::string& origin) {
  if (!j.contains(key)) throw ParseError(origin + ": missing '" + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ParseError(origin + ": '" + key + "' must be a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

inline double finite_number(const Json& j, const std::string& origin) {
  if (!j.is_number()) throw ParseError(origin + ": entry components must be numbers");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(origin + ": entry components must be finite");
  return v;
}

}  // namespace detail

inline Matrix matrix_from_json(const Json& j, const std::string& origin = "matrix") {
  if (!j.is_object()) throw ParseError(origin + ": matrix document must be an object");
  const std::size_t rows = detail::positive_size(j, "rows", origin);
  const std::size_t cols = detail::positive_size(j, "cols", origin);
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw ParseError(origin + ": 'entries' must be an array");
  const Json& e = j.at("entries");
  if (e.size() != rows) throw ParseError(origin + ": 'entries' has the wrong number of rows");
  std::vector<Complex> data;
  data.reserve(rows * cols);
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != cols) throw ParseError(origin + ": every row must hold 'cols' entries");
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2) throw ParseError(origin + ": entries must be [re, im] pairs");
      data.emplace_back(detail::finite_number(z[0], origin), detail::finite_number(z[1], origin));
    }
  }
  return Matrix(rows, cols, std::move(data));
}

inline Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline Matrix parse_matrix(const std::string& text, const std::string& origin = "matrix") {
  return matrix_from_json(parse_json_text(text, origin), origin);
}

inline std::string write_matrix(const Matrix& m) { return to_canonical_json(matrix_to_json(m)); }

inline Matrix load_matrix(const std::filesystem::path& path) {
  return parse_matrix(read_text_file(path), path.string());
}

// ---------------------------------------------------------------------------
// BlockFile {"n": N, "blocks": [[body-or-path, ...], ...]}; paths resolve
// against `base_dir`.

inline BlockMatrixSpec block_spec_from_json(const Json& j, const std::filesystem::path& base_dir,
                                            const std::string& origin = "blocks") {
  if (!j.is_object()) throw ParseError(origin + ": block document must be an object");
  const std::size_t n = detail::positive_size(j, "n", origin);
  if (!j.contains("blocks") || !j.at("blocks").is_array() || j.at("blocks").size() != n)
    throw ParseError(origin + ": 'blocks' must be an n x n grid");
  std::vector<Matrix> blocks;
  blocks.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = j.at("blocks")[i];
    if (!row.is_array() || row.size() != n) throw ParseError(origin + ": 'blocks' must be an n x n grid");
    for (std::size_t k = 0; k < n; ++k) {
      const Json& b = row[k];
      const std::string where = origin + " block (" + std::to_string(i) + "," + std::to_string(k) + ")";
      if (b.is_string()) {
        blocks.push_back(load_matrix(base_dir / b.get<std::string>()));
      } else {
        blocks.push_back(matrix_from_json(b, where));
      }
    }
  }
  return BlockMatrixSpec(n, std::move(blocks));
}

inline BlockMatrixSpec load_block_spec(const std::filesystem::path& path) {
  const Json j = parse_json_text(read_text_file(path), path.string());
  return block_spec_from_json(j, path.parent_path(), path.string());
}

// ---------------------------------------------------------------------------
// Shell CSV

inline void write_shell_csv(std::ostream& os, const std::vector<ShellPoint>& pts) {
  os << "re_z,im_z,r\n";
  for (const auto& p : pts) os << format_double(p.re_z) << ',' << format_double(p.im_z) << ',' << format_double(p.r) << '\n';
}

// ---------------------------------------------------------------------------
// Results and reports

inline Json radius_to_json(const RadiusResult& r) {
  Json j{{"value", r.value}, {"method", to_string(r.method)}, {"restarts_used", r.restarts_used}, {"tol", r.tol}};
  if (r.has_angle()) {
    j["theta"] = r.angle();
  } else {
    Json v = Json::array();
    for (const auto& z : r.vector()) v.push_back(Json::array({z.real(), z.imag()}));
    j["vector"] = std::move(v);
  }
  return j;
}

inline Json params_to_json(const std::map<std::string, double>& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

inline Json record_to_json(const BoundRecord& b) {
  return Json{{"id", b.id},         {"kind", to_string(b.kind)}, {"value", b.value},
              {"target", b.target}, {"power", b.power},          {"radius_value", b.radius_value()},
              {"params", params_to_json(b.params)}};
}

inline Json check_to_json(const CheckRecord& c) {
  return Json{{"id", c.id},
              {"kind", to_string(c.kind)},
              {"subject", c.subject},
              {"target", c.target},
              {"params", params_to_json(c.params)},
              {"value", c.bound},
              {"estimate", c.estimate},
              {"tolerance", c.tolerance},
              {"margin", c.margin},
              {"satisfied", c.satisfied}};
}

inline Json bounds_report_to_json(const BoundsReport& r) {
  Json recs = Json::array();
  for (const auto& c : r.records) recs.push_back(check_to_json(c));
  return Json{{"subject", matrix_to_json(r.subject)},
              {"dw_est", r.dw_est},
              {"records", std::move(recs)},
              {"chain_ok", r.chain_ok},
              {"slack", r.slack}};
}

inline Json options_to_json(const ChainOptions& o) {
  return Json{{"families", o.families}, {"restarts", o.restarts}, {"aux_restarts", o.aux_restarts},
              {"seed", o.seed},         {"tol", o.tol},           {"slack", o.slack},
              {"identity_tol", o.identity_tol}, {"alphas", o.alphas}, {"thm5_r", o.thm5_r},
              {"thm6_r", o.thm6_r},     {"powers", o.powers}};
}

/// {config, results[], aggregate, violations, violations_by_id}. A result
/// carries its matrix only when one of its checks failed.
inline Json chain_report_to_json(const ChainReport& rep, const Json& config) {
  Json results = Json::array();
  for (const auto& m : rep.results) {
    Json recs = Json::array();
    for (const auto& c : m.records) recs.push_back(check_to_json(c));
    Json r{{"index", m.index}, {"dim", m.s.rows()},        {"dw_est", m.dw_est},        {"w", m.w},
           {"norm", m.norm},   {"violations", m.violations}, {"records", std::move(recs)}};
    if (m.violations > 0) r["matrix"] = matrix_to_json(m.s);
    results.push_back(std::move(r));
  }
  Json agg = Json::object();
  for (const auto& [k, s] : rep.aggregate)
    agg[k] = Json{{"count", s.count}, {"min", s.min}, {"median", s.median}, {"max", s.max}};
  Json by_id = Json::object();
  for (const auto& [k, v] : rep.violations_by_id) by_id[k] = v;
  return Json{{"config", config},
              {"results", std::move(results)},
              {"aggregate", std::move(agg)},
              {"violations", rep.violations},
              {"violations_by_id", std::move(by_id)}};
}

inline Json regression_to_json(const RegressionReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json j{{"anchor", r.anchor}, {"printed", r.printed},     {"computed", r.computed},
           {"delta", r.delta},   {"tolerance", r.tolerance}, {"status", to_string(r.status)}};
    if (!r.note.empty()) j["note"] = r.note;
    rows.push_back(std::move(j));
  }
  return Json{{"rows", std::move(rows)}, {"ok", rep.ok()}};
}

}  // namespace dwr
