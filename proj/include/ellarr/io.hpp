#pragma once

// Arrangement files: one JSON document, integers only.
//
//   {
//     "field": {"m": 3},
//     "tau": {"a": -1, "b": 2, "c": 1},
//     "matrix": {
//       "rows": 2,
//       "cols": 1,
//       "entries": [
//         [[2, 0]],
//         [[1, 1]]
//       ]
//     }
//   }
//
// Each entry [x, y] is the ring element x + y*N*tau. Integers that do not fit
// in 64 bits may be written as decimal strings.

#include "ellarr/arrangement.hpp"
#include "ellarr/quadratic_order.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>

namespace ellarr {

namespace detail {

inline Integer json_integer(const nlohmann::json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
      return Integer(s);
  }
  throw input_error(path, "expected an integer, got " + j.dump());
}

inline const nlohmann::json& json_member(const nlohmann::json& j, const std::string& key,
                                         const std::string& path) {
  if (!j.is_object()) throw input_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw input_error(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

inline std::size_t json_dimension(const nlohmann::json& j, const std::string& path) {
  const Integer v = json_integer(j, path);
  if (v < 0 || v > 4096) throw input_error(path, "dimension out of range: " + to_string(v));
  return static_cast<std::size_t>(v);
}

inline std::string json_number(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.str();
  return "\"" + v.str() + "\"";
}

// 1-based line and column of a byte offset.
inline std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

inline CurveParams parse_curve(const nlohmann::json& doc) {
  const auto& field = detail::json_member(doc, "field", "");
  const FieldParams f = make_field(detail::json_integer(detail::json_member(field, "m", "field"), "field.m"));
  const auto& tau = detail::json_member(doc, "tau", "");
  return make_curve(f, detail::json_integer(detail::json_member(tau, "a", "tau"), "tau.a"),
                    detail::json_integer(detail::json_member(tau, "b", "tau"), "tau.b"),
                    detail::json_integer(detail::json_member(tau, "c", "tau"), "tau.c"));
}

/// Parses and validates an arrangement document. `source` prefixes error messages.
inline EllipticArrangement parse_arrangement(const std::string& text, const std::string& source = "<input>") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(source + ": " + detail::position_of(text, e.byte ? e.byte - 1 : 0),
                      "malformed JSON");
  }
  try {
    CurveParams curve = parse_curve(doc);
    const auto& mat = detail::json_member(doc, "matrix", "");
    const std::size_t k = detail::json_dimension(detail::json_member(mat, "rows", "matrix"), "matrix.rows");
    const std::size_t n = detail::json_dimension(detail::json_member(mat, "cols", "matrix"), "matrix.cols");
    const auto& rows = detail::json_member(mat, "entries", "matrix");
    if (!rows.is_array() || rows.size() != k)
      throw input_error("matrix.entries", "expected " + std::to_string(k) + " rows");
    std::vector<RingElement> entries;
    entries.reserve(k * n);
    for (std::size_t i = 0; i < k; ++i) {
      const std::string rp = "matrix.entries[" + std::to_string(i) + "]";
      if (!rows[i].is_array() || rows[i].size() != n)
        throw input_error(rp, "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        const std::string ep = rp + "[" + std::to_string(j) + "]";
        const auto& e = rows[i][j];
        if (!e.is_array() || e.size() != 2) throw input_error(ep, "expected a pair [x, y]");
        entries.emplace_back(detail::json_integer(e[0], ep + "[0]"), detail::json_integer(e[1], ep + "[1]"));
      }
    }
    return EllipticArrangement(RingMatrix(std::move(curve), k, n, std::move(entries)));
  } catch (const input_error& e) {
    throw input_error(source, e.what());
  }
}

inline EllipticArrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str(), path);
}

/// Canonical text of an arrangement file; parse followed by serialize
/// reproduces canonical files byte for byte.
inline std::string serialize_arrangement(const RingMatrix& a) {
  const CurveParams& c = a.curve();
  std::ostringstream os;
  os << "{\n"
     << "  \"field\": {\"m\": " << detail::json_number(c.field.m) << "},\n"
     << "  \"tau\": {\"a\": " << detail::json_number(c.a) << ", \"b\": " << detail::json_number(c.b)
     << ", \"c\": " << detail::json_number(c.c) << "},\n"
     << "  \"matrix\": {\n"
     << "    \"rows\": " << a.rows() << ",\n"
     << "    \"cols\": " << a.cols() << ",\n"
     << "    \"entries\": [";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ",\n      [" : "\n      [");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const RingElement& e = a(i, j);
      os << (j ? ", [" : "[") << detail::json_number(e.x) << ", " << detail::json_number(e.y) << "]";
    }
    os << "]";
  }
  os << (a.rows() ? "\n    ]\n" : "]\n") << "  }\n}\n";
  return os.str();
}

inline std::string serialize_arrangement(const EllipticArrangement& arr) {
  return serialize_arrangement(arr.matrix());
}

// ---------------------------------------------------------------------------
// Seeded random arrangements

/// Deterministic source of bounded integers. Uses mt19937_64 with explicit
/// rejection sampling so the stream is identical on every standard library.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do v = engine_();
    while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// k x n matrix over the curve's order with both coordinates of every entry
/// uniform in [-bound, bound], row-major, x before y.
inline RingMatrix random_matrix(const CurveParams& curve, std::size_t k, std::size_t n, std::int64_t bound,
                                SeededSampler& rng) {
  if (bound < 0) throw input_error("bound", "must be non-negative");
  RingMatrix a(curve, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer x = rng.uniform(-bound, bound);
      Integer y = rng.uniform(-bound, bound);
      a(i, j) = RingElement(std::move(x), std::move(y));
    }
  return a;
}

inline RingMatrix random_matrix(const CurveParams& curve, std::size_t k, std::size_t n, std::int64_t bound,
                                std::uint64_t seed) {
  SeededSampler rng(seed);
  return random_matrix(curve, k, n, bound, rng);
}

}  // namespace ellarr
