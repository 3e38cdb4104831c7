#pragma once

// Plain-text serialization of lattice polytopes.
//
// Format: a header line "d m" (ambient dimension, vertex count), followed
// by m lines of d base-10 integers each.  Tokens are whitespace-separated;
// nothing may follow the last vertex.  Writing then reading reproduces the
// polytope exactly, vertex order included.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/arith.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool next_token(std::istream& in, std::string& token) {
  return static_cast<bool>(in >> token);
}

inline Int parse_integer_token(const std::string& token,
                               const std::string& what) {
  std::size_t start = 0;
  if (token[0] == '+' || token[0] == '-') start = 1;
  if (start == token.size()) {
    throw ParseError("invalid " + what + ": '" + token + "'");
  }
  for (std::size_t i = start; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') {
      throw ParseError("invalid " + what + ": '" + token + "'");
    }
  }
  const Int magnitude(token.substr(start));
  return token[0] == '-' ? Int(-magnitude) : magnitude;
}

inline std::size_t parse_count_token(const std::string& token,
                                     const std::string& what) {
  const Int value = parse_integer_token(token, what);
  if (value < 1 || value > 1000000) {
    throw ParseError(what + " out of range: '" + token + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace detail

/// Read one polytope in the "d m" text format.  Throws ParseError on any
/// deviation: malformed integers, missing or extra tokens, a duplicate
/// vertex, or out-of-range header values.
inline LatticePolytope read_polytope(std::istream& in) {
  std::string token;
  if (!detail::next_token(in, token)) {
    throw ParseError("empty input: expected a 'd m' header");
  }
  const std::size_t d = detail::parse_count_token(token, "dimension");
  if (!detail::next_token(in, token)) {
    throw ParseError("missing vertex count in header");
  }
  const std::size_t m = detail::parse_count_token(token, "vertex count");

  std::vector<Point> verts(m, Point(d));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!detail::next_token(in, token)) {
        std::ostringstream os;
        os << "unexpected end of input: expected " << m << " vertices of "
           << d << " coordinates";
        throw ParseError(os.str());
      }
      verts[i][j] = detail::parse_integer_token(token, "coordinate");
    }
  }
  if (detail::next_token(in, token)) {
    throw ParseError("trailing content after the last vertex: '" + token +
                     "'");
  }
  try {
    return LatticePolytope(d, std::move(verts));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

inline LatticePolytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "' for reading");
  }
  return read_polytope(in);
}

/// Write a polytope in the same format read_polytope accepts.
inline void write_polytope(std::ostream& out, const LatticePolytope& p) {
  out << p.ambient_dim() << ' ' << p.vertex_count() << '\n';
  for (const Point& v : p.vertices()) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j > 0) out << ' ';
      out << v[j];
    }
    out << '\n';
  }
}

inline void write_polytope_file(const std::string& path,
                                const LatticePolytope& p) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open '" + path + "' for writing");
  }
  write_polytope(out, p);
  out.flush();
  if (!out) {
    throw ParseError("failed writing '" + path + "'");
  }
}

}  // namespace ehrhart
