#ifndef DIVLAB_IO_HPP
#define DIVLAB_IO_HPP

#include <stdexcept>
#include <string>

#include "divlab/constructions.hpp"
#include "divlab/diversity.hpp"
#include "divlab/self_map.hpp"

namespace divlab {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg), line(line_), column(column_) {}
};

/// Line-oriented diversity description. Header "DIVLAB 1", then one body:
///   GROUND a b c            with SET {a,b} = p/q lines (total on |A| >= 2),
///   GROUND + DIAMETER_OF_METRIC with DIST a b p/q lines (total on pairs),
///   TREE with EDGE u v p/q and MARK label edge offset lines,
///   GLUE hub with BEGIN LEFT/END LEFT and BEGIN RIGHT/END RIGHT sub-blocks,
///   COUNTING n (optionally renamed by a preceding GROUND line).
/// '#' starts a comment. Rationals are "p" or "p/q".
FiniteDiversity parse_diversity(const std::string& text);
FiniteDiversity load_diversity_file(const std::string& path);

/// Map files are lines "MAP a -> b", total over the ground set.
SelfMap parse_map(const std::string& text, const GroundSet& ground);
SelfMap load_map_file(const std::string& path, const GroundSet& ground);

/// Explicit-table form; parses back to an identical object.
std::string serialize_explicit(const FiniteDiversity& div);

}  // namespace divlab

#endif
