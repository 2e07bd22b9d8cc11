#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covtop/complex.hpp"
#include "covtop/covering.hpp"

namespace covtop {

/**
 * Line format, '#' starts a comment:
 *   vertex <id>
 *   edge <id> <src> <dst>
 *   face <id> <signed-edge>+     (a or a^-1)
 *   basepoint <id>
 * Without a basepoint line the first vertex is the basepoint. The result is
 * validated. Errors are Error{parse} (or the validation kind) prefixed with
 * "line N".
 */
Complex parse_complex(std::string_view text);
std::string format_complex(const Complex& c);

/// Subcomplexes and covers of one complex.
struct CoverFile {
  std::vector<Subcomplex> subcomplexes;
  std::vector<Cover> covers;
};

/**
 *   subcomplex <name>
 *   cells <id>+          (closed automatically)
 *   cover <name> = <subcomplex-name>+
 * A file with subcomplexes but no cover line yields one cover "cover" of all of them.
 */
CoverFile parse_cover_file(const Complex& c, std::string_view text);
std::string format_cover(const Complex& c, const Cover& u);

/**
 * Header `sheets n` or `truncated r`, the total complex in the line format,
 * one `project <total-cell> <base-cell>` line per total cell and, for
 * windows, one `frontier <vertex>+` line.
 */
std::string format_covering(const CoveringMap& m);
CoveringMap parse_covering(std::string_view text, const Complex& base);

/// Whole file as a string; throws Error{parse} if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace covtop
