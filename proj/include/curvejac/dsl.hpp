#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvejac/curve_model.hpp"

namespace curvejac {

// Line-oriented curve description format ('#' starts a comment):
//
//   curve <name>
//   component <id> [genus <n>]
//   sing <id> pinch (<comp> at <point> [mult <k>])+
//   sing <id> node (<comp> at <point>) (<comp> at <point>)
//   sing <id> cusp (<comp> at <point>)
//   base <comp> at <point>
//
// <point> is an integer, a/b, or inf. Semantic checks are left to validate().

struct SourceLocation {
  int line = 0;
  int column = 0;
};

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string token;
  std::string message;

  std::string to_string() const;
};

struct CurveDoc {
  std::string source;
  CurveConfig config;
  /// "curve", "component:<id>", "sing:<id>", "base:<comp>" -> where it was declared.
  std::map<std::string, SourceLocation> locations;
};

struct ParseResult {
  std::optional<CurveDoc> doc;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return doc.has_value(); }
};

ParseResult parse_curve_dsl(std::string_view text);

/// Canonical text for a configuration; parse_curve_dsl(print_curve_dsl(c)) reproduces c.
std::string print_curve_dsl(const CurveConfig& config);

}  // namespace curvejac
