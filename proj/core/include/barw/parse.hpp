#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "barw/diagram.hpp"
#include "barw/moore.hpp"
#include "barw/table.hpp"
#include "barw/wtuple.hpp"

namespace barw {

// Parse failure with position; what() reads "<source>:<line>: <message>".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& msg)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg) {}
};

// Line-oriented formats:
//   monoid <name> / elements a b c / unit a / row a: a b c
//   semigroup <name> / elements .. / row ..
//   category <name> / objects a b / hom a b: f g / id a = f / comp f g = h
//   diagram <name> over <cat> / at a = <space> / arrow f: <gen> => [s<j> ..] <gen>
FinMonoid parse_monoid(std::istream& in, const std::string& source = "<input>");
FinSemigroup parse_semigroup(std::istream& in, const std::string& source = "<input>");
FinCategory parse_category(std::istream& in, const std::string& source = "<input>");

struct DiagramSources {
  std::function<std::optional<FinCategory>(const std::string&)> category;
  std::function<std::optional<SimplicialSet>(const std::string& spec)> space;
};
Diagram parse_diagram(std::istream& in, const DiagramSources& sources,
                      const std::string& source = "<input>");

std::string write_monoid(const FinMonoid& m);
std::string write_semigroup(const FinSemigroup& g);
std::string write_category(const FinCategory& c);

// Tuple literal "(x0 t1 x1 ...)"; the empty monoid-mode tuple is the unit's
// name in parentheses.
WTuple parse_wtuple(const std::string& text, const FinSemigroup& g, WMode mode,
                    int unit = -1);

// Serialization of a path: "path r=<len>" then one "bp <time> <value>" line
// per breakpoint.
std::string empath_str(const FinMonoid& m, const EmPath& p);

}  // namespace barw
