#pragma once

#include <string>
#include <string_view>

#include "natbdd/bdd.hpp"

namespace natbdd {

/// S-expression form:
///   bdd  := "(bdd" SP nat SP node ")"
///   node := "(c" SP bit ")" | "(ite" SP nat SP node SP node ")"
/// with single ASCII spaces and no newline.
std::string to_sexp(const Bdd& bdd);

/// Strict inverse of to_sexp. Surrounding whitespace is ignored; anything else
/// out of grammar is an Errc::parse_error.
Bdd parse_sexp(std::string_view text);

/// Compact single-line JSON: {"vars":n,"root":node} where node is
/// {"leaf":b} or {"var":k,"then":node,"else":node}.
std::string to_json(const Bdd& bdd);
Bdd parse_json(std::string_view text);

enum class BddFormat { sexp, json };

std::string format_bdd(const Bdd& bdd, BddFormat format);

/// Dispatches on the first non-blank character: '{' is JSON, otherwise the
/// s-expression grammar.
Bdd parse_bdd(std::string_view text);

}  // namespace natbdd
