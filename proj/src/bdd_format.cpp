#include "natbdd/bdd_format.hpp"

#include <cctype>
#include <limits>
#include <string>

#include <json.hpp>

#include "natbdd/error.hpp"

namespace natbdd {

namespace {

using ojson = nlohmann::ordered_json;

// Strictly decreasing variables bound the depth by nv, but the parser runs
// before that check completes, so nesting is capped independently.
constexpr std::size_t max_depth = 4096;

[[noreturn]] void fail(const std::string& message) { throw Error(Errc::parse_error, message); }

void render(const BddNode& node, std::string& out) {
  if (node.is_leaf()) {
    out += node.bit() ? "(c 1)" : "(c 0)";
    return;
  }
  out += "(ite ";
  out += std::to_string(node.var());
  out += ' ';
  render(node.then_branch(), out);
  out += ' ';
  render(node.else_branch(), out);
  out += ')';
}

class SexpParser {
 public:
  explicit SexpParser(std::string_view text) : text_(text) {}

  Bdd parse() {
    expect("(bdd ");
    const unsigned vars = number();
    expect(" ");
    BddNode root = node(vars, 0);
    expect(")");
    if (pos_ != text_.size()) fail(where("trailing input"));
    return Bdd(vars, std::move(root));
  }

 private:
  BddNode node(VarIndex bound, std::size_t depth) {
    if (depth > max_depth) fail(where("nesting too deep"));
    if (consume("(c ")) {
      if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1')) {
        fail(where("expected leaf bit 0 or 1"));
      }
      const bool bit = text_[pos_++] == '1';
      expect(")");
      return BddNode::leaf(bit);
    }
    expect("(ite ");
    const std::size_t at = pos_;
    const unsigned var = number();
    if (var >= bound) {
      pos_ = at;
      fail(where("ite variable " + std::to_string(var) + " must be below " +
                 std::to_string(bound)));
    }
    expect(" ");
    BddNode then_branch = node(var, depth + 1);
    expect(" ");
    BddNode else_branch = node(var, depth + 1);
    expect(")");
    return BddNode::ite(var, std::move(then_branch), std::move(else_branch));
  }

  unsigned number() {
    const std::size_t start = pos_;
    unsigned long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > std::numeric_limits<unsigned>::max()) fail(where("number too large"));
      ++pos_;
    }
    if (pos_ == start) fail(where("expected a number"));
    return static_cast<unsigned>(value);
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!consume(token)) fail(where("expected '" + std::string(token) + "'"));
  }

  std::string where(const std::string& message) const {
    return "bdd text, offset " + std::to_string(pos_) + ": " + message;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

ojson node_to_json(const BddNode& node) {
  if (node.is_leaf()) return ojson{{"leaf", node.bit() ? 1 : 0}};
  ojson j;
  j["var"] = node.var();
  j["then"] = node_to_json(node.then_branch());
  j["else"] = node_to_json(node.else_branch());
  return j;
}

unsigned json_unsigned(const ojson& j, const char* field) {
  if (!j.is_number_unsigned() ||
      j.get<unsigned long long>() > std::numeric_limits<unsigned>::max()) {
    fail(std::string("bdd json: '") + field + "' must be a non-negative integer");
  }
  return j.get<unsigned>();
}

BddNode node_from_json(const ojson& j, VarIndex bound, std::size_t depth) {
  if (depth > max_depth) fail("bdd json: nesting too deep");
  if (!j.is_object()) fail("bdd json: node must be an object");
  if (j.size() == 1 && j.contains("leaf")) {
    const unsigned bit = json_unsigned(j["leaf"], "leaf");
    if (bit > 1) fail("bdd json: leaf must be 0 or 1");
    return BddNode::leaf(bit == 1);
  }
  if (j.size() != 3 || !j.contains("var") || !j.contains("then") || !j.contains("else")) {
    fail("bdd json: node must be {\"leaf\"} or {\"var\",\"then\",\"else\"}");
  }
  const unsigned var = json_unsigned(j["var"], "var");
  if (var >= bound) {
    fail("bdd json: ite variable " + std::to_string(var) + " must be below " +
         std::to_string(bound));
  }
  BddNode then_branch = node_from_json(j["then"], var, depth + 1);
  BddNode else_branch = node_from_json(j["else"], var, depth + 1);
  return BddNode::ite(var, std::move(then_branch), std::move(else_branch));
}

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_sexp(const Bdd& bdd) {
  std::string out = "(bdd " + std::to_string(bdd.vars()) + " ";
  render(bdd.root(), out);
  out += ')';
  return out;
}

Bdd parse_sexp(std::string_view text) { return SexpParser(trim(text)).parse(); }

std::string to_json(const Bdd& bdd) {
  ojson j;
  j["vars"] = bdd.vars();
  j["root"] = node_to_json(bdd.root());
  return j.dump();
}

Bdd parse_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    fail(std::string("bdd json: ") + e.what());
  }
  if (!j.is_object() || j.size() != 2 || !j.contains("vars") || !j.contains("root")) {
    fail("bdd json: expected {\"vars\": n, \"root\": node}");
  }
  const unsigned vars = json_unsigned(j["vars"], "vars");
  return Bdd(vars, node_from_json(j["root"], vars, 0));
}

std::string format_bdd(const Bdd& bdd, BddFormat format) {
  return format == BddFormat::json ? to_json(bdd) : to_sexp(bdd);
}

Bdd parse_bdd(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json(body);
  return parse_sexp(body);
}

}  // namespace natbdd
