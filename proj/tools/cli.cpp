#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "natbdd/bdd.hpp"
#include "natbdd/bdd_format.hpp"
#include "natbdd/error.hpp"
#include "natbdd/nat.hpp"
#include "natbdd/pairing.hpp"
#include "natbdd/ranking.hpp"
#include "natbdd/truthtab.hpp"

namespace natbdd::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool hex = false;
  VarCount max_vars = default_max_vars;
  BddFormat format = BddFormat::sexp;
  std::string out_file;
  std::string in_file;

  std::string scheme = "bitmerge";
  VarCount vars = 0;
  VarIndex index = 0;
  std::string tt;
  bool plain = false;
  bool reduced = false;
  std::string from = "0";
  std::string count;
  std::vector<std::string> numbers;
};

Nat arg_nat(const std::string& text) {
  try {
    return parse_nat(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

PairScheme arg_scheme(const std::string& name) {
  if (auto scheme = parse_pair_scheme(name)) return *scheme;
  throw UsageError("unknown pairing scheme '" + name + "'");
}

BddKind kind_of(const Options& o) { return o.plain ? BddKind::plain : BddKind::reduced; }

std::string read_input(const Options& o, std::istream& in) {
  if (o.in_file.empty()) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(o.in_file, std::ios::binary);
  if (!file) throw Error(Errc::parse_error, "cannot open input file '" + o.in_file + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void add_kind_flags(CLI::App* sub, Options& o) {
  auto* plain = sub->add_flag("--plain", o.plain, "Complete (unreduced) trees");
  auto* reduced = sub->add_flag("--reduced", o.reduced, "Reduced trees (default)");
  plain->excludes(reduced);
}

void add_input_option(CLI::App* sub, Options& o) {
  sub->add_option("--in", o.in_file, "Read the BDD from FILE instead of stdin");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Truth tables, pairing functions and BDD ranking on natural numbers", "natbdd"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--hex", o.hex, "Print numbers in 0x-prefixed hexadecimal");
  app.add_option("--max-vars", o.max_vars, "Largest accepted var-count")
      ->capture_default_str();
  std::string format_name = "sexp";
  app.add_option("--format", format_name, "BDD output format")
      ->check(CLI::IsMember({"sexp", "json"}))
      ->capture_default_str();
  app.add_option("--out", o.out_file, "Write the result to FILE instead of stdout");

  auto* pair_cmd = app.add_subcommand("pair", "Pair two naturals");
  pair_cmd->add_option("--scheme", o.scheme, "cantor, pepis or bitmerge")->capture_default_str();
  pair_cmd->add_option("operands", o.numbers, "x y")->required()->expected(2);

  auto* unpair_cmd = app.add_subcommand("unpair", "Unpair a natural into two");
  unpair_cmd->add_option("--scheme", o.scheme, "cantor, pepis or bitmerge")
      ->capture_default_str();
  unpair_cmd->add_option("z", o.numbers, "Pair code")->required()->expected(1);

  auto* tt2bdd_cmd = app.add_subcommand("tt2bdd", "Build the BDD of a truth table");
  tt2bdd_cmd->add_option("--vars", o.vars, "Number of variables")->required();
  tt2bdd_cmd->add_option("--tt", o.tt, "Truth table")->required();
  add_kind_flags(tt2bdd_cmd, o);

  auto* bdd2tt_cmd = app.add_subcommand("bdd2tt", "Evaluate a BDD back to its truth table");
  add_input_option(bdd2tt_cmd, o);

  auto* reduce_cmd = app.add_subcommand("reduce", "Trim identical branches of a BDD");
  add_input_option(reduce_cmd, o);

  auto* rank_cmd = app.add_subcommand("rank", "Rank a BDD in the stream of all BDDs");
  add_kind_flags(rank_cmd, o);
  add_input_option(rank_cmd, o);

  auto* unrank_cmd = app.add_subcommand("unrank", "The BDD at a given rank");
  add_kind_flags(unrank_cmd, o);
  unrank_cmd->add_option("n", o.numbers)->required()->expected(1);

  auto* enum_cmd = app.add_subcommand("enum", "List consecutive BDDs of the stream");
  enum_cmd->add_option("--from", o.from, "First rank")->capture_default_str();
  enum_cmd->add_option("--count", o.count, "Number of BDDs")->required();
  add_kind_flags(enum_cmd, o);

  auto* shannon_cmd = app.add_subcommand("shannon", "Shannon split/fuse of truth tables");
  shannon_cmd->require_subcommand(1);
  shannon_cmd->fallthrough();
  shannon_cmd->add_option("--vars", o.vars, "Number of variables")->required();
  auto* split_cmd = shannon_cmd->add_subcommand("split", "Table to (high, low) halves");
  split_cmd->add_option("x", o.numbers)->required()->expected(1);
  auto* fuse_cmd = shannon_cmd->add_subcommand("fuse", "(high, low) halves to table");
  fuse_cmd->add_option("operands", o.numbers, "hi lo")->required()->expected(2);

  auto* varbits_cmd = app.add_subcommand("varbits", "Truth-table column of one variable");
  varbits_cmd->add_option("--vars", o.vars, "Number of variables")->required();
  varbits_cmd->add_option("--index", o.index, "Variable index")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : usage_error;
  }

  o.format = format_name == "json" ? BddFormat::json : BddFormat::sexp;

  std::ostringstream result;
  const auto num = [&](const Nat& n) { return format_nat(n, o.hex); };
  const auto bdd_line = [&](const Bdd& b) { result << format_bdd(b, o.format) << '\n'; };

  try {
    if (pair_cmd->parsed()) {
      const PairScheme scheme = arg_scheme(o.scheme);
      result << num(pair(scheme, arg_nat(o.numbers[0]), arg_nat(o.numbers[1]))) << '\n';
    } else if (unpair_cmd->parsed()) {
      const PairScheme scheme = arg_scheme(o.scheme);
      const NatPair p = unpair(scheme, arg_nat(o.numbers[0]));
      result << num(p.first) << ' ' << num(p.second) << '\n';
    } else if (tt2bdd_cmd->parsed()) {
      const Nat tt = arg_nat(o.tt);
      bdd_line(o.plain ? plain_bdd(o.vars, tt, o.max_vars) : reduced_bdd(o.vars, tt, o.max_vars));
    } else if (bdd2tt_cmd->parsed()) {
      result << num(ev(parse_bdd(read_input(o, in)), o.max_vars)) << '\n';
    } else if (reduce_cmd->parsed()) {
      bdd_line(reduce(parse_bdd(read_input(o, in))));
    } else if (rank_cmd->parsed()) {
      result << num(rank(kind_of(o), parse_bdd(read_input(o, in)), o.max_vars)) << '\n';
    } else if (unrank_cmd->parsed()) {
      bdd_line(unrank(kind_of(o), arg_nat(o.numbers[0]), o.max_vars));
    } else if (enum_cmd->parsed()) {
      for (const Bdd& b : enumerate(kind_of(o), arg_nat(o.from), arg_nat(o.count), o.max_vars)) {
        bdd_line(b);
      }
    } else if (split_cmd->parsed()) {
      const NatPair halves = shannon_split(o.vars, arg_nat(o.numbers[0]), o.max_vars);
      result << num(halves.first) << ' ' << num(halves.second) << '\n';
    } else if (fuse_cmd->parsed()) {
      result << num(shannon_fuse(o.vars, arg_nat(o.numbers[0]), arg_nat(o.numbers[1]),
                                 o.max_vars))
             << '\n';
    } else if (varbits_cmd->parsed()) {
      result << num(var_tt(o.vars, o.index, o.max_vars)) << '\n';
    }
  } catch (const UsageError& e) {
    err << "natbdd: " << e.what() << '\n';
    return usage_error;
  } catch (const Error& e) {
    err << "natbdd: " << to_string(e.code()) << ": " << e.what() << '\n';
    return domain_error;
  }

  if (o.out_file.empty()) {
    out << result.str();
    out.flush();
    return success;
  }
  std::ofstream file(o.out_file, std::ios::binary | std::ios::trunc);
  if (!(file << result.str()) || !file.flush()) {
    err << "natbdd: cannot write '" << o.out_file << "'\n";
    return domain_error;
  }
  return success;
}

}  // namespace natbdd::cli
