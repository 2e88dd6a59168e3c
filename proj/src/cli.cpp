#include "locmat/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <vector>

#include "locmat/clifford.hpp"
#include "locmat/clifford_io.hpp"
#include "locmat/error.hpp"
#include "locmat/matrixrep.hpp"
#include "locmat/steinitz.hpp"

namespace locmat::cli {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string describe(const Classification& c) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  return std::string("natural=") + b(c.natural) + " infinite=" + b(c.infinite) +
         " locally_finite=" + b(c.locally_finite) + " primary=" + b(c.primary);
}

struct Options {
  // st
  std::vector<std::string> st_args;
  bool classify_flag = false;
  // shared
  int level = 0;
  int n = 0;
  // nf / mul
  std::vector<std::string> words;
  std::vector<std::string> elements;
  // cent
  std::string ambient;
  std::string probes;
  bool brute = false;
  // stchain
  std::vector<std::uint64_t> sizes;
};

void run_st(const Options& o, std::ostream& out) {
  const auto& a = o.st_args;
  if (a.size() != 1 && a.size() != 3) {
    throw ParseError("st expects <expr> or <expr> lcm|gcd|mul|divides <expr>", 0);
  }
  SteinitzNumber result = parse_steinitz(a[0]);
  if (a.size() == 3) {
    const SteinitzNumber rhs = parse_steinitz(a[2]);
    const std::string& op = a[1];
    if (op == "divides") {
      if (o.classify_flag) throw DomainError("--classify needs a Steinitz-valued result");
      out << (divides(result, rhs) ? "true" : "false") << '\n';
      return;
    }
    if (op == "lcm") {
      result = lcm(result, rhs);
    } else if (op == "gcd") {
      result = gcd(result, rhs);
    } else if (op == "mul") {
      result = mul(result, rhs);
    } else {
      throw ParseError("unknown operation '" + op + "'", 0);
    }
  }
  out << to_string(result) << '\n';
  if (o.classify_flag) out << describe(classify(result)) << '\n';
}

void run_cent(const Options& o, std::ostream& out) {
  const auto ambient = parse_index_list(o.ambient);
  const auto probes = parse_index_list(o.probes);
  const auto monomials = centralizer_congruence(ambient, probes, o.level);
  if (!o.brute) {
    for (const auto& m : monomials) out << to_string(m) << '\n';
    return;
  }
  const auto basis = centralizer_bruteforce(ambient, probes, o.level);
  out << "congruence:\n";
  for (const auto& m : monomials) out << to_string(m) << '\n';
  out << "brute:\n";
  for (const auto& e : basis) out << to_string(e) << '\n';
  std::vector<CliffordElement> spanned;
  for (const auto& m : monomials) spanned.emplace_back(o.level, m);
  out << "agree: " << (spans_equal(spanned, basis, o.level) ? "true" : "false") << '\n';
}

void run_rep(const Options& o, std::ostream& out) {
  const auto rep = RepAssignment::standard(o.n, o.level);
  for (std::size_t k = 0; k < rep.images.size(); ++k) {
    out << "g" << (k + 1) << ":\n" << to_string(rep.images[k]);
  }
  const auto report = verify_relations(rep);
  out << "relations: " << (report.ok ? "ok" : "FAILED") << '\n';
  for (const auto& f : report.failures) out << "  " << f << '\n';
  if (o.n == 2) out << "spanned_dimension: " << spanned_dimension(rep.images) << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steinitz numbers and generalized Clifford algebras, exactly", "locmat"};
  app.require_subcommand(1);
  Options o;

  auto* st = app.add_subcommand("st", "Steinitz arithmetic: <expr> [lcm|gcd|mul|divides <expr>]");
  st->add_option("args", o.st_args, "expression, optionally followed by an operation and operand")
      ->required();
  st->add_flag("--classify", o.classify_flag, "print natural/infinite/locally_finite/primary");

  auto* nf = app.add_subcommand("nf", "normal form of a generator word");
  nf->add_option("--l", o.level, "order l of the generators")->required();
  nf->add_option("word", o.words, "letters x<index>^<power>")->required();

  auto* mulc = app.add_subcommand("mul", "product of two elements");
  mulc->add_option("--l", o.level, "order l of the generators")->required();
  mulc->add_option("elements", o.elements, "two element expressions")->required()->expected(2);

  auto* cent = app.add_subcommand("cent", "centralizer of probe generators in a truncation");
  cent->add_option("--l", o.level, "order l of the generators")->required();
  cent->add_option("--ambient", o.ambient, "comma-separated ambient indices")->required();
  cent->add_option("--probes", o.probes, "comma-separated probe indices");
  cent->add_flag("--brute", o.brute, "also solve by exact elimination and compare");

  auto* rep = app.add_subcommand("rep", "clock-and-shift generator images and relation check");
  rep->add_option("--l", o.level, "order l of the generators")->required();
  rep->add_option("--n", o.n, "number of generators")->required();

  auto* span = app.add_subcommand("span", "linear independence of the ordered monomial images");
  span->add_option("--l", o.level, "order l of the generators")->required();
  span->add_option("--n", o.n, "number of generators")->required();

  auto* chain = app.add_subcommand("stchain", "lcm of a chain of matrix sizes");
  chain->add_option("sizes", o.sizes, "positive integers");

  if (!args.empty() && !args.front().starts_with("-") && app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "parse error: unknown subcommand '" << args.front() << "'\n" << app.help();
    return kExitParse;
  }

  std::vector<std::string> argv_storage{"locmat"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitParse;
  }

  std::ostringstream buffer;
  try {
    if (st->parsed()) {
      run_st(o, buffer);
    } else if (nf->parsed()) {
      buffer << to_string(normal_form(parse_word(join(o.words, " ")), o.level)) << '\n';
    } else if (mulc->parsed()) {
      const auto a = parse_element(o.elements[0], o.level);
      const auto b = parse_element(o.elements[1], o.level);
      buffer << to_string(elem_mul(a, b)) << '\n';
    } else if (cent->parsed()) {
      run_cent(o, buffer);
    } else if (rep->parsed()) {
      run_rep(o, buffer);
    } else if (span->parsed()) {
      buffer << "faithful: " << (faithfulness_check(o.n, o.level) ? "true" : "false") << '\n';
    } else if (chain->parsed()) {
      buffer << to_string(lcm_of_sequence(o.sizes)) << '\n';
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  out << buffer.str();
  return kExitOk;
}

}  // namespace locmat::cli
