#include "locmat/clifford_io.hpp"

#include <cctype>

#include "locmat/error.hpp"

namespace locmat {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t pos() const { return pos_; }

  // Rational token directly at the cursor (no leading whitespace skipped).
  Rational rational_here(bool allow_sign) {
    std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == '/')) {
      ++pos_;
    }
    auto token = text_.substr(start, pos_ - start);
    if (token.empty() || token == "-") throw ParseError("expected a number", start);
    try {
      return parse_rational(token);
    } catch (const ParseError& e) {
      throw ParseError("malformed number '" + std::string(token) + "'", start);
    }
  }

  long long integer_here() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) throw ParseError("expected an integer exponent", start);
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw ParseError("exponent out of range", start);
    }
  }

  // "x" rational ["^" int]; cursor on the 'x'.
  Letter letter() {
    ++pos_;
    Letter out{rational_here(true), 1};
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      out.power = integer_here();
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class ElementParser {
 public:
  ElementParser(std::string_view text, int level) : lex_(text), level_(level) {}

  CliffordElement parse() {
    if (lex_.at_end()) lex_.fail("empty expression");
    auto out = element();
    if (!lex_.at_end()) lex_.fail(std::string("unexpected '") + lex_.peek() + "'");
    return out;
  }

 private:
  CliffordElement element() {
    bool negate = lex_.accept('-');
    CliffordElement acc = term();
    if (negate) acc = CycElem(level_, Rational(-1)) * acc;
    for (;;) {
      if (lex_.accept('+')) {
        acc += term();
      } else if (lex_.accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    char c = lex_.peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'z' || c == 'x' ||
           c == '(';
  }

  CliffordElement term() {
    // A unary minus may follow a binary '+', as in "a + -1 * b".
    bool negate = lex_.accept('-');
    if (!starts_factor()) lex_.fail("expected a factor");
    CliffordElement acc = factor();
    for (;;) {
      if (lex_.accept('*')) {
        if (!starts_factor()) lex_.fail("expected a factor after '*'");
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    if (negate) acc = CycElem(level_, Rational(-1)) * acc;
    return acc;
  }

  CliffordElement factor() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.accept('(');
      auto inner = element();
      if (!lex_.accept(')')) lex_.fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      auto letter = lex_.letter();
      return normal_form(Word{letter}, level_);
    }
    if (c == 'z') {
      lex_.accept('z');
      long long k = 1;
      if (lex_.accept('^')) k = lex_.integer_here();
      return CliffordElement::scalar(CycElem::root_power(level_, k));
    }
    return CliffordElement::scalar(CycElem(level_, lex_.rational_here(false)));
  }

  Lexer lex_;
  int level_;
};

}  // namespace

Word parse_word(std::string_view text) {
  Lexer lex(text);
  Word out;
  while (!lex.at_end()) {
    if (lex.peek() != 'x') lex.fail("expected a letter 'x<index>[^<power>]'");
    out.push_back(lex.letter());
  }
  return out;
}

CliffordElement parse_element(std::string_view text, int level) {
  return ElementParser(text, level).parse();
}

CycElem parse_cyclotomic(std::string_view text, int level) {
  auto e = parse_element(text, level);
  for (const auto& [m, c] : e.terms()) {
    if (!m.is_unit()) throw ParseError("expected a scalar in Q(z)", 0);
  }
  return e.coefficient(Monomial{});
}

std::vector<GeneratorIndex> parse_index_list(std::string_view text) {
  std::vector<GeneratorIndex> out;
  std::size_t start = 0;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  for (;;) {
    std::size_t comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first == std::string_view::npos) throw ParseError("empty index in list", start);
    try {
      out.emplace_back(parse_rational(item.substr(first, last - first + 1)));
    } catch (const ParseError&) {
      throw ParseError("malformed index '" + std::string(item) + "'", start + first);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const GeneratorIndex& index) { return format_rational(index.value()); }

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += ' ';
    out += "x" + to_string(f.index) + "^" + std::to_string(f.exponent);
  }
  return out;
}

std::string to_string(const CliffordElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    std::size_t powers = 0;
    for (const auto& q : c.coeffs()) powers += sgn(q) != 0 ? 1 : 0;
    std::string coeff = to_string(c);
    if (powers > 1) coeff = "(" + coeff + ")";
    if (m.is_unit()) {
      out += coeff;
    } else if (c.is_one()) {
      out += to_string(m);
    } else {
      out += coeff + " * " + to_string(m);
    }
  }
  return out;
}

}  // namespace locmat
