#include "scalars.hpp"

#include <cctype>

#include "saitoforge/errors.hpp"

namespace sf::cli {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  CycNum parse() {
    CycNum v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("scalar '" + s_ + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CycNum expr() {
    CycNum v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  CycNum term() {
    if (eat('-')) return -term();
    CycNum v = factor();
    while (eat('*')) v *= factor();
    return v;
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    try {
      return std::stol(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("number out of range");
    }
  }

  CycNum factor() {
    skip();
    if (eat('(')) {
      CycNum v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      return parse_rational(s_.substr(start, pos_ - start));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string word = s_.substr(start, pos_ - start);
    if (word == "i") return CycNum::i();
    if (word == "sqrt2") return CycNum::sqrt2();
    if (word == "sqrt3") return CycNum::sqrt3();
    if (word == "sqrt5") return CycNum::sqrt5();
    if (word.size() > 1 && word[0] == 'z' &&
        word.find_first_not_of("0123456789", 1) == std::string::npos) {
      long order = std::stol(word.substr(1));
      if (order < 1 || order > 1000) fail("root of unity order out of range");
      long k = 1;
      if (eat('^')) {
        bool neg = eat('-');
        skip();
        k = neg ? -integer() : integer();
      }
      return CycNum::zeta(static_cast<int>(order), k);
    }
    fail(word.empty() ? "expected a value" : "unknown symbol '" + word + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

CycNum parse_rational(const std::string& text) {
  try {
    mpq_class q(text);
    if (q.get_den() == 0) throw ParseError("rational '" + text + "' has zero denominator");
    q.canonicalize();
    return CycNum(q);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + text + "'");
  }
}

CycNum parse_scalar(const std::string& text) { return Parser(text).parse(); }

std::vector<CycNum> parse_vector(const std::string& text) {
  std::vector<CycNum> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(parse_scalar(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(parse_scalar(cur));
  return out;
}

}  // namespace sf::cli
