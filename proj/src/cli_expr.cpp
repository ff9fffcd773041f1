#include <cctype>
#include <fstream>

#include "surgobs/cli.hpp"

namespace surgobs::cli {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::filesystem::path base)
      : text_(text), base_(std::move(base)) {}

  cfk::BifilteredComplex parse() {
    cfk::BifilteredComplex c = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("complex expression, column " + std::to_string(pos_ + 1) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/' ||
          ch == '_')
        ++pos_;
      else
        break;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string path() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != ')' && text_[pos_] != ',' && text_[pos_] != '*')
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  cfk::BifilteredComplex expr() {
    cfk::BifilteredComplex c = factor();
    while (accept('*')) c = cfk::tensor(c, factor());
    return c;
  }

  cfk::BifilteredComplex factor() {
    if (accept('(')) {
      cfk::BifilteredComplex c = expr();
      expect(')');
      return c;
    }
    if (accept('@')) return load(path());
    const std::string name = word();
    if (name.empty()) fail("expected a complex");
    if (name == "unknot") return cfk::unknot();
    if (name == "T2") {
      const std::string n = word();
      if (n.empty()) fail("T2 needs an odd integer");
      long v = 0;
      try {
        const Integer z = parse_integer(n);
        if (!z.fits_slong_p()) fail("T2 parameter out of range");
        v = z.get_si();
      } catch (const std::invalid_argument&) {
        fail("bad T2 parameter '" + n + "'");
      }
      if (v < 1 || v % 2 == 0) fail("T2 parameter must be an odd integer >= 1, got " + n);
      return cfk::staircase_T2(v, true);
    }
    if (name == "mirror") {
      expect('(');
      cfk::BifilteredComplex c = expr();
      expect(')');
      return cfk::dual(c);
    }
    if (name == "shift") {
      expect('(');
      cfk::BifilteredComplex c = expr();
      expect(',');
      const std::string amount = word();
      Rational d;
      try {
        d = Rational::parse(amount);
      } catch (const std::exception&) {
        fail("bad shift '" + amount + "'");
      }
      expect(')');
      return cfk::shift(c, d);
    }
    fail("unknown complex '" + name + "'");
  }

  cfk::BifilteredComplex load(const std::string& p) {
    if (p.empty()) fail("expected a path after '@'");
    std::filesystem::path file(p);
    if (file.is_relative() && !base_.empty()) file = base_ / file;
    std::ifstream in(file);
    if (!in) fail("cannot open '" + file.string() + "'");
    return cfk::read_complex(in);
  }

  std::string_view text_;
  std::filesystem::path base_;
  std::size_t pos_ = 0;
};

}  // namespace

cfk::BifilteredComplex parse_complex_expr(std::string_view text, const std::filesystem::path& base) {
  return ExprParser(text, base).parse();
}

std::pair<long, long> parse_k_range(std::string_view text) {
  auto number = [&](std::string_view s) {
    try {
      const Integer z = parse_integer(s);
      if (!z.fits_slong_p()) throw UsageError("k out of range: " + std::string(s));
      return z.get_si();
    } catch (const std::invalid_argument&) {
      throw UsageError("bad k range '" + std::string(text) + "'");
    }
  };
  const std::size_t dots = text.find("..");
  const long a = number(dots == std::string_view::npos ? text : text.substr(0, dots));
  const long b = dots == std::string_view::npos ? a : number(text.substr(dots + 2));
  if (a < 1) throw UsageError("k must be >= 1, got " + std::to_string(a));
  if (b < a) throw UsageError("empty k range '" + std::string(text) + "'");
  return {a, b};
}

}  // namespace surgobs::cli
