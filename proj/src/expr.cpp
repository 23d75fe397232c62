#include "qclifford/expr.hpp"

#include <cctype>
#include <optional>

#include "qclifford/errors.hpp"

namespace qcl {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, int dim, const Algebra* alg, const SymbolTable* symbols)
      : text_(text), dim_(dim), alg_(alg), symbols_(symbols) {}

  Multivector run() {
    Multivector r = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(std::string_view tok) {
    skip();
    return text_.substr(pos_, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  const Algebra& algebra(std::size_t at, const char* op) const {
    if (alg_ == nullptr) fail_at(std::string("operator ") + op + " needs an algebra", at);
    return *alg_;
  }

  Multivector sum() {
    Multivector r = product();
    for (;;) {
      if (accept("+"))
        r += product();
      else if (accept("-"))
        r -= product();
      else
        return r;
    }
  }

  Multivector product() {
    Multivector r = wedge_level();
    for (;;) {
      std::size_t at = pos_;
      if (accept("*")) {
        Multivector rhs = wedge_level();
        if (r.is_scalar())
          r = r.scalar_part() * rhs;
        else if (rhs.is_scalar())
          r = rhs.scalar_part() * r;
        else
          r = cl_mul(r, rhs, algebra(at, "*"));
      } else if (accept("/")) {
        std::size_t rhs_at = pos_;
        Multivector rhs = wedge_level();
        if (!rhs.is_scalar()) fail_at("division by a non-scalar", rhs_at);
        if (rhs.is_zero()) fail_at("division by zero", rhs_at);
        r = rhs.scalar_part().inverse() * r;
      } else {
        return r;
      }
    }
  }

  Multivector wedge_level() {
    Multivector r = contraction_level();
    while (accept("^")) r = wedge(r, contraction_level());
    return r;
  }

  Multivector contraction_level() {
    Multivector r = unary();
    for (;;) {
      std::size_t at = pos_;
      if (!accept("_|")) return r;
      Multivector rhs = unary();
      r = contract(r, rhs, algebra(at, "_|").form());
    }
  }

  Multivector unary() {
    std::size_t at = pos_;
    if (accept("~")) return reversion(unary(), algebra(at, "~"));
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return primary();
  }

  Multivector scalar(const RatFunc& c) const { return Multivector::scalar(dim_, c); }

  int exponent() {
    // only directly after a variable, without whitespace
    if (pos_ + 1 < text_.size() && text_[pos_] == '^' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }
    return 1;
  }

  Multivector primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Multivector r = sum();
      if (!accept(")")) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return scalar(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (c == 'e' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) return blade();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      bool ident = std::isalnum(static_cast<unsigned char>(d)) ||
                   (d == '_' && !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '|'));
      if (!ident) break;
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "q" || name == "s" || name == "l") {
      RatFunc v = name == "q" ? RatFunc::q() : name == "s" ? RatFunc::s() : RatFunc::l();
      return scalar(v.pow(exponent()));
    }
    if (symbols_ != nullptr) {
      auto it = symbols_->find(name);
      if (it != symbols_->end()) {
        if (it->second.dim() != dim_) fail_at("symbol '" + std::string(name) + "' has another dimension", start);
        return it->second;
      }
    }
    fail_at("unknown identifier '" + std::string(name) + "'", start);
  }

  Multivector blade() {
    std::size_t start = pos_;
    ++pos_;  // 'e'
    std::vector<int> indices;
    if (dim_ >= 10) {
      for (;;) {
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) fail("expected blade index");
        indices.push_back(std::stoi(std::string(text_.substr(digits, pos_ - digits))));
        if (pos_ < text_.size() && text_[pos_] == ',' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
          ++pos_;
        else
          break;
      }
    } else {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        indices.push_back(text_[pos_++] - '0');
    }
    for (int i : indices)
      if (i < 1 || i > dim_) fail_at("blade index " + std::to_string(i) + " outside 1.." + std::to_string(dim_), start);
    return Multivector::from_indices(dim_, indices);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int dim_;
  const Algebra* alg_;
  const SymbolTable* symbols_;
};

}  // namespace

Multivector parse_multivector(std::string_view text, int dim) {
  return ExpressionParser(text, dim, nullptr, nullptr).run();
}

Multivector evaluate_expression(std::string_view text, const Algebra& alg, const SymbolTable& symbols) {
  return ExpressionParser(text, alg.dim(), &alg, &symbols).run();
}

}  // namespace qcl
