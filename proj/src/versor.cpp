#include "qclifford/versor.hpp"

#include <cctype>

#include "qclifford/errors.hpp"

namespace qcl {

std::string VersorWord::to_string() const {
  std::string letters_text;
  for (std::size_t k = 0; k < letters.size(); ++k) letters_text += (k ? ".b" : "b") + std::to_string(letters[k]);
  if (letters.empty()) letters_text = "1";
  return c.to_string() + " * " + letters_text + " [eps=" + std::to_string(eps) + "]";
}

VersorWord VersorWord::parse(std::string_view text) {
  const auto star = text.find(" * ");
  const auto bracket = text.rfind(" [eps=");
  if (star == std::string_view::npos) throw ParseError("expected ' * ' in versor word", 0);
  if (bracket == std::string_view::npos || bracket < star || text.back() != ']')
    throw ParseError("expected ' [eps=...]' suffix", text.size());
  VersorWord w;
  w.c = RatFunc::parse(text.substr(0, star));
  std::string_view eps = text.substr(bracket + 6, text.size() - bracket - 7);
  if (eps == "-1") w.eps = -1;
  else if (eps == "1" || eps == "+1") w.eps = 1;
  else throw ParseError("eps must be 1 or -1", bracket + 6);
  std::string_view body = text.substr(star + 3, bracket - star - 3);
  if (body == "1") return w;
  std::size_t start = 0;
  for (;;) {
    std::size_t dot = body.find('.', start);
    std::string_view tok = body.substr(start, dot == std::string_view::npos ? body.size() - start : dot - start);
    const std::size_t at = star + 3 + start;
    if (tok.size() < 2 || tok[0] != 'b') throw ParseError("expected generator 'b<i>'", at);
    for (char ch : tok.substr(1))
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad generator index", at);
    w.letters.push_back(std::stoi(std::string(tok.substr(1))));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return w;
}

Multivector eval(const VersorWord& w, const HeckeContext& ctx) { return w.c * ctx.word(w.letters); }

Multivector adjoint(const VersorWord& w, const HeckeContext& ctx) {
  Multivector r = reversion(eval(w, ctx), ctx.algebra());
  return w.length() % 2 && w.eps < 0 ? -r : r;
}

Multivector alpha_eps_linear(const Multivector& a, int eps, const HeckeContext& ctx) {
  Multivector r = reversion(a, ctx.algebra());
  return eps < 0 ? -r : r;
}

Multivector generator_inverse(const HeckeContext& ctx, int i) {
  const RatFunc q = RatFunc::q();
  const Multivector& b = ctx.generator(i);
  Multivector inv = (RatFunc(1) / q) * (b - ctx.algebra().scalar(RatFunc(1) - q));
  if (ctx.mul(b, inv) != ctx.algebra().one() || ctx.mul(inv, b) != ctx.algebra().one())
    throw Error("b" + std::to_string(i) + " inverse is not two-sided");
  return inv;
}

Multivector phi(const VersorWord& x, const VersorWord& y, const HeckeContext& ctx) {
  if (x.eps != y.eps) throw InvalidArgument("phi needs both words with the same eps");
  return ctx.mul(adjoint(x, ctx), eval(y, ctx));
}

VersorWord normalize_word(VersorWord w) {
  if (w.eps != -1) throw InvalidArgument("normalize_word needs eps = -1");
  w.c = RatFunc::s().pow(-static_cast<int>(w.length()));
  return w;
}

Membership gamma_membership(const Multivector& x, std::size_t m, int eps, const HeckeContext& ctx) {
  Membership out;
  out.certificate = Multivector(ctx.algebra().dim());
  out.even = x.is_even();
  if (!out.even) return out;
  Multivector adj = reversion(x, ctx.algebra());
  if (m % 2 && eps < 0) adj = -adj;
  out.certificate = ctx.mul(adj, x);
  out.member = out.certificate == ctx.algebra().one();
  return out;
}

Membership gamma_membership(const VersorWord& w, const HeckeContext& ctx) {
  return gamma_membership(eval(w, ctx), w.length(), w.eps, ctx);
}

Multivector word_inverse(const VersorWord& w, const HeckeContext& ctx) {
  Multivector p = phi(w, w, ctx);
  if (!p.is_scalar() || p.is_zero()) throw Error("phi(w, w) is not a nonzero scalar: " + p.to_string());
  return (RatFunc(1) / p.scalar_part()) * adjoint(w, ctx);
}

Multivector conjugate(const VersorWord& w, const Multivector& v, const HeckeContext& ctx) {
  Multivector a = eval(w, ctx), inv = word_inverse(w, ctx);
  if (ctx.mul(a, inv) != ctx.algebra().one()) throw Error("word inverse is not a right inverse");
  return ctx.mul(ctx.mul(a, v), inv);
}

std::vector<std::vector<int>> all_words(int n, std::size_t max_length) {
  std::vector<std::vector<int>> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (int i = 1; i <= n; ++i) {
        auto w = out[k];
        w.push_back(i);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace qcl
