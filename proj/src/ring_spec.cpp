// Copyright 2026 The gcdgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcdgraph/ring_spec.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

#include "ring_impl.hpp"

namespace gcdgraph {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingSpecAst spec() {
    RingSpecAst ast;
    ast.terms.push_back(term());
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (peek() != 'x') fail("expected 'x' between factors or end of input");
      ++pos_;
      ast.terms.push_back(term());
    }
    return ast;
  }

  Expr expression() {
    skip_ws();
    const std::size_t start = pos_;
    Expr lhs;
    if (peek() == '-') {
      ++pos_;
      lhs = make(Expr::Op::kNeg, start, {product()});
    } else {
      lhs = product();
    }
    while (true) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        const auto op = peek() == '+' ? Expr::Op::kAdd : Expr::Op::kSub;
        const std::size_t at = pos_++;
        lhs = make(op, at, {std::move(lhs), product()});
      } else {
        return lhs;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  static Expr make(Expr::Op op, std::size_t /*at*/, std::vector<Expr> args) {
    Expr e;
    e.op = op;
    e.args = std::move(args);
    return e;
  }

  // Matches `k` allowing whitespace between its characters.
  bool keyword(std::string_view k) {
    const std::size_t start = pos_;
    for (char c : k) {
      skip_ws();
      if (peek() != c) {
        pos_ = start;
        return false;
      }
      ++pos_;
    }
    return true;
  }

  TermAst term() {
    skip_ws();
    TermAst t;
    if (keyword("Z/")) {
      t.base = TermAst::Base::kIntegersMod;
      t.modulus = integer();
      if (t.modulus < 2) fail("modulus must be at least 2");
    } else if (keyword("GR(")) {
      t.base = TermAst::Base::kGaloisRing;
      t.modulus = integer();
      expect(',');
      t.degree = integer();
      expect(')');
    } else if (peek() == 'F') {
      ++pos_;
      t.base = TermAst::Base::kField;
      t.modulus = integer();
    } else {
      fail("expected 'Z/', 'F' or 'GR('");
    }
    while (consume('[')) {
      ExtensionAst ext;
      ext.variable = identifier();
      expect(']');
      expect('/');
      expect('(');
      ext.modulus = expression();
      expect(')');
      t.extensions.push_back(std::move(ext));
    }
    return t;
  }

  Expr product() {
    Expr lhs = power();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        lhs = make(Expr::Op::kMul, pos_, {std::move(lhs), power()});
      } else if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(') {
        // Juxtaposition, e.g. "2x".
        lhs = make(Expr::Op::kMul, pos_, {std::move(lhs), power()});
      } else {
        return lhs;
      }
    }
  }

  Expr power() {
    Expr base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      Expr e;
      e.op = Expr::Op::kPow;
      e.value = static_cast<std::int64_t>(integer());
      e.args.push_back(std::move(base));
      return e;
    }
    return base;
  }

  Expr atom() {
    skip_ws();
    Expr e;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      e.op = Expr::Op::kInteger;
      e.value = static_cast<std::int64_t>(integer());
    } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
      e.op = Expr::Op::kVariable;
      e.value = static_cast<std::int64_t>(pos_);
      e.name = identifier();
    } else if (peek() == '(') {
      ++pos_;
      e = expression();
      expect(')');
    } else {
      fail("expected a number, a variable or '('");
    }
    return e;
  }

  std::uint64_t integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint32_t>::max() - d) / 10) fail("integer too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::string identifier() {
    skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected an identifier");
    std::string s;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s += text_[pos_++];
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.op) {
    case Expr::Op::kAdd:
    case Expr::Op::kSub:
      return 1;
    case Expr::Op::kNeg:
      return 2;
    case Expr::Op::kMul:
      return 3;
    case Expr::Op::kPow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  const std::string s = to_string(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

// Polynomials in a (possibly absent) fresh variable whose coefficients are
// flat tower elements at a fixed depth.
using Flat = std::vector<Coeff>;
using PolyT = std::vector<Flat>;

class Evaluator {
 public:
  Evaluator(const Tower& tower, std::optional<std::string> fresh)
      : tower_(tower), depth_(tower.depth()), fresh_(std::move(fresh)) {}

  PolyT eval(const Expr& e) const {
    switch (e.op) {
      case Expr::Op::kInteger: {
        Flat c(width(), 0);
        c[0] = e.value % tower_.modulus();
        return {c};
      }
      case Expr::Op::kVariable:
        return variable(e);
      case Expr::Op::kAdd:
        return add(eval(e.args[0]), eval(e.args[1]));
      case Expr::Op::kSub:
        return add(eval(e.args[0]), negate(eval(e.args[1])));
      case Expr::Op::kNeg:
        return negate(eval(e.args[0]));
      case Expr::Op::kMul:
        return mul(eval(e.args[0]), eval(e.args[1]));
      case Expr::Op::kPow: {
        const PolyT base = eval(e.args[0]);
        Flat one = tower_.one(depth_);
        PolyT r{one};
        for (std::int64_t i = 0; i < e.value; ++i) r = mul(r, base);
        return r;
      }
    }
    return {};
  }

 private:
  std::size_t width() const { return tower_.degree_at(depth_); }

  PolyT variable(const Expr& e) const {
    if (fresh_ && e.name == *fresh_) {
      return {Flat(width(), 0), tower_.one(depth_)};
    }
    const auto& exts = tower_.extensions();
    for (std::size_t j = 1; j <= depth_; ++j) {
      if (exts[j - 1].variable != e.name) continue;
      Flat x(width(), 0);
      const std::size_t stride = tower_.degree_at(j - 1);
      if (exts[j - 1].degree() >= 2) {
        x[stride] = 1;
      } else {
        // x_j = -c_0 when the layer is linear.
        const Flat& c0 = exts[j - 1].coeffs[0];
        for (std::size_t i = 0; i < c0.size(); ++i) {
          x[i] = c0[i] == 0 ? 0 : tower_.modulus() - c0[i];
        }
      }
      return {x};
    }
    throw ParseError("unbound variable '" + e.name + "'", static_cast<std::size_t>(e.value));
  }

  PolyT add(PolyT a, const PolyT& b) const {
    if (a.size() < b.size()) a.resize(b.size(), Flat(width(), 0));
    for (std::size_t i = 0; i < b.size(); ++i) tower_.add(depth_, a[i], b[i], a[i]);
    return a;
  }

  PolyT negate(PolyT a) const {
    const Flat zero(width(), 0);
    for (auto& c : a) tower_.sub(depth_, zero, c, c);
    return a;
  }

  PolyT mul(const PolyT& a, const PolyT& b) const {
    PolyT r(a.size() + b.size() - 1, Flat(width(), 0));
    Flat tmp(width());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        tower_.mul(depth_, a[i], b[j], tmp);
        tower_.add(depth_, r[i + j], tmp, r[i + j]);
      }
    }
    return r;
  }

  const Tower& tower_;
  std::size_t depth_;
  std::optional<std::string> fresh_;
};

bool is_zero(const Flat& c) {
  return std::all_of(c.begin(), c.end(), [](Coeff x) { return x == 0; });
}

Tower build_tower(const TermAst& term, std::size_t cap) {
  Tower t = [&] {
    switch (term.base) {
      case TermAst::Base::kIntegersMod:
        return Tower(static_cast<Coeff>(term.modulus));
      case TermAst::Base::kField:
        if (term.modulus > cap) throw ArgumentError("ring cardinality exceeds the cap");
        return Tower::finite_field(term.modulus);
      case TermAst::Base::kGaloisRing:
        return Tower::galois_ring(term.modulus, term.degree);
    }
    throw ArgumentError("unknown base");
  }();
  for (const ExtensionAst& ext : term.extensions) {
    for (const auto& e : t.extensions()) {
      if (e.variable == ext.variable) {
        throw ArgumentError("variable '" + ext.variable + "' already bound");
      }
    }
    PolyT f = Evaluator(t, ext.variable).eval(ext.modulus);
    while (!f.empty() && is_zero(f.back())) f.pop_back();
    if (f.size() < 2) {
      throw ArgumentError("extension polynomial for '" + ext.variable + "' has degree < 1");
    }
    if (!t.is_one(t.depth(), f.back())) {
      throw ArgumentError("extension polynomial for '" + ext.variable + "' is not monic");
    }
    t.extend(ext.variable, std::move(f));
    const auto card = t.cardinality();
    if (!card || *card > cap) {
      throw ArgumentError("ring cardinality exceeds the cap of " + std::to_string(cap));
    }
  }
  return t;
}

}  // namespace

std::string to_string(const Expr& e) {
  switch (e.op) {
    case Expr::Op::kInteger:
      return std::to_string(e.value);
    case Expr::Op::kVariable:
      return e.name;
    case Expr::Op::kAdd:
      return to_string(e.args[0]) + " + " + wrap(e.args[1], 2);
    case Expr::Op::kSub:
      return to_string(e.args[0]) + " - " + wrap(e.args[1], 2);
    case Expr::Op::kNeg:
      return "-" + wrap(e.args[0], 3);
    case Expr::Op::kMul:
      return wrap(e.args[0], 3) + "*" + wrap(e.args[1], 4);
    case Expr::Op::kPow:
      return wrap(e.args[0], 5) + "^" + std::to_string(e.value);
  }
  return {};
}

std::string to_string(const RingSpecAst& ast) {
  std::string s;
  for (std::size_t i = 0; i < ast.terms.size(); ++i) {
    const TermAst& t = ast.terms[i];
    if (i > 0) s += " x ";
    switch (t.base) {
      case TermAst::Base::kIntegersMod:
        s += "Z/" + std::to_string(t.modulus);
        break;
      case TermAst::Base::kField:
        s += "F" + std::to_string(t.modulus);
        break;
      case TermAst::Base::kGaloisRing:
        s += "GR(" + std::to_string(t.modulus) + "," + std::to_string(t.degree) + ")";
        break;
    }
    for (const ExtensionAst& ext : t.extensions) {
      s += "[" + ext.variable + "]/(" + to_string(ext.modulus) + ")";
    }
  }
  return s;
}

RingSpecAst parse_ring_spec_ast(std::string_view text) {
  Parser p(text);
  if (p.at_end()) p.fail("empty ring specification");
  return p.spec();
}

Ring build_ring(const RingSpecAst& ast, std::size_t max_cardinality) {
  std::vector<Tower> towers;
  for (const TermAst& t : ast.terms) towers.push_back(build_tower(t, max_cardinality));
  return Ring::product(std::move(towers), max_cardinality);
}

Ring parse_ring_spec(std::string_view text, std::size_t max_cardinality) {
  return build_ring(parse_ring_spec_ast(text), max_cardinality);
}

Element parse_element(const Ring& ring, std::string_view text) {
  if (!ring.is_tower_product()) throw StructuralError("elements can only be parsed in tower rings");
  const auto& towers = ring.factors();
  std::vector<Expr> exprs;
  Parser p(text);
  if (p.at_end()) p.fail("empty element");
  // Try the tuple form first; fall back to a bare expression for one factor.
  bool tuple = false;
  try {
    Parser q(text);
    q.expect('(');
    std::vector<Expr> parts{q.expression()};
    while (q.consume(',')) parts.push_back(q.expression());
    q.expect(')');
    if (q.at_end()) {
      exprs = std::move(parts);
      tuple = true;
    }
  } catch (const ParseError&) {
    if (towers.size() != 1) throw;
  }
  if (!tuple) {
    if (towers.size() != 1) p.fail("expected a tuple '(...)'");
    exprs.push_back(p.expression());
    if (!p.at_end()) p.fail("unexpected trailing input");
  }
  if (exprs.size() != towers.size()) {
    throw ArgumentError("element has " + std::to_string(exprs.size()) + " components but the ring has " +
                        std::to_string(towers.size()) + " factors");
  }
  std::vector<std::vector<Coeff>> coeffs;
  for (std::size_t f = 0; f < towers.size(); ++f) {
    PolyT v = Evaluator(towers[f], std::nullopt).eval(exprs[f]);
    coeffs.push_back(v.front());
  }
  return ring.from_coefficients(coeffs);
}

std::vector<Element> parse_element_list(const Ring& ring, std::string_view text) {
  std::vector<Element> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view part = text.substr(start, end - start);
    if (std::any_of(part.begin(), part.end(),
                    [](char c) { return !std::isspace(static_cast<unsigned char>(c)); })) {
      out.push_back(parse_element(ring, part));
    }
    start = end + 1;
  }
  return out;
}

std::string format_element(const Ring& ring, Element a) {
  const auto coeffs = ring.coefficients(a);
  std::string s = "(";
  for (std::size_t f = 0; f < coeffs.size(); ++f) {
    if (f > 0) s += ", ";
    if (ring.is_tower_product()) {
      const Tower& t = ring.factors()[f];
      s += detail::format_tower_element(t, t.depth(), coeffs[f]);
    } else {
      s += "[";
      for (std::size_t j = 0; j < coeffs[f].size(); ++j) {
        if (j > 0) s += ",";
        s += std::to_string(coeffs[f][j]);
      }
      s += "]";
    }
  }
  return s + ")";
}

}  // namespace gcdgraph
