#include "absfact/poly.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "absfact/errors.hpp"

namespace absfact {

double SparsePoly::max_magnitude() const {
  double m = 0.0;
  for (auto& [e, c] : terms) m = std::max(m, std::abs(c));
  return m;
}

void SparsePoly::set(Vec2 m, Complex c) {
  if (c == Complex(0.0)) {
    terms.erase(m);
  } else {
    terms[m] = c;
  }
}

bool UnimodularChange::is_identity() const {
  return matrix[0][0] == 1 && matrix[0][1] == 0 && matrix[1][0] == 0 &&
         matrix[1][1] == 1 && shift == Vec2{0, 0};
}

Vec2 UnimodularChange::apply(Vec2 m) const {
  Vec2 t = sub(m, shift);
  return {matrix[0][0] * t[0] + matrix[0][1] * t[1],
          matrix[1][0] * t[0] + matrix[1][1] * t[1]};
}

Vec2 UnimodularChange::apply_inverse(Vec2 m) const {
  std::int64_t d = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
  // Inverse of a unimodular matrix: adjugate / det, det = +-1.
  Vec2 t{(matrix[1][1] * m[0] - matrix[0][1] * m[1]) / d,
         (-matrix[1][0] * m[0] + matrix[0][0] * m[1]) / d};
  return add(t, shift);
}

namespace {

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b, Complex sign) {
  SparsePoly out = a;
  for (auto& [m, c] : b.terms) {
    auto it = out.terms.find(m);
    Complex v = (it == out.terms.end() ? Complex(0.0) : it->second) + sign * c;
    out.set(m, v);
  }
  return out;
}

SparsePoly poly_mul_exact(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (auto& [ma, ca] : a.terms) {
    for (auto& [mb, cb] : b.terms) {
      Vec2 m = add(ma, mb);
      auto it = out.terms.find(m);
      out.set(m, (it == out.terms.end() ? Complex(0.0) : it->second) + ca * cb);
    }
  }
  return out;
}

SparsePoly poly_pow(const SparsePoly& base, std::int64_t e) {
  SparsePoly out;
  out.set(Vec2{0, 0}, 1.0);
  SparsePoly acc = base;
  while (e > 0) {
    if (e & 1) out = poly_mul_exact(out, acc);
    e >>= 1;
    if (e) acc = poly_mul_exact(acc, acc);
  }
  return out;
}

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  SparsePoly parse_expr() {
    SparsePoly lhs = accept('-') ? poly_add(SparsePoly{}, parse_term(), -1.0)
                                 : parse_term();
    while (true) {
      if (accept('+')) {
        lhs = poly_add(lhs, parse_term(), 1.0);
      } else if (accept('-')) {
        lhs = poly_add(lhs, parse_term(), -1.0);
      } else {
        return lhs;
      }
    }
  }

  SparsePoly parse_term() {
    SparsePoly lhs = parse_power();
    while (accept('*')) lhs = poly_mul_exact(lhs, parse_power());
    return lhs;
  }

  SparsePoly parse_power() {
    SparsePoly base = parse_atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos;
      std::int64_t e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        e = e * 10 + (text[pos] - '0');
        if (e > 4096) fail("exponent out of range");
        ++pos;
      }
      if (pos == start) fail("expected nonnegative integer exponent");
      return poly_pow(base, e);
    }
    return base;
  }

  SparsePoly parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    SparsePoly out;
    if (c == '(') {
      ++pos;
      out = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return out;
    }
    if (c == 'x') {
      ++pos;
      out.set(Vec2{1, 0}, 1.0);
      return out;
    }
    if (c == 'y') {
      ++pos;
      out.set(Vec2{0, 1}, 1.0);
      return out;
    }
    if (c == 'i') {
      ++pos;
      out.set(Vec2{0, 0}, Complex(0.0, 1.0));
      return out;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text.c_str() + pos;
      char* end = nullptr;
      double v = std::strtod(begin, &end);
      if (end == begin) fail("malformed number");
      pos += static_cast<std::size_t>(end - begin);
      if (pos < text.size() && text[pos] == 'i') {
        ++pos;
        out.set(Vec2{0, 0}, Complex(0.0, v));
      } else {
        out.set(Vec2{0, 0}, Complex(v, 0.0));
      }
      return out;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

SparsePoly parse(const std::string& text) {
  Parser p(text);
  SparsePoly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  if (out.is_zero()) throw ZeroPolynomial("parse: input is the zero polynomial");
  return out;
}

std::string print(const SparsePoly& f) {
  std::string out;
  for (auto& [m, c] : f.terms) {
    if (!out.empty()) out += " + ";
    std::string coeff;
    if (c.imag() == 0.0) {
      coeff = format_double(c.real());
      if (c.real() < 0) coeff = "(0 - " + format_double(-c.real()) + ")";
    } else if (c.real() == 0.0) {
      coeff = c.imag() < 0 ? "(0 - " + format_double(-c.imag()) + "i)"
                           : format_double(c.imag()) + "i";
    } else {
      std::string im = c.imag() < 0 ? " - " + format_double(-c.imag()) + "i"
                                    : " + " + format_double(c.imag()) + "i";
      std::string re = c.real() < 0 ? "(0 - " + format_double(-c.real()) + ")"
                                    : format_double(c.real());
      coeff = "(" + re + im + ")";
    }
    out += coeff;
    if (m[0] != 0) out += "*x^" + std::to_string(m[0]);
    if (m[1] != 0) out += "*y^" + std::to_string(m[1]);
  }
  return out;
}

LatticePolytope newton_polytope(const SparsePoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("newton_polytope: zero polynomial");
  std::vector<Vec2> pts;
  pts.reserve(f.terms.size());
  for (auto& [m, c] : f.terms) pts.push_back(m);
  return convex_hull(std::move(pts));
}

SparsePoly apply_change(const SparsePoly& f, const UnimodularChange& change) {
  SparsePoly out;
  for (auto& [m, c] : f.terms) out.set(change.apply(m), c);
  return out;
}

SparsePoly apply_change_inverse(const SparsePoly& f, const UnimodularChange& change) {
  SparsePoly out;
  for (auto& [m, c] : f.terms) out.set(change.apply_inverse(m), c);
  return out;
}

std::pair<SparsePoly, UnimodularChange> normalize_support(const SparsePoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("normalize_support: zero polynomial");
  if (f.is_monomial()) throw MonomialInput("normalize_support: monomial input");

  bool in_quadrant = true;
  for (auto& [m, c] : f.terms) {
    if (m[0] < 0 || m[1] < 0) in_quadrant = false;
  }
  if (in_quadrant && f.constant_term() != Complex(0.0)) {
    return {f, UnimodularChange{}};
  }

  LatticePolytope hull = newton_polytope(f);
  Vec2 v = *std::min_element(hull.vertices.begin(), hull.vertices.end());

  // Primitive generators of the vertex cone at v.
  std::vector<Vec2> gens;
  if (hull.is_segment()) {
    Vec2 other = hull.vertices[0] == v ? hull.vertices[1] : hull.vertices[0];
    gens.push_back(primitive(sub(other, v)));
  } else {
    auto it = std::find(hull.vertices.begin(), hull.vertices.end(), v);
    std::size_t idx = static_cast<std::size_t>(it - hull.vertices.begin());
    std::size_t n = hull.vertices.size();
    gens.push_back(primitive(sub(hull.vertices[(idx + 1) % n], v)));
    gens.push_back(primitive(sub(hull.vertices[(idx + n - 1) % n], v)));
  }

  std::int64_t bound = 1;
  for (auto& g : gens) bound = std::max({bound, std::abs(g[0]), std::abs(g[1])});

  // Lexicographically smallest row-major unimodular matrix mapping the cone
  // into the first quadrant.
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b) {
      bool row1_ok = true;
      for (auto& g : gens) row1_ok = row1_ok && (a * g[0] + b * g[1] >= 0);
      if (!row1_ok) continue;
      for (std::int64_t c = -bound; c <= bound; ++c)
        for (std::int64_t d = -bound; d <= bound; ++d) {
          if (std::abs(a * d - b * c) != 1) continue;
          bool ok = true;
          for (auto& g : gens) ok = ok && (c * g[0] + d * g[1] >= 0);
          if (!ok) continue;
          UnimodularChange change;
          change.matrix = {{{a, b}, {c, d}}};
          change.shift = v;
          SparsePoly out = apply_change(f, change);
          return {out, change};
        }
    }
  // A salient rational cone always admits a straightening within the bound.
  throw std::logic_error("normalize_support: no straightening matrix found");
}

SparsePoly multiply(const SparsePoly& f, const SparsePoly& g) {
  SparsePoly out = poly_mul_exact(f, g);
  double threshold = 1e-14 * f.max_magnitude() * g.max_magnitude();
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (std::abs(it->second) < threshold) {
      it = out.terms.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

std::vector<Complex> facet_polynomial(const SparsePoly& f, const Facet& facet) {
  std::int64_t level = dot(facet.start, facet.eta);
  if (dot(facet.end, facet.eta) != level) {
    throw std::invalid_argument("facet_polynomial: facet endpoints disagree");
  }
  for (auto& [m, c] : f.terms) {
    if (dot(m, facet.eta) < level) {
      throw std::invalid_argument("facet_polynomial: facet is not a face of N_f");
    }
  }
  Vec2 d = primitive(sub(facet.end, facet.start));
  std::vector<Complex> coeffs(static_cast<std::size_t>(facet.lattice_length) + 1, 0.0);
  for (std::int64_t j = 0; j <= facet.lattice_length; ++j) {
    auto it = f.terms.find(add(facet.start, scale(j, d)));
    if (it != f.terms.end()) coeffs[static_cast<std::size_t>(j)] = it->second;
  }
  return coeffs;
}

Complex evaluate(const SparsePoly& f, Complex t1, Complex t2) {
  auto ipow = [](Complex base, std::int64_t e) {
    bool inv = e < 0;
    std::uint64_t n = static_cast<std::uint64_t>(inv ? -e : e);
    Complex out = 1.0, acc = base;
    while (n) {
      if (n & 1) out *= acc;
      n >>= 1;
      if (n) acc *= acc;
    }
    return inv ? Complex(1.0) / out : out;
  };
  Complex s = 0.0;
  for (auto& [m, c] : f.terms) s += c * ipow(t1, m[0]) * ipow(t2, m[1]);
  return s;
}

}  // namespace absfact
