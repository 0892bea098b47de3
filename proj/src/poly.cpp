#include "degen/poly.hpp"

namespace degen {

namespace {

void append_power(std::string& out, std::string_view symbol, std::size_t i) {
  out += symbol;
  if (i > 1) {
    out += '^';
    out += std::to_string(i);
  }
}

}  // namespace

std::string format_poly(const DensePoly<Rational>& p, std::string_view symbol) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.str();
    } else {
      if (!mag.is_one()) {
        out += mag.str();
        out += '*';
      }
      append_power(out, symbol, i);
    }
  }
  return out;
}

std::string format_poly_in_x(const DensePoly<LambdaPoly>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const LambdaPoly& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    // Constant coefficients follow the scalar sign rules; genuine lambda
    // polynomials are wrapped in parentheses and never sign-folded.
    if (c.degree() == 0) {
      const Rational v = c.coeff(0);
      const bool neg = v.sign() < 0;
      const Rational mag = neg ? -v : v;
      if (first) {
        if (neg) out += '-';
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      if (i == 0) {
        out += mag.str();
      } else {
        if (!mag.is_one()) {
          out += mag.str();
          out += '*';
        }
        append_power(out, "x", i);
      }
    } else {
      if (!first) out += " + ";
      first = false;
      out += '(';
      out += format_poly(c);
      out += ')';
      if (i > 0) {
        out += '*';
        append_power(out, "x", i);
      }
    }
  }
  return out;
}

}  // namespace degen
