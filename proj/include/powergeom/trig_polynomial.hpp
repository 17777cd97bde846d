#pragma once

// Integer-coefficient polynomials in c_i = cos(a_i), s_i = sin(a_i), and a
// reader for the LaTeX source they are typeset in.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "powergeom/error.hpp"

namespace powergeom {

/// coeff * c1^e_c1 * s1^e_s1 * c2^e_c2 * s2^e_s2
struct trig_term {
  std::int64_t coeff = 0;
  unsigned e_c1 = 0, e_s1 = 0, e_c2 = 0, e_s2 = 0;

  friend bool operator==(const trig_term&, const trig_term&) = default;
};

/// An unbraced multi-digit exponent such as "c_2^10" found while reading.
struct exponent_repair {
  std::string original;  // e.g. "c_2^10"
  std::size_t offset = 0;
};

/// Terms are kept in source order.
struct trig_polynomial {
  std::vector<trig_term> terms;
  std::vector<exponent_repair> repairs;

  friend bool operator==(const trig_polynomial& a, const trig_polynomial& b) {
    return a.terms == b.terms;
  }
};

/// How "c_2^10" is read. TeX itself binds only the first digit to the
/// superscript, so the literal reading is c_2^1 followed by a stray numeric
/// factor 0; the intended reading is almost always c_2^{10}.
enum class exponent_reading { multi_digit, tex_literal };

struct trig_values {
  double c1, s1, c2, s2;
};

inline trig_values trig_values_at(double a1, double a2) {
  return {std::cos(a1), std::sin(a1), std::cos(a2), std::sin(a2)};
}

namespace detail {

inline double ipow(double x, unsigned e) {
  double r = 1.0;
  while (e) {
    if (e & 1u) r *= x;
    x *= x;
    e >>= 1u;
  }
  return r;
}

}  // namespace detail

inline double trig_poly_eval(const trig_polynomial& p, const trig_values& t) {
  double sum = 0.0;
  for (const auto& term : p.terms) {
    sum += static_cast<double>(term.coeff) * detail::ipow(t.c1, term.e_c1) *
           detail::ipow(t.s1, term.e_s1) * detail::ipow(t.c2, term.e_c2) *
           detail::ipow(t.s2, term.e_s2);
  }
  return sum;
}

inline double trig_poly_eval(const trig_polynomial& p, double a1, double a2) {
  return trig_poly_eval(p, trig_values_at(a1, a2));
}

/// Sum of |coeff|; bounds |p| for every pair of angles.
inline double coefficient_mass(const trig_polynomial& p) {
  double m = 0.0;
  for (const auto& t : p.terms) m += std::abs(static_cast<double>(t.coeff));
  return m;
}

namespace detail {

class latex_poly_reader {
 public:
  latex_poly_reader(std::string_view src, exponent_reading reading)
      : src_(src), reading_(reading) {}

  trig_polynomial read() {
    trig_polynomial out;
    bool in_term = false;
    trig_term term{1, 0, 0, 0, 0};
    bool have_coeff = false;
    int sign = 1;

    auto flush = [&] {
      if (in_term) {
        term.coeff *= sign;
        out.terms.push_back(term);
      }
      term = {1, 0, 0, 0, 0};
      have_coeff = false;
      in_term = false;
      sign = 1;
    };

    while (skip_layout(), pos_ < src_.size()) {
      const char ch = src_[pos_];
      if (ch == '+' || ch == '-') {
        flush();
        sign = ch == '-' ? -1 : 1;
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        if (have_coeff || has_factors(term)) fail("unexpected number inside a term");
        term.coeff = read_integer();
        have_coeff = true;
        in_term = true;
      } else if (ch == 'c' || ch == 's') {
        read_factor(term, out);
        in_term = true;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
    }
    flush();
    return out;
  }

 private:
  static bool has_factors(const trig_term& t) { return t.e_c1 || t.e_s1 || t.e_c2 || t.e_s2; }

  // whitespace, alignment '&', line breaks '\\', and '\nonumber'
  void skip_layout() {
    for (;;) {
      if (pos_ >= src_.size()) return;
      const char ch = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == '&') {
        ++pos_;
      } else if (src_.substr(pos_, 2) == "\\\\") {
        pos_ += 2;
      } else if (src_.substr(pos_, 9) == "\\nonumber") {
        pos_ += 9;
      } else {
        return;
      }
    }
  }

  std::int64_t read_integer() {
    std::int64_t v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_++] - '0');
    }
    return v;
  }

  void read_factor(trig_term& term, trig_polynomial& out) {
    const std::size_t start = pos_;
    const char kind = src_[pos_++];
    if (pos_ >= src_.size() || src_[pos_] != '_') fail("expected '_' after c/s");
    ++pos_;
    if (pos_ >= src_.size() || (src_[pos_] != '1' && src_[pos_] != '2')) {
      fail("expected subscript 1 or 2");
    }
    const char index = src_[pos_++];
    unsigned exponent = 1;
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '{') {
        ++pos_;
        exponent = static_cast<unsigned>(read_integer());
        if (pos_ >= src_.size() || src_[pos_] != '}') fail("unterminated braced exponent");
        ++pos_;
      } else {
        const std::size_t digits_at = pos_;
        const std::int64_t value = read_integer();
        const std::size_t ndigits = pos_ - digits_at;
        if (ndigits == 0) fail("missing exponent");
        if (ndigits > 1) {
          out.repairs.push_back({std::string(src_.substr(start, pos_ - start)), start});
          if (reading_ == exponent_reading::tex_literal) {
            exponent = static_cast<unsigned>(src_[digits_at] - '0');
            std::int64_t stray = 0;
            for (std::size_t k = digits_at + 1; k < pos_; ++k) stray = stray * 10 + (src_[k] - '0');
            term.coeff *= stray;
          } else {
            exponent = static_cast<unsigned>(value);
          }
        } else {
          exponent = static_cast<unsigned>(value);
        }
      }
    }
    unsigned& slot = kind == 'c' ? (index == '1' ? term.e_c1 : term.e_c2)
                                 : (index == '1' ? term.e_s1 : term.e_s2);
    slot += exponent;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw error(errc::parse_error,
                msg + " at offset " + std::to_string(pos_) + " near \"" +
                    std::string(src_.substr(pos_, 24)) + "\"");
  }

  std::string_view src_;
  exponent_reading reading_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads a sum of monomials such as "-6 c_1^4 c_2+6 s_1 c_2^2 s_2 c_1^3".
inline trig_polynomial parse_trig_polynomial(std::string_view latex,
                                             exponent_reading reading = exponent_reading::multi_digit) {
  return detail::latex_poly_reader(latex, reading).read();
}

}  // namespace powergeom
