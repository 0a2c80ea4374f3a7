#include "funcspec.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "error.hpp"

namespace hmap {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  [[noreturn]] void error(const std::string& reason) const {
    fail(ErrorCode::parse_error, "parse error at position " +
                                     std::to_string(pos_) + ": " + reason);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(unsigned(text_[pos_]))) ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) error(std::string("expected '") + c + "' " + what);
  }

  std::string ident() {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(unsigned(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) error("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  // Unsigned real literal: decimal floating point or "pi".
  double unsigned_real() {
    if (pos_ + 1 < text_.size() && text_[pos_] == 'p' &&
        text_[pos_ + 1] == 'i') {
      pos_ += 2;
      return std::numbers::pi;
    }
    double v = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr == begin)
      error("expected a number");
    pos_ += size_t(res.ptr - begin);
    return v;
  }

  double real() {
    skip_ws();
    double sign = 1.0;
    if (consume('-'))
      sign = -1.0;
    else
      consume('+');
    skip_ws();
    return sign * unsigned_real();
  }

  // a, bi, a+bi, a-bi, i, -i, pi ...
  cplx complex_value() {
    skip_ws();
    double re = 0.0, im = 0.0;
    bool have_re = false, have_im = false;
    for (int part = 0; part < 2; ++part) {
      skip_ws();
      double sign = 1.0;
      if (part == 0) {
        if (consume('-')) sign = -1.0;
      } else {
        if (consume('-'))
          sign = -1.0;
        else if (consume('+'))
          sign = 1.0;
        else
          break;  // single-part literal
      }
      skip_ws();
      double mag;
      bool imag;
      if (peek() == 'i') {
        ++pos_;
        mag = 1.0;
        imag = true;
      } else {
        mag = unsigned_real();
        imag = consume('i');
      }
      if (imag) {
        if (have_im) error("duplicate imaginary part");
        im = sign * mag;
        have_im = true;
      } else {
        if (have_re) error("duplicate real part");
        re = sign * mag;
        have_re = true;
      }
    }
    if (!have_re && !have_im) error("expected a complex number");
    return {re, im};
  }

  std::vector<cplx> coeff_list() {
    std::vector<cplx> out;
    out.push_back(complex_value());
    while (consume(',')) out.push_back(complex_value());
    return out;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

Series rational_series(Cursor& cur, int order) {
  const std::vector<cplx> p = cur.coeff_list();
  Series num = Series(p).extended(order);
  if (!cur.consume('/')) return num;
  const std::vector<cplx> q = cur.coeff_list();
  return mul(num, recip(Series(q).extended(order)));
}

int int_param(Cursor& cur, cplx v, const char* name) {
  const double r = v.real();
  if (v.imag() != 0.0 || std::abs(r - std::round(r)) > 1e-9)
    cur.error(std::string(name) + " must be an integer");
  return int(std::lround(r));
}

double real_param(Cursor& cur, cplx v, const char* name) {
  if (v.imag() != 0.0) cur.error(std::string(name) + " must be real");
  return v.real();
}

CatalogId parse_catalog(Cursor& cur, const std::string& name) {
  std::map<std::string, cplx> params;
  if (cur.consume('(')) {
    if (!cur.consume(')')) {
      do {
        const std::string key = cur.ident();
        cur.expect('=', "after parameter name");
        params[key] = cur.complex_value();
      } while (cur.consume(','));
      cur.expect(')', "to close the parameter list");
    }
  }
  const auto take = [&](const char* key) {
    const auto it = params.find(key);
    if (it == params.end())
      cur.error(name + " needs parameter '" + key + "'");
    const cplx v = it->second;
    params.erase(it);
    return v;
  };
  CatalogId id = CatHarmonicKoebe{};
  if (name == "harmonic_koebe") {
    id = CatHarmonicKoebe{};
  } else if (name == "f3" || name == "half_plane_f3") {
    id = CatHalfPlane{};
  } else if (name == "f4") {
    id = CatF4{};
  } else if (name == "f1") {
    id = CatF1{int_param(cur, take("n"), "n")};
  } else if (name == "f2") {
    const cplx alpha = take("alpha");
    id = CatF2{alpha, int_param(cur, take("n"), "n")};
  } else if (name == "f_a_lambda") {
    const double a = real_param(cur, take("a"), "a");
    id = CatLogMap{a, take("lambda")};
  } else if (name == "F_a_lambda") {
    const double a = real_param(cur, take("a"), "a");
    id = CatStarlikeMap{a, take("lambda")};
  } else if (name == "koebe_slice") {
    id = CatKoebeSlice{real_param(cur, take("theta"), "theta")};
  } else {
    cur.error("unknown catalog function '" + name + "'");
  }
  if (!params.empty())
    cur.error("unexpected parameter '" + params.begin()->first + "'");
  return id;
}

}  // namespace

FunctionSpec parse_function_spec(std::string_view text, int order) {
  Cursor cur(text);
  const std::string head = cur.ident();
  if (head == "shear") {
    ParsedShear sh{Series::zero(order), Series::zero(order), 0.0};
    bool have_phi = false, have_omega = false, have_theta = false;
    while (!cur.done()) {
      const std::string key = cur.ident();
      cur.expect('=', "after shear field");
      if (key == "phi") {
        sh.phi = rational_series(cur, order);
        have_phi = true;
      } else if (key == "omega") {
        sh.omega = rational_series(cur, order);
        have_omega = true;
      } else if (key == "theta") {
        sh.theta = cur.real();
        have_theta = true;
      } else {
        cur.error("unknown shear field '" + key + "'");
      }
    }
    if (!have_phi || !have_omega)
      cur.error("shear needs phi=... and omega=...");
    if (!have_theta) sh.theta = std::numbers::pi;  // classical phi = h - g
    return sh;
  }
  const CatalogId id = parse_catalog(cur, head);
  if (!cur.done()) cur.error("unexpected trailing input");
  return id;
}

HarmonicMap build_map(std::string_view text, int order) {
  const FunctionSpec spec = parse_function_spec(text, order);
  if (const auto* id = std::get_if<CatalogId>(&spec))
    return catalog(*id, order);
  const ParsedShear& sh = std::get<ParsedShear>(spec);
  return shear({sh.phi, sh.omega, unit_from_angle(sh.theta)}, order);
}

}  // namespace hmap
