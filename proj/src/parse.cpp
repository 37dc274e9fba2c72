#include "drinfeld/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "drinfeld/error.hpp"

namespace drinfeld {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::uint32_t packed_coefficient(const json& c, std::uint32_t p, std::uint32_t m) {
  if (c.is_number_integer()) {
    long long v = c.get<long long>();
    if (v < 0) fail("negative coefficient " + std::to_string(v));
    return static_cast<std::uint32_t>(v);
  }
  if (c.is_array()) {
    if (c.size() > m) fail("digit tuple longer than the extension degree");
    std::uint32_t v = 0, scale = 1;
    for (const auto& d : c) {
      if (!d.is_number_integer()) fail("digit tuple entries must be integers");
      long long x = d.get<long long>();
      if (x < 0 || x >= static_cast<long long>(p)) fail("digit out of range mod " + std::to_string(p));
      v += static_cast<std::uint32_t>(x) * scale;
      scale *= p;
    }
    return v;
  }
  fail("coefficient must be an integer or a digit tuple");
}

std::vector<std::uint32_t> coefficient_list(const json& j, const char* key, std::uint32_t p, std::uint32_t m) {
  if (!j.contains(key)) return {};
  const json& a = j.at(key);
  if (!a.is_array()) fail(std::string("model.") + key + " must be a list");
  std::vector<std::uint32_t> out;
  for (const auto& c : a) out.push_back(packed_coefficient(c, p, m));
  return out;
}

class LiteralParser {
 public:
  LiteralParser(const CurveModel& m, const std::string& s) : m_(m), s_(s) {}

  std::vector<FFElement> list() {
    std::vector<FFElement> out;
    skip();
    // one pair of outer parentheses may wrap the whole list
    bool wrapped = false;
    if (peek() == '(' && outer_wrap()) {
      ++i_;
      wrapped = true;
    }
    out.push_back(expr());
    while (skip(), peek() == ',') {
      ++i_;
      out.push_back(expr());
    }
    if (wrapped) expect(')');
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "' at position " + std::to_string(i_));
    return out;
  }

 private:
  // True when the '(' at i_ closes at the very end and encloses a comma at
  // depth one, or when it closes at the end at all.
  bool outer_wrap() const {
    int depth = 0;
    std::size_t k = i_;
    for (; k < s_.size(); ++k) {
      if (s_[k] == '(') ++depth;
      if (s_[k] == ')' && --depth == 0) break;
    }
    if (k >= s_.size()) return false;
    for (++k; k < s_.size(); ++k)
      if (!std::isspace(static_cast<unsigned char>(s_[k]))) return false;
    return true;
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "' at position " + std::to_string(i_));
    ++i_;
  }

  FFElement expr() {
    skip();
    FFElement acc = FFElement::zero(m_);
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++i_;
    }
    acc = term();
    if (neg) acc = -acc;
    while (skip(), peek() == '+' || peek() == '-') {
      char op = s_[i_++];
      FFElement t = term();
      acc = op == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  FFElement term() {
    FFElement acc = power();
    for (;;) {
      skip();
      char c = peek();
      if (c == '*' || c == '/') {
        ++i_;
        FFElement f = power();
        if (c == '/' && f.is_zero()) fail("division by zero in literal");
        acc = c == '*' ? acc * f : acc / f;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
        acc = acc * power();  // implicit product: 2x, x(y+1)
      } else {
        return acc;
      }
    }
  }

  FFElement power() {
    FFElement b = primary();
    skip();
    if (peek() == '^') {
      ++i_;
      skip();
      long k = number();
      if (k < 0) fail("negative exponent");
      return b.pow(k);
    }
    return b;
  }

  long number() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number at position " + std::to_string(i_));
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > 1000000000L) fail("number too large");
    }
    return v;
  }

  FFElement primary() {
    skip();
    char c = peek();
    if (c == '(') {
      ++i_;
      FFElement e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = number();
      return FFElement::constant(m_, m_.base_field().from_int(v));
    }
    ++i_;
    switch (c) {
      case 'x':
      case 'T':
        return FFElement::x(m_);
      case 'y':
        if (m_.is_rational()) fail("y is not a coordinate of a rational model");
        return FFElement::y(m_);
      case 'g':
        return FFElement::constant(m_, m_.base_field().primitive_element());
      default:
        break;
    }
    fail(c ? "unexpected '" + std::string(1, c) + "' at position " + std::to_string(i_ - 1) : "unexpected end of literal");
  }

  const CurveModel& m_;
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

CurveSpec curve_spec_from_json(const json& j) {
  if (!j.is_object()) fail("curve file must be a JSON object");
  CurveSpec s;
  try {
    s.p = j.at("p").get<std::uint32_t>();
    s.m = j.value("m", 1u);
    const json& model = j.at("model");
    std::string kind = model.at("kind").get<std::string>();
    if (kind == "rational")
      s.kind = ModelKind::Rational;
    else if (kind == "quadratic")
      s.kind = ModelKind::Quadratic;
    else
      fail("model.kind must be 'rational' or 'quadratic', got '" + kind + "'");
    if (s.p < 2 || s.m < 1) fail("invalid field size");
    s.h = coefficient_list(model, "h", s.p, s.m);
    s.f = coefficient_list(model, "f", s.p, s.m);
    if (s.kind == ModelKind::Quadratic && s.f.empty()) fail("quadratic model needs model.f");
    s.label = j.value("label", std::string());
  } catch (const json::exception& e) {
    fail(std::string("malformed curve file: ") + e.what());
  }
  return s;
}

json curve_spec_to_json(const CurveSpec& s) {
  json model = {{"kind", s.kind == ModelKind::Rational ? "rational" : "quadratic"}};
  if (s.kind == ModelKind::Quadratic) {
    model["h"] = s.h;
    model["f"] = s.f;
  }
  json j = {{"p", s.p}, {"m", s.m}, {"model", model}};
  if (!s.label.empty()) j["label"] = s.label;
  return j;
}

CurveSpec load_curve_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open curve file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    fail("curve file '" + path + "' is not valid JSON: " + e.what());
  }
  return curve_spec_from_json(j);
}

FFElement parse_element(const CurveModel& m, const std::string& text) {
  auto v = parse_generators(m, text);
  if (v.size() != 1) fail("expected a single element, got " + std::to_string(v.size()));
  return v[0];
}

std::vector<FFElement> parse_generators(const CurveModel& m, const std::string& text) {
  return LiteralParser(m, text).list();
}

FracIdeal parse_ideal(const CurveModel& m, const std::string& text) {
  auto gens = parse_generators(m, text);
  bool all_zero = true;
  for (const auto& g : gens) all_zero = all_zero && g.is_zero();
  if (all_zero) throw Error(ErrorCode::ZeroIdeal, "ideal literal '" + text + "' is zero");
  return FracIdeal::from_generators(gens);
}

FracIdeal parse_modulus(const CurveModel& m, const std::string& text) {
  try {
    return parse_ideal(m, text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ZeroIdeal) throw Error(ErrorCode::ZeroModulus, "modulus '" + text + "' is zero");
    throw;
  }
}

}  // namespace drinfeld
