#include "liegeo/string_class.hpp"

#include "liegeo/milnor.hpp"

#include <charconv>
#include <stdexcept>
#include <string>
#include <system_error>

namespace liegeo {

std::string chirality_name(Chirality c) {
  return c == Chirality::left ? "left" : "right";
}

Chirality parse_chirality(const std::string& text) {
  if (text == "left") return Chirality::left;
  if (text == "right") return Chirality::right;
  throw std::invalid_argument("liegeo: unknown chirality '" + text +
                              "' (expected \"left\" or \"right\")");
}

StringClass StringClass::parse(const std::string& text) {
  Anchor anchor{};
  std::size_t pos = 0;
  if (text.rfind("dD4", 0) == 0) {
    anchor = Anchor::disk_bounding;
    pos = 3;
  } else if (text.rfind("L", 0) == 0) {
    anchor = Anchor::left_framing;
    pos = 1;
  } else if (text.rfind("R", 0) == 0) {
    anchor = Anchor::right_framing;
    pos = 1;
  } else {
    throw std::invalid_argument("liegeo: string class '" + text +
                                "' must start with \"L\", \"R\" or \"dD4\"");
  }
  if (pos == text.size()) return StringClass(anchor, 0);
  if (text[pos] != '+' && text[pos] != '-') {
    throw std::invalid_argument("liegeo: string class offset in '" + text +
                                "' must start with '+' or '-'");
  }
  // std::from_chars rejects a leading '+', so skip it and keep '-' inline.
  const std::size_t digits = (text[pos] == '+') ? pos + 1 : pos;
  int offset = 0;
  const char* first = text.data() + digits;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, offset);
  if (ec != std::errc() || ptr != last || digits == text.size()) {
    throw std::invalid_argument("liegeo: malformed string class offset in '" + text + "'");
  }
  return StringClass(anchor, offset);
}

std::string StringClass::to_string() const {
  std::string out;
  switch (anchor_) {
    case Anchor::left_framing: out = "L"; break;
    case Anchor::disk_bounding: out = "dD4"; break;
    case Anchor::right_framing: out = "R"; break;
  }
  if (offset_ > 0) out += "+" + std::to_string(offset_);
  if (offset_ < 0) out += std::to_string(offset_);
  return out;
}

RationalModZ::RationalModZ(const Rational& value) {
  // Reduce into [0, 1): subtract floor(value).
  using Integer = boost::multiprecision::cpp_int;
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);  // > 0 canonically
  Integer q = num / den;                                          // truncates toward zero
  if (num < 0 && q * den != num) --q;                             // floor for negatives
  rep_ = value - Rational(q);
}

std::string RationalModZ::to_string() const { return scalar_traits<Rational>::to_string(rep_); }

RationalModZ e_invariant(const StringClass& cls) {
  return RationalModZ(Rational(cls.left_offset() - 1) / Rational(24));
}

double string_class_integral_via_normal_form(const StringClass& cls,
                                             const LieAlgebraFrame& frame,
                                             const InnerProductOnAlgebra<double>& g,
                                             Chirality chirality) {
  // The opposite frame is carried onto the frame itself by the linear map
  // X -> -X, which preserves Gram matrices; so the normal form of the given
  // Gram on the given frame serves both chiralities.
  const MilnorNormalForm nf = milnor_normal_form(frame, g);
  return string_class_integral<double>(cls, nf.alpha1, nf.alpha2, chirality);
}

}  // namespace liegeo
