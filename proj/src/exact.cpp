#include "kemeny/exact.hpp"

#include <cstdlib>

#include "kemeny/error.hpp"

namespace kemeny {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::PathTooShort: return "PathTooShort";
    case ErrorKind::NotABridgeConfig: return "NotABridgeConfig";
    case ErrorKind::RouteRequiresTree: return "RouteRequiresTree";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

const char* to_string(ParseError::Reason reason) noexcept {
  switch (reason) {
    case ParseError::Reason::Empty: return "Empty";
    case ParseError::Reason::BadHeader: return "BadHeader";
    case ParseError::Reason::BadToken: return "BadToken";
    case ParseError::Reason::SelfLoop: return "SelfLoop";
    case ParseError::Reason::DuplicateEdge: return "DuplicateEdge";
    case ParseError::Reason::LabelOutOfRange: return "LabelOutOfRange";
  }
  return "Unknown";
}

ParseError::ParseError(Reason reason, std::size_t line, const std::string& detail)
    : Error(ErrorKind::Parse,
            std::string(to_string(reason)) +
                (line > 0 ? "(line " + std::to_string(line) + ")" : std::string()) + ": " + detail),
      reason_(reason),
      line_(line) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  value_ = den < 0 ? Value(BigInt(-num), BigInt(-den)) : Value(num, den);
}

BigInt Rational::num() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::den() const { return boost::multiprecision::denominator(value_); }

std::string Rational::str() const { return num().str() + "/" + den().str(); }

std::string Rational::decimal(int places) const {
  if (places < 0) throw Error(ErrorKind::InvalidArgument, "negative decimal places");
  const BigInt n = num();
  const BigInt d = den();
  BigInt scaled = boost::multiprecision::abs(n);
  for (int i = 0; i < places; ++i) scaled *= 10;
  BigInt q = scaled / d;
  const BigInt twice_rem = 2 * (scaled % d);
  if (twice_rem > d || (twice_rem == d && boost::multiprecision::bit_test(q, 0))) ++q;

  std::string digits = q.str();
  if (digits.size() < static_cast<std::size_t>(places) + 1) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  if (places > 0) digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  if (n < 0 && q != 0) digits.insert(0, "-");
  return digits;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  return Rational(Rational::Value(a.value_ / b.value_));
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + text + "'");
  }
}

std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace kemeny
