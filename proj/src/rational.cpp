#include "confspace/rational.hpp"

#include <cctype>

#include "confspace/error.hpp"

namespace confspace {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingletonNub: return "SingletonNub";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorCode::MissingSingleton: return "MissingSingleton";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::EndpointRoot: return "EndpointRoot";
    case ErrorCode::ZeroAtOrigin: return "ZeroAtOrigin";
    case ErrorCode::TrivialConfiguration: return "TrivialConfiguration";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MissingEntry: return "MissingEntry";
    case ErrorCode::NotRightAngled: return "NotRightAngled";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownDataset: return "UnknownDataset";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text.front() == '-') {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  return make_rational(parse_integer(num_text), parse_integer(den_text));
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);

  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // Both ends lie strictly inside (fl, fl + 1): recurse on the reciprocals.
  const Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

}  // namespace confspace
