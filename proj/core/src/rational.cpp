#include "stratsym/rational.hpp"

#include <cctype>

#include "stratsym/errors.hpp"

namespace stratsym {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NonpositiveBound: return "NonpositiveBound";
    case ErrorKind::GuardViolated: return "GuardViolated";
    case ErrorKind::ChartMismatch: return "ChartMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::DegreeAboveMiddle: return "DegreeAboveMiddle";
    case ErrorKind::NoFiberCoordinate: return "NoFiberCoordinate";
    case ErrorKind::CoverGap: return "CoverGap";
    case ErrorKind::IdenticalPoints: return "IdenticalPoints";
    case ErrorKind::UnknownModel: return "UnknownModel";
    case ErrorKind::NonFiniteState: return "NonFiniteState";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidModel: return "InvalidModel";
  }
  return "Unknown";
}

Scalar scalar_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError(ErrorKind::ParseError, "empty rational literal");
  std::size_t check = s[0] == '-' || s[0] == '+' ? 1 : 0;
  bool seen_slash = false;
  for (std::size_t i = check; i < s.size(); ++i) {
    if (s[i] == '/' && !seen_slash && i > check && i + 1 < s.size()) {
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError(ErrorKind::ParseError, "malformed rational literal: " + text);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw DomainError(ErrorKind::ParseError, "malformed rational literal: " + text);
  if (q.get_den() == 0)
    throw DomainError(ErrorKind::ParseError, "zero denominator in: " + text);
  q.canonicalize();
  return q;
}

std::string scalar_to_string(const Scalar& value) { return value.get_str(); }

double scalar_to_double(const Scalar& value) { return value.get_d(); }

Scalar scalar_pow(const Scalar& value, int k) {
  Scalar result = 1;
  for (int i = 0; i < k; ++i) result *= value;
  return result;
}

Scalar factorial(int k) {
  Scalar result = 1;
  for (int i = 2; i <= k; ++i) result *= i;
  return result;
}

}  // namespace stratsym
