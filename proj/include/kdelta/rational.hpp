#pragma once

// Exact rational scalar used everywhere in the engine.
//
// All invariants computed here (thresholds, volumes, discrepancies, integrals)
// are rational numbers, and several acceptance checks compare them for exact
// equality, so the engine performs no floating-point arithmetic internally.
// Rationals are backed by arbitrary-precision integers: intermediate values in
// chained quadratic/cubic antiderivatives overflow 64-bit integers easily.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace kdelta {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base class for all engine errors. The CLI maps ValidationError to exit
// code 2 (bad input) and ComputationError to exit code 3 (valid input on
// which the requested computation cannot proceed).
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : EngineError {
  using EngineError::EngineError;
};
struct ComputationError : EngineError {
  using EngineError::EngineError;
};

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  return Rational(Int(num), Int(den));
}

// Canonical text form: "p/q" reduced with q > 0, or bare "p" when q == 1.
inline std::string rat_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

// Parses "p", "p/q", or "-p/q" (whitespace-trimmed). Accepts unreduced input
// and normalizes. Throws ValidationError on malformed text.
inline Rational rat_parse(const std::string& text) {
  auto trim = [](const std::string& x) {
    size_t b = x.find_first_not_of(" \t");
    size_t e = x.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return x.substr(b, e - b + 1);
  };
  std::string s = trim(text);
  if (s.empty()) throw ValidationError("empty rational literal");
  auto check_int = [&](const std::string& part) {
    if (part.empty()) return false;
    size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  try {
    size_t slash = s.find('/');
    if (slash == std::string::npos) {
      if (!check_int(s)) throw ValidationError("malformed rational: " + text);
      return Rational(Int(s));
    }
    std::string num = trim(s.substr(0, slash));
    std::string den = trim(s.substr(slash + 1));
    if (!check_int(num) || !check_int(den))
      throw ValidationError("malformed rational: " + text);
    Int d(den);
    if (d == 0) throw ValidationError("zero denominator: " + text);
    return Rational(Int(num), d);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("malformed rational: ") + text);
  }
}

// Exact square root when the argument is a perfect square of a rational;
// nullopt otherwise. Used to solve quadratics exactly.
inline std::optional<Rational> rat_sqrt_exact(const Rational& r) {
  if (r < 0) return std::nullopt;
  Int n = numerator(r), d = denominator(r);
  Int sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace kdelta
