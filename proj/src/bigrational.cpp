// Copyright 2026 The qsc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsc/bigrational.hpp"

#include "qsc/errors.hpp"

namespace qsc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::kDivisionByZeroRF: return "DivisionByZeroRF";
    case ErrorCode::kPoleAtPoint: return "PoleAtPoint";
    case ErrorCode::kDenominatorNotCoprime: return "DenominatorNotCoprime";
    case ErrorCode::kParameterDomain: return "ParameterDomain";
    case ErrorCode::kIdenticallyZeroDenominator:
      return "IdenticallyZeroDenominator";
    case ErrorCode::kGridPole: return "GridPole";
    case ErrorCode::kGridExhausted: return "GridExhausted";
    case ErrorCode::kNotPAdicUnit: return "NotPAdicUnit";
    case ErrorCode::kConfig: return "ConfigError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kParse: return "ParseError";
  }
  return "UnknownError";
}

std::string to_text(const BigRational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  BigInt num, den = 1;
  auto parse_int = [&](const std::string& part, BigInt& out) {
    if (part.empty() || out.set_str(part, 10) != 0) {
      throw Error(ErrorCode::kParse, "not a rational: '" + s + "'");
    }
  };
  if (slash == std::string::npos) {
    parse_int(s, num);
  } else {
    parse_int(s.substr(0, slash), num);
    parse_int(s.substr(slash + 1), den);
  }
  if (den == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + s + "'");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) {
      throw Error(ErrorCode::kDivisionByZeroRF, "0 raised to a negative power");
    }
    BigRational inv = 1 / base;
    return pow(inv, -exponent);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(n, d);
}

}  // namespace qsc
