#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lierigid {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for every domain-level rejection (bad type string, non-dominant
/// weight, cap exceeded, ...). The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Accepts "p" or "p/q" with optional sign; throws Error on malformed input.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);

/// Sparse vector over the rationals, keyed by basis index. Zero entries are
/// never stored.
using SparseVec = std::map<int, Rational>;

void axpy(SparseVec& y, const Rational& a, const SparseVec& x);  // y += a x
SparseVec scaled(const SparseVec& x, const Rational& a);
Rational entry(const SparseVec& x, int i);

}  // namespace lierigid
