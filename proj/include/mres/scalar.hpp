#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "mres/errors.hpp"

namespace mres {

/// Exact rational coefficient. All arithmetic in this library is over Q.
using Scalar = mpq_class;

inline std::string to_string(const Scalar& s) { return s.get_str(); }

/// Parses "p" or "p/q" (the format produced by to_string).
inline Scalar parse_scalar(std::string_view text) {
  Scalar s;
  if (text.empty() || s.set_str(std::string(text), 10) != 0) {
    throw InputError("invalid rational '" + std::string(text) + "'");
  }
  if (s.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  s.canonicalize();
  return s;
}

inline int sign_of_parity(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace mres
