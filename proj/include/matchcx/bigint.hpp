#pragma once

#include <gmpxx.h>

#include <string>

namespace matchcx {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace matchcx
