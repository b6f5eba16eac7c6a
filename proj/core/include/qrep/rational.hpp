#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qrep {

/// Exact rational scalar. mpq_class is kept canonical (lowest terms,
/// positive denominator), which is exactly the invariant we need for
/// structural equality of polynomials and rational functions.
using Rat = mpq_class;

/// Parse "num", "-num" or "num/den". Throws parse_error on garbage.
Rat rat_parse(std::string_view text);

/// "7", "-3/2", ... (canonical form).
std::string rat_str(const Rat& x);

inline bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

} // namespace qrep
