#pragma once

#include <gmpxx.h>

#include <string>

namespace minkdec {

// Exact rational scalar used throughout. No floating point anywhere in the
// computational core.
using Rat = mpq_class;

// Canonical string form: reduced fraction, positive denominator, "/1" omitted
// (e.g. "6", "-1", "3/4").
std::string rat_str(const Rat& q);

// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument on
// malformed input or zero denominator.
Rat rat_parse(const std::string& s);

}  // namespace minkdec
