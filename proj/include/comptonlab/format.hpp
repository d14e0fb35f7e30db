#pragma once

#include <string>

namespace comptonlab {

/// Decimal text with 9 significant digits (round-half-even, via the IEEE
/// binary-to-decimal conversion of printf %g). Enough digits to round-trip
/// every tolerance this project asserts, without printing solver noise.
std::string format_sig9(double v);

} // namespace comptonlab
