#pragma once

#include <string>
#include <vector>

namespace vlab {

// Scientific notation with 17 significant digits; parses back to the same bits.
std::string fmt_sci(double v);

// Shortest decimal spelling that parses back to the same bits.
std::string fmt_shortest(double v);

// One CSV line. Cells containing a comma, quote, or newline are quoted per
// RFC 4180 (embedded quotes doubled); everything else is written verbatim.
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace vlab
