#ifndef MGOM_TEXTIO_HPP
#define MGOM_TEXTIO_HPP

#include <string>
#include <vector>

namespace mgom {

/// Locale-independent scientific notation with a fixed number of
/// significant digits (default 9), e.g. "1.23456789e-15".
std::string format_sci(double value, int significant_digits = 9);

/// Comma-separated file, header row, LF line endings, UTF-8. Columns must
/// share one length.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

}  // namespace mgom

#endif
