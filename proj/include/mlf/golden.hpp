#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlf {

/// One reference value E_{alpha,beta}(-t).
struct GoldenRecord {
  double alpha = 0.0;
  double beta = 0.0;
  double t = 0.0;
  double value = 0.0;
  double est_error = 0.0;
};

/// Whitespace-separated `alpha beta t value est_error`, one record per line;
/// blank lines and lines starting with '#' are skipped.
std::vector<GoldenRecord> read_golden(std::istream& in);
std::vector<GoldenRecord> read_golden_file(const std::string& path);

/// Writes records with 30 significant digits, preceded by `comment` lines
/// (each prefixed with "# ").
void write_golden(std::ostream& out, const std::vector<GoldenRecord>& records,
                  const std::vector<std::string>& comment = {});

}  // namespace mlf
