#include "mlf/golden.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "mlf/errors.hpp"

namespace mlf {

std::vector<GoldenRecord> read_golden(std::istream& in) {
  std::vector<GoldenRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    GoldenRecord r;
    if (!(fields >> r.alpha >> r.beta >> r.t >> r.value >> r.est_error)) {
      throw IOError("golden file: malformed record on line " + std::to_string(line_no));
    }
    out.push_back(r);
  }
  return out;
}

std::vector<GoldenRecord> read_golden_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open golden file " + path);
  return read_golden(in);
}

void write_golden(std::ostream& out, const std::vector<GoldenRecord>& records,
                  const std::vector<std::string>& comment) {
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  for (const auto& c : comment) buf << "# " << c << '\n';
  buf << std::setprecision(30);
  for (const auto& r : records) {
    buf << r.alpha << ' ' << r.beta << ' ' << r.t << ' ' << r.value << ' ' << r.est_error << '\n';
  }
  out << buf.str();
  if (!out) throw IOError("golden file: write failed");
}

}  // namespace mlf
