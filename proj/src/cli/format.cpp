#include <charconv>
#include <istream>
#include <sstream>
#include <string>

#include "mlf/cli.hpp"
#include "mlf/errors.hpp"
#include "mlf/partial_fractions.hpp"

namespace mlf::cli {

namespace {

std::string format_digits(double v, int digits) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_csv(double v) { return format_digits(v, 17); }
std::string format_human(double v) { return format_digits(v, 6); }

std::string coeffs_csv(const RationalApproximant& approx) {
  std::string out = "role,degree,value\n";
  const auto row = [&](const char* role, std::size_t k, double v) {
    out += role;
    out += ',' + std::to_string(k) + ',' + format_csv(v) + '\n';
  };
  row("prefactor", 0, approx.prefactor);
  for (std::size_t k = 0; k < approx.num_coeffs.size(); ++k) row("num", k, approx.num_coeffs[k]);
  for (std::size_t k = 0; k < approx.den_coeffs.size(); ++k) row("den", k, approx.den_coeffs[k]);
  const PartialFractionForm pf = to_partial_fractions(approx);
  std::size_t k = 0;
  for (; k < pf.poles.size(); ++k) {
    row("pole_re", k, pf.poles[k].real());
    row("pole_im", k, pf.poles[k].imag());
    row("res_re", k, pf.residues[k].real());
    row("res_im", k, pf.residues[k].imag());
  }
  for (std::size_t j = 0; j < pf.real_poles.size(); ++j, ++k) {
    row("pole_re", k, pf.real_poles[j]);
    row("pole_im", k, 0.0);
    row("res_re", k, pf.real_residues[j]);
    row("res_im", k, 0.0);
  }
  return out;
}

RationalApproximant parse_coeffs_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "role,degree,value") throw IOError("missing coefficient CSV header");
  RationalApproximant out;
  bool have_prefactor = false;
  const auto put = [](std::vector<double>& v, std::size_t k, double x) {
    if (v.size() <= k) v.resize(k + 1, 0.0);
    v[k] = x;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw IOError("malformed coefficient row '" + line + "'");
    const std::string role = line.substr(0, c1);
    std::size_t degree = 0;
    double value = 0.0;
    const char* b1 = line.data() + c1 + 1;
    const char* e1 = line.data() + c2;
    const char* b2 = line.data() + c2 + 1;
    const char* e2 = line.data() + line.size();
    if (std::from_chars(b1, e1, degree).ptr != e1 || std::from_chars(b2, e2, value).ptr != e2) {
      throw IOError("malformed coefficient row '" + line + "'");
    }
    if (role == "prefactor") {
      out.prefactor = value;
      have_prefactor = true;
    } else if (role == "num") {
      put(out.num_coeffs, degree, value);
    } else if (role == "den") {
      put(out.den_coeffs, degree, value);
    }
  }
  if (!have_prefactor || out.num_coeffs.empty() || out.den_coeffs.size() != out.num_coeffs.size() + 1) {
    throw IOError("coefficient CSV is incomplete");
  }
  out.order = out.num_coeffs.size() == 4 ? PadeOrder::k7_2 : PadeOrder::k13_4;
  return out;
}

}  // namespace mlf::cli
