#include "mlf/bench.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include "mlf/errors.hpp"
#include "mlf/oracle.hpp"

namespace mlf {

namespace {

template <class F>
double median_seconds(int repetitions, F&& f) {
  if (repetitions < 1) throw DomainError("repetitions must be >= 1");
  std::vector<double> runs;
  for (int i = 0; i < repetitions; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    runs.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(runs.begin(), runs.end());
  return runs[runs.size() / 2];
}

// keeps results observable so the timed work is not optimized away
volatile double g_sink = 0.0;

}  // namespace

BenchResult bench_scalar(const MLParams& params, PadeOrder order, int r, int points, double t_max, double accuracy,
                         int repetitions) {
  if (points < 1 || !(t_max > 0.0)) throw DomainError("benchmark needs points >= 1 and t_max > 0");
  std::vector<double> ts(points);
  for (int i = 0; i < points; ++i) ts[i] = t_max * (i + 1) / points;
  BenchResult out{"scalar"};
  out.approx_seconds = median_seconds(repetitions, [&] {
    const DerootedApproximant d = build_derooted(params, order, r);
    double acc = 0.0;
    for (double t : ts) acc += eval_derooted(d, t);
    g_sink = acc;
  });
  out.reference_seconds = median_seconds(repetitions, [&] {
    double acc = 0.0;
    for (double t : ts) acc += mlf_oracle(params, t, accuracy).value;
    g_sink = acc;
  });
  return out;
}

BenchResult bench_matrix(const MLParams& params, PadeOrder order, const DenseMatrix& a, MatrixMethod method,
                         double reference_accuracy, int repetitions) {
  BenchResult out{"matrix-" + to_string(method)};
  out.approx_seconds = median_seconds(repetitions, [&] {
    const RationalApproximant approx = build_pade(params, order);
    g_sink = eval_matrix_rational(approx, a, method)(0, 0);
  });
  out.reference_seconds =
      median_seconds(repetitions, [&] { g_sink = matrix_reference(params, a, reference_accuracy)(0, 0); });
  return out;
}

}  // namespace mlf
