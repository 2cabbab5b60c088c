// Compares the OpenMP quadrature kernel against the serial reference on the
// same sample table.  Both reduce in index order, so the results must match
// bitwise; the table prints the timings and the worst component difference.

#include <chrono>
#include <cstdio>

#include "ncx/contour.hpp"
#include "ncx/elementary.hpp"

using namespace ncx;

namespace {

double time_ms(const Integrand& f, const PiecewisePath& path, int pieces,
               bool parallel, NComplex& result) {
  const auto t0 = std::chrono::steady_clock::now();
  result = integrate_fixed(f, path, pieces, parallel);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  const int n = 8;
  Spectrum sc;
  sc.variant = Variant::polar;
  sc.n = n;
  sc.v_plus = 1.1;
  sc.v_minus = -1.3;
  for (int j = 1; j <= num_pairs(Variant::polar, n); ++j)
    sc.pairs.emplace_back(0.9 + 0.1 * j, -0.6);
  const NComplex center = from_spectrum(sc);
  const PiecewisePath circle = plane_circle(center, 1, 1.0, 256);
  const Integrand f{[](const NComplex& u) { return exp(u); }, {}};

  std::printf("%-12s %-12s %-12s %-10s %-10s\n", "pieces/seg", "serial ms",
              "parallel ms", "speedup", "max |diff|");
  for (int pieces : {64, 256, 1024, 4096}) {
    NComplex serial = NComplex::zero(Variant::polar, n);
    NComplex parallel = NComplex::zero(Variant::polar, n);
    const double ts = time_ms(f, circle, pieces, false, serial);
    const double tp = time_ms(f, circle, pieces, true, parallel);
    std::printf("%-12d %-12.2f %-12.2f %-10.2f %-10.3g\n", pieces, ts, tp,
                ts / tp, max_abs_diff(serial, parallel));
  }
  return 0;
}
