#pragma once

#include <cstddef>
#include <vector>

namespace su21::kernels {

// sum_k coef[k] * s^a[k] * c^b[k]
struct TrigPolyF64 {
  std::vector<int> a, b;
  std::vector<double> coef;
  int max_a = 0, max_b = 0;

  void push(int ea, int eb, double c);
};

enum class Path { scalar, avx2 };

void eval_trig_poly_scalar(const TrigPolyF64& p, const double* s, const double* c, double* out, std::size_t n);
// AVX2+FMA variant; falls back to scalar when the CPU lacks it or the build is not x86-64
void eval_trig_poly_avx2(const TrigPolyF64& p, const double* s, const double* c, double* out, std::size_t n);

bool avx2_available();
Path active_path();
// SU21_KERNEL=scalar forces the reference path
void eval_trig_poly(const TrigPolyF64& p, const double* s, const double* c, double* out, std::size_t n);

}  // namespace su21::kernels
