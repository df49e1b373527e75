#include "su21/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SU21_X86 1
#endif

namespace su21::kernels {

namespace {
constexpr int kMaxPow = 64;
}

void TrigPolyF64::push(int ea, int eb, double c) {
  if (ea < 0 || eb < 0 || ea > kMaxPow || eb > kMaxPow) throw std::length_error("trig monomial exponent out of range");
  a.push_back(ea);
  b.push_back(eb);
  coef.push_back(c);
  max_a = std::max(max_a, ea);
  max_b = std::max(max_b, eb);
}

void eval_trig_poly_scalar(const TrigPolyF64& p, const double* s, const double* c, double* out, std::size_t n) {
  double ps[kMaxPow + 1], pc[kMaxPow + 1];
  for (std::size_t i = 0; i < n; ++i) {
    ps[0] = 1.0;
    pc[0] = 1.0;
    for (int k = 1; k <= p.max_a; ++k) ps[k] = ps[k - 1] * s[i];
    for (int k = 1; k <= p.max_b; ++k) pc[k] = pc[k - 1] * c[i];
    double acc = 0.0;
    for (std::size_t t = 0; t < p.coef.size(); ++t) acc += p.coef[t] * ps[p.a[t]] * pc[p.b[t]];
    out[i] = acc;
  }
}

#ifdef SU21_X86
__attribute__((target("avx2,fma"))) static void avx2_body(const TrigPolyF64& p, const double* s, const double* c,
                                                          double* out, std::size_t n) {
  alignas(32) __m256d ps[kMaxPow + 1], pc[kMaxPow + 1];
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vs = _mm256_loadu_pd(s + i);
    __m256d vc = _mm256_loadu_pd(c + i);
    ps[0] = _mm256_set1_pd(1.0);
    pc[0] = ps[0];
    for (int k = 1; k <= p.max_a; ++k) ps[k] = _mm256_mul_pd(ps[k - 1], vs);
    for (int k = 1; k <= p.max_b; ++k) pc[k] = _mm256_mul_pd(pc[k - 1], vc);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t t = 0; t < p.coef.size(); ++t) {
      __m256d term = _mm256_mul_pd(ps[p.a[t]], pc[p.b[t]]);
      acc = _mm256_fmadd_pd(_mm256_set1_pd(p.coef[t]), term, acc);
    }
    _mm256_storeu_pd(out + i, acc);
  }
  if (i < n) eval_trig_poly_scalar(p, s + i, c + i, out + i, n - i);
}
#endif

bool avx2_available() {
#ifdef SU21_X86
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

void eval_trig_poly_avx2(const TrigPolyF64& p, const double* s, const double* c, double* out, std::size_t n) {
#ifdef SU21_X86
  if (avx2_available() && p.max_a <= kMaxPow && p.max_b <= kMaxPow) {
    avx2_body(p, s, c, out, n);
    return;
  }
#endif
  eval_trig_poly_scalar(p, s, c, out, n);
}

Path active_path() {
  static const Path path = [] {
    const char* env = std::getenv("SU21_KERNEL");
    if (env && std::strcmp(env, "scalar") == 0) return Path::scalar;
    return avx2_available() ? Path::avx2 : Path::scalar;
  }();
  return path;
}

void eval_trig_poly(const TrigPolyF64& p, const double* s, const double* c, double* out, std::size_t n) {
  if (active_path() == Path::avx2) {
    eval_trig_poly_avx2(p, s, c, out, n);
  } else {
    eval_trig_poly_scalar(p, s, c, out, n);
  }
}

}  // namespace su21::kernels
