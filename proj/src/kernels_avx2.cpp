// AVX2 variants of the weight-enumeration kernels. This translation unit is
// compiled with -mavx2; callers dispatch here only after a runtime CPU check.
#include "qcl/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace qcl::kern_avx2 {
namespace {

inline std::uint32_t count_nonzero_block(__m256i t) {
  __m256i z = _mm256_cmpeq_epi8(t, _mm256_setzero_si256());
  std::uint32_t zeros = std::uint32_t(_mm256_movemask_epi8(z));
  return 32u - std::uint32_t(__builtin_popcount(zeros));
}

inline __m256i add_prime_block(__m256i a, __m256i b, __m256i pv) {
  // bytes are < p, so a+b < 2p <= 254; pick min(sum, sum - p) unsigned:
  // sum < p wraps below zero and loses, sum >= p wins with the reduced value
  __m256i sum = _mm256_add_epi8(a, b);
  return _mm256_min_epu8(sum, _mm256_sub_epi8(sum, pv));
}

inline __m256i mod_table(std::uint8_t p) {
  alignas(32) std::uint8_t t[32];
  for (int i = 0; i < 32; ++i) t[i] = std::uint8_t((i & 15) % p);
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(t));
}

inline __m256i add_packed_block(__m256i a, __m256i b, __m256i mtab, __m256i lo_mask) {
  // nibble digit sums stay below 16, then reduce each nibble mod p via pshufb
  __m256i sum = _mm256_add_epi8(a, b);
  __m256i lo = _mm256_and_si256(sum, lo_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(sum, 4), lo_mask);
  lo = _mm256_shuffle_epi8(mtab, lo);
  hi = _mm256_shuffle_epi8(mtab, hi);
  return _mm256_or_si256(_mm256_slli_epi16(hi, 4), lo);
}

}  // namespace

void vadd_char2(const KernelCtx&, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst,
                std::size_t n) {
  for (std::size_t i = 0; i < n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(va, vb));
  }
}

std::uint32_t vcnt_char2(const KernelCtx&, const std::uint8_t* a, const std::uint8_t* b,
                         std::size_t n) {
  std::uint32_t cnt = 0;
  for (std::size_t i = 0; i < n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    cnt += count_nonzero_block(_mm256_xor_si256(va, vb));
  }
  return cnt;
}

void vadd_prime(const KernelCtx& c, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst,
                std::size_t n) {
  const __m256i pv = _mm256_set1_epi8(char(c.p));
  for (std::size_t i = 0; i < n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), add_prime_block(va, vb, pv));
  }
}

std::uint32_t vcnt_prime(const KernelCtx& c, const std::uint8_t* a, const std::uint8_t* b,
                         std::size_t n) {
  const __m256i pv = _mm256_set1_epi8(char(c.p));
  std::uint32_t cnt = 0;
  for (std::size_t i = 0; i < n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    cnt += count_nonzero_block(add_prime_block(va, vb, pv));
  }
  return cnt;
}

void vadd_packed(const KernelCtx& c, const std::uint8_t* a, const std::uint8_t* b,
                 std::uint8_t* dst, std::size_t n) {
  const __m256i mtab = mod_table(c.p);
  const __m256i lo_mask = _mm256_set1_epi8(0x0F);
  for (std::size_t i = 0; i < n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        add_packed_block(va, vb, mtab, lo_mask));
  }
}

std::uint32_t vcnt_packed(const KernelCtx& c, const std::uint8_t* a, const std::uint8_t* b,
                          std::size_t n) {
  const __m256i mtab = mod_table(c.p);
  const __m256i lo_mask = _mm256_set1_epi8(0x0F);
  std::uint32_t cnt = 0;
  for (std::size_t i = 0; i < n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    cnt += count_nonzero_block(add_packed_block(va, vb, mtab, lo_mask));
  }
  return cnt;
}

}  // namespace qcl::kern_avx2

#endif  // x86_64
