#include "qcl/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qcl {

const char* to_string(KernelEncoding e) {
  switch (e) {
    case KernelEncoding::Char2: return "char2";
    case KernelEncoding::PrimeByte: return "prime_byte";
    case KernelEncoding::PackedPair: return "packed_pair";
    case KernelEncoding::Generic: return "generic";
  }
  return "?";
}

KernelEncoding choose_encoding(const FieldSpec& F) {
  if (F.p == 2) return KernelEncoding::Char2;
  if (F.m == 1) return KernelEncoding::PrimeByte;
  if (F.m == 2 && F.p <= 7) return KernelEncoding::PackedPair;
  return KernelEncoding::Generic;
}

namespace kern_scalar {

void vadd_char2(const KernelCtx&, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void vadd_prime(const KernelCtx& c, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst,
                std::size_t n) {
  const std::uint8_t p = c.p;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t t = std::uint8_t(a[i] + b[i]);
    dst[i] = t >= p ? std::uint8_t(t - p) : t;
  }
}

void vadd_packed(const KernelCtx& c, const std::uint8_t* a, const std::uint8_t* b,
                 std::uint8_t* dst, std::size_t n) {
  const std::uint8_t p = c.p;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t t = std::uint8_t(a[i] + b[i]);  // digit sums stay inside their nibbles
    std::uint8_t lo = t & 0x0F, hi = t >> 4;
    if (lo >= p) lo = std::uint8_t(lo - p);
    if (hi >= p) hi = std::uint8_t(hi - p);
    dst[i] = std::uint8_t((hi << 4) | lo);
  }
}

void vadd_generic(const KernelCtx& c, const std::uint8_t* a, const std::uint8_t* b,
                  std::uint8_t* dst, std::size_t n) {
  const Fel* tab = c.add_tab;
  const std::size_t q = c.q;
  for (std::size_t i = 0; i < n; ++i) dst[i] = tab[std::size_t(a[i]) * q + b[i]];
}

std::uint32_t vcnt_char2(const KernelCtx&, const std::uint8_t* a, const std::uint8_t* b,
                         std::size_t n) {
  std::uint32_t cnt = 0;
  for (std::size_t i = 0; i < n; ++i) cnt += (a[i] ^ b[i]) != 0;
  return cnt;
}

std::uint32_t vcnt_prime(const KernelCtx& c, const std::uint8_t* a, const std::uint8_t* b,
                         std::size_t n) {
  const std::uint8_t p = c.p;
  std::uint32_t cnt = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t t = std::uint8_t(a[i] + b[i]);
    if (t >= p) t = std::uint8_t(t - p);
    cnt += t != 0;
  }
  return cnt;
}

std::uint32_t vcnt_packed(const KernelCtx& c, const std::uint8_t* a, const std::uint8_t* b,
                          std::size_t n) {
  const std::uint8_t p = c.p;
  std::uint32_t cnt = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t t = std::uint8_t(a[i] + b[i]);
    std::uint8_t lo = t & 0x0F, hi = t >> 4;
    if (lo >= p) lo = std::uint8_t(lo - p);
    if (hi >= p) hi = std::uint8_t(hi - p);
    cnt += (lo | hi) != 0;
  }
  return cnt;
}

std::uint32_t vcnt_generic(const KernelCtx& c, const std::uint8_t* a, const std::uint8_t* b,
                           std::size_t n) {
  const Fel* tab = c.add_tab;
  const std::size_t q = c.q;
  std::uint32_t cnt = 0;
  for (std::size_t i = 0; i < n; ++i) cnt += tab[std::size_t(a[i]) * q + b[i]] != 0;
  return cnt;
}

}  // namespace kern_scalar

bool WeightKernel::avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::vector<std::string> WeightKernel::available_impls() {
  std::vector<std::string> v{"scalar"};
  if (avx2_available()) v.push_back("avx2");
  return v;
}

WeightKernel::WeightKernel(const FieldSpec& F, const std::string& impl) {
  enc_ = choose_encoding(F);
  ctx_.p = std::uint8_t(F.p);
  ctx_.q = std::uint16_t(F.q);
  ctx_.add_tab = F.add_tab.data();

  std::string want = impl;
  if (want.empty()) {
    if (const char* env = std::getenv("QCL_KERNEL")) want = env;
  }
  bool use_avx2 = false;
  if (want == "avx2") {
    if (!avx2_available()) throw std::invalid_argument("avx2 kernel requested but not available");
    use_avx2 = true;
  } else if (want.empty() || want == "auto") {
    use_avx2 = avx2_available();
  } else if (want != "scalar") {
    throw std::invalid_argument("unknown kernel impl: " + want);
  }
  // the table-driven encoding has no vector variant
  if (enc_ == KernelEncoding::Generic) use_avx2 = false;

#if defined(__x86_64__) || defined(_M_X64)
  if (use_avx2) {
    impl_ = "avx2";
    switch (enc_) {
      case KernelEncoding::Char2:
        vadd_ = kern_avx2::vadd_char2;
        vcnt_ = kern_avx2::vcnt_char2;
        return;
      case KernelEncoding::PrimeByte:
        vadd_ = kern_avx2::vadd_prime;
        vcnt_ = kern_avx2::vcnt_prime;
        return;
      case KernelEncoding::PackedPair:
        vadd_ = kern_avx2::vadd_packed;
        vcnt_ = kern_avx2::vcnt_packed;
        return;
      default:
        break;
    }
  }
#else
  (void)use_avx2;
#endif

  impl_ = "scalar";
  switch (enc_) {
    case KernelEncoding::Char2:
      vadd_ = kern_scalar::vadd_char2;
      vcnt_ = kern_scalar::vcnt_char2;
      break;
    case KernelEncoding::PrimeByte:
      vadd_ = kern_scalar::vadd_prime;
      vcnt_ = kern_scalar::vcnt_prime;
      break;
    case KernelEncoding::PackedPair:
      vadd_ = kern_scalar::vadd_packed;
      vcnt_ = kern_scalar::vcnt_packed;
      break;
    case KernelEncoding::Generic:
      vadd_ = kern_scalar::vadd_generic;
      vcnt_ = kern_scalar::vcnt_generic;
      break;
  }
}

std::uint8_t WeightKernel::encode(Fel rep) const {
  if (enc_ == KernelEncoding::PackedPair)
    return std::uint8_t(((rep / ctx_.p) << 4) | (rep % ctx_.p));
  return rep;
}

Fel WeightKernel::decode(std::uint8_t b) const {
  if (enc_ == KernelEncoding::PackedPair) return Fel((b >> 4) * ctx_.p + (b & 0x0F));
  return Fel(b);
}

}  // namespace qcl
