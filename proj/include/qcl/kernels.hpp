// kernels.hpp — data-parallel inner loops for codeword enumeration.
//
// The hot operation is: add a scaled generator row to an accumulator of
// field elements and count the nonzero coordinates. Elements are packed
// one per byte in an encoding chosen per field so that vector addition
// needs no general table lookup:
//
//   Char2       p = 2, any m    rep as is, addition is XOR
//   PrimeByte   m = 1           rep as is, add then conditional subtract p
//   PackedPair  m = 2, p <= 7   (high digit << 4) | low digit, nibble-wise
//                               add and mod-p correction (digit sums < 16)
//   Generic     anything else   rep as is, addition via the q*q field table
//
// Zero encodes to byte 0 in every encoding, so buffers may be padded with
// zero bytes and counted blockwise. A scalar reference implementation is
// always available; an AVX2 variant is selected at runtime when the CPU
// supports it (override with QCL_KERNEL=scalar|avx2).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcl/gf.hpp"

namespace qcl {

enum class KernelEncoding { Char2, PrimeByte, PackedPair, Generic };

const char* to_string(KernelEncoding e);
KernelEncoding choose_encoding(const FieldSpec& F);

struct KernelCtx {
  std::uint8_t p = 0;
  std::uint16_t q = 0;
  const Fel* add_tab = nullptr;  // Generic only
};

class WeightKernel {
 public:
  // impl: "" (auto, honoring QCL_KERNEL), "scalar" or "avx2"
  explicit WeightKernel(const FieldSpec& F, const std::string& impl = {});

  const std::string& impl_name() const { return impl_; }
  KernelEncoding encoding() const { return enc_; }

  static constexpr std::size_t kBlock = 32;
  static std::size_t padded(std::size_t n) { return (n + kBlock - 1) / kBlock * kBlock; }

  std::uint8_t encode(Fel rep) const;
  Fel decode(std::uint8_t b) const;

  // dst = a (+) b over a padded buffer; dst may alias a
  void vadd(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* dst,
            std::size_t n_padded) const {
    vadd_(ctx_, a, b, dst, n_padded);
  }
  // |{i : a[i] (+) b[i] != 0}| over a padded buffer
  std::uint32_t vadd_count(const std::uint8_t* a, const std::uint8_t* b,
                           std::size_t n_padded) const {
    return vcnt_(ctx_, a, b, n_padded);
  }

  static bool avx2_available();
  static std::vector<std::string> available_impls();

 private:
  using VaddFn = void (*)(const KernelCtx&, const std::uint8_t*, const std::uint8_t*,
                          std::uint8_t*, std::size_t);
  using VcntFn = std::uint32_t (*)(const KernelCtx&, const std::uint8_t*, const std::uint8_t*,
                                   std::size_t);
  KernelEncoding enc_;
  KernelCtx ctx_;
  std::string impl_;
  VaddFn vadd_;
  VcntFn vcnt_;
};

// scalar reference ops (exposed for the equivalence tests)
namespace kern_scalar {
void vadd_char2(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::uint8_t*,
                std::size_t);
void vadd_prime(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::uint8_t*,
                std::size_t);
void vadd_packed(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::uint8_t*,
                 std::size_t);
void vadd_generic(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::uint8_t*,
                  std::size_t);
std::uint32_t vcnt_char2(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::size_t);
std::uint32_t vcnt_prime(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::size_t);
std::uint32_t vcnt_packed(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::size_t);
std::uint32_t vcnt_generic(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::size_t);
}  // namespace kern_scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace kern_avx2 {
void vadd_char2(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::uint8_t*,
                std::size_t);
void vadd_prime(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::uint8_t*,
                std::size_t);
void vadd_packed(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::uint8_t*,
                 std::size_t);
std::uint32_t vcnt_char2(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::size_t);
std::uint32_t vcnt_prime(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::size_t);
std::uint32_t vcnt_packed(const KernelCtx&, const std::uint8_t*, const std::uint8_t*, std::size_t);
}  // namespace kern_avx2
#endif

}  // namespace qcl
