#include "qcl/funcodes.hpp"

#include <cmath>
#include <optional>

#include "qcl/kernels.hpp"
#include "qcl/parallel.hpp"

namespace qcl {
namespace {

// scaled generator rows in kernel encoding, padded with zero bytes
struct EncodedRows {
  int R = 0;
  int q = 0;
  std::size_t padded = 0;
  std::vector<std::vector<std::uint8_t>> scaled;  // index j*q + alpha

  EncodedRows(const FieldSpec& F, const WeightKernel& K,
              const std::vector<std::vector<Fel>>& rows, int n) {
    R = int(rows.size());
    q = F.q;
    padded = WeightKernel::padded(std::size_t(n));
    scaled.assign(std::size_t(R) * q, std::vector<std::uint8_t>(padded, 0));
    for (int j = 0; j < R; ++j)
      for (int a = 0; a < q; ++a) {
        auto& buf = scaled[std::size_t(j) * q + a];
        for (int i = 0; i < n; ++i) buf[i] = K.encode(F.mul(Fel(a), rows[j][i]));
      }
  }
};

// Walk all tuples with prefix number in [pre_begin, pre_end), odometer order
// (last coefficient fastest). The prefix covers the first L coefficients.
// leaf(weight, digits) is called once per tuple.
template <class Leaf>
void walk_tuples(const WeightKernel& K, const EncodedRows& er, int L, std::uint64_t pre_begin,
                 std::uint64_t pre_end, Leaf&& leaf) {
  const int R = er.R;
  const int q = er.q;
  const std::size_t P = er.padded;
  std::vector<std::vector<std::uint8_t>> partial(R + 1, std::vector<std::uint8_t>(P, 0));
  std::vector<Fel> digits(R, 0);

  auto rec = [&](auto&& self, int level) -> void {
    if (level == R - 1) {
      for (int a = 0; a < q; ++a) {
        digits[level] = Fel(a);
        std::uint32_t w =
            K.vadd_count(partial[level].data(), er.scaled[std::size_t(level) * q + a].data(), P);
        leaf(w, digits);
      }
      return;
    }
    for (int a = 0; a < q; ++a) {
      digits[level] = Fel(a);
      K.vadd(partial[level].data(), er.scaled[std::size_t(level) * q + a].data(),
             partial[level + 1].data(), P);
      self(self, level + 1);
    }
  };

  for (std::uint64_t pre = pre_begin; pre < pre_end; ++pre) {
    std::uint64_t t = pre;
    for (int j = L - 1; j >= 0; --j) {
      digits[j] = Fel(t % q);
      t /= q;
    }
    for (int j = 0; j < L; ++j)
      K.vadd(partial[j].data(), er.scaled[std::size_t(j) * q + digits[j]].data(),
             partial[j + 1].data(), P);
    rec(rec, L);
  }
}

int prefix_levels(int R) { return R >= 3 ? 2 : R - 1; }

std::uint64_t pow_u64(int q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= std::uint64_t(q);
  return r;
}

}  // namespace

FunctionalCode build_code(const Geometry& G, const Form4& f) {
  const FieldSpec& F = G.field();
  Mask zm = zero_mask(G, f);
  Classification c = classify4(G, f, zm);
  if (c.cls != SurfaceClass::Cone && c.cls != SurfaceClass::Hyperbolic &&
      c.cls != SurfaceClass::Elliptic)
    throw std::invalid_argument(std::string("functional codes are built on cones and "
                                            "non-degenerate quadrics, got ") +
                                to_string(c.cls));
  FunctionalCode code;
  code.f = f;
  code.cls = c.cls;
  for (int i = 0; i < zm.bits; ++i)
    if (zm.test(i)) code.columns.push_back(i);
  code.n = int(code.columns.size());

  const auto& pts = G.points();
  code.monomial_rows.assign(10, std::vector<Fel>(code.n, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      auto& row = code.monomial_rows[mon4_index(i, j)];
      for (int t = 0; t < code.n; ++t) {
        const Point& x = pts[code.columns[t]];
        row[t] = F.mul(x.c[i], x.c[j]);
      }
    }

  // reduced row echelon form of the evaluation matrix
  std::vector<std::vector<Fel>> rows = code.monomial_rows;
  int rank = 0;
  for (int col = 0; col < code.n && rank < int(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < int(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Fel s = F.inv(rows[rank][col]);
    for (int t = 0; t < code.n; ++t) rows[rank][t] = F.mul(rows[rank][t], s);
    for (int r = 0; r < int(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Fel fc = rows[r][col];
      for (int t = 0; t < code.n; ++t) rows[r][t] = F.sub(rows[r][t], F.mul(fc, rows[rank][t]));
    }
    ++rank;
  }
  code.k = rank;
  code.gen.assign(rows.begin(), rows.begin() + rank);
  return code;
}

int weight_of(const Geometry& G, const FunctionalCode& code, const Form4& g) {
  const FieldSpec& F = G.field();
  const auto& pts = G.points();
  int w = 0;
  for (int c : code.columns)
    if (evaluate(F, g, pts[c]) != 0) ++w;
  return w;
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::vector<int> WeightDistribution::nonzero_weights() const {
  std::vector<int> w;
  for (int i = 1; i < int(counts.size()); ++i)
    if (counts[i] > 0) w.push_back(i);
  return w;
}

RowSpaceScan scan_row_space(const FieldSpec& F, const std::vector<std::vector<Fel>>& rows, int n,
                            int workers, const std::string& kernel_impl) {
  if (rows.empty()) throw std::invalid_argument("row-space scan needs at least one row");
  WeightKernel K(F, kernel_impl);
  EncodedRows er(F, K, rows, n);
  const int R = er.R;
  const int L = prefix_levels(R);
  const std::uint64_t prefixes = pow_u64(F.q, L);
  workers = resolve_workers(workers);

  struct Local {
    std::vector<std::uint64_t> counts;
    std::vector<std::optional<std::vector<Fel>>> witness;
  };
  std::vector<Local> locals(workers);
  run_workers(workers, [&](int w) {
    auto [lo, hi] = chunk(prefixes, workers, w);
    Local& L_ = locals[w];
    L_.counts.assign(n + 1, 0);
    L_.witness.assign(n + 1, std::nullopt);
    walk_tuples(K, er, L, lo, hi, [&](std::uint32_t wt, const std::vector<Fel>& digits) {
      ++L_.counts[wt];
      if (!L_.witness[wt]) L_.witness[wt] = digits;
    });
  });

  RowSpaceScan out;
  out.counts.assign(n + 1, 0);
  out.witnesses.assign(n + 1, {});
  for (int w = 0; w < workers; ++w)
    for (int i = 0; i <= n; ++i) {
      out.counts[i] += locals[w].counts[i];
      if (out.witnesses[i].empty() && locals[w].witness[i]) out.witnesses[i] = *locals[w].witness[i];
    }
  return out;
}

std::vector<std::vector<Fel>> tuples_with_weight(const FieldSpec& F,
                                                 const std::vector<std::vector<Fel>>& rows, int n,
                                                 int target_weight, bool canonical_only,
                                                 int workers, const std::string& kernel_impl) {
  WeightKernel K(F, kernel_impl);
  EncodedRows er(F, K, rows, n);
  const int L = prefix_levels(er.R);
  const std::uint64_t prefixes = pow_u64(F.q, L);
  workers = resolve_workers(workers);

  std::vector<std::vector<std::vector<Fel>>> locals(workers);
  run_workers(workers, [&](int w) {
    auto [lo, hi] = chunk(prefixes, workers, w);
    walk_tuples(K, er, L, lo, hi, [&](std::uint32_t wt, const std::vector<Fel>& digits) {
      if (int(wt) != target_weight) return;
      if (canonical_only) {
        for (Fel d : digits) {
          if (d == 0) continue;
          if (d != 1) return;
          break;
        }
      }
      locals[w].push_back(digits);
    });
  });

  std::vector<std::vector<Fel>> out;
  for (auto& l : locals)
    for (auto& t : l) out.push_back(std::move(t));
  return out;
}

WeightDistribution weight_distribution(const FunctionalCode& code, const FieldSpec& F, int workers,
                                       bool force, const std::string& kernel_impl) {
  if (!force && std::pow(double(F.q), double(code.k)) > 1e10)
    throw SizeGuardError("q^k exceeds the enumeration guard (use force to override)");
  RowSpaceScan scan = scan_row_space(F, code.gen, code.n, workers, kernel_impl);
  WeightDistribution d;
  d.counts = std::move(scan.counts);
  if (d.counts[0] != 1)
    throw std::logic_error("generator rows are not independent");  // unreachable after RREF
  return d;
}

WeightHierarchy weight_hierarchy(const WeightDistribution& d) {
  std::vector<int> w = d.nonzero_weights();
  if (w.size() < 3)
    throw std::invalid_argument("weight hierarchy needs at least three distinct nonzero weights");
  return {w[0], w[1], w[2]};
}

CodeParams expected_params(SurfaceClass cls, int q) {
  switch (cls) {
    case SurfaceClass::Cone:
      return {q * q + q + 1, 9, q * (q - 3), q * (q - 2), (q - 1) * (q - 1)};
    case SurfaceClass::Hyperbolic:
      return {(q + 1) * (q + 1), 9, (q - 1) * (q - 1), q * (q - 1), q * q - q + 1};
    case SurfaceClass::Elliptic:
      return {q * q + 1, 9, q * q - 2 * q - 1, q * (q - 2), (q - 1) * (q - 1)};
    default:
      throw std::invalid_argument("no closed-form parameters for this class");
  }
}

}  // namespace qcl
