#include "qcl/gf.hpp"

#include <sstream>
#include <stdexcept>

namespace qcl {
namespace {

// dense polynomials over GF(p), coefficient vectors constant-first
using Poly = std::vector<int>;

int pdeg(const Poly& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly pmul(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// remainder of a by monic b
Poly pmod(Poly a, const Poly& b, int p) {
  int db = pdeg(b);
  for (int i = pdeg(a); i >= db; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      int k = i - db + j;
      a[k] = ((a[k] - c * b[j]) % p + p * p) % p;
    }
  }
  a.resize(db > 0 ? db : 1, 0);
  return a;
}

// decode rep -> coefficient digits (length m)
Poly digits_of(int rep, int p, int m) {
  Poly d(m, 0);
  for (int i = 0; i < m; ++i) {
    d[i] = rep % p;
    rep /= p;
  }
  return d;
}

int rep_of(const Poly& d, int p, int m) {
  int r = 0;
  for (int i = m - 1; i >= 0; --i) r = r * p + (i < int(d.size()) ? d[i] : 0);
  return r;
}

bool divides(const Poly& d, const Poly& f, int p) { return pdeg(pmod(f, d, p)) < 0; }

// trial division by every monic polynomial of degree 1..deg(f)/2
bool irreducible(const Poly& f, int p) {
  int n = pdeg(f);
  for (int d = 1; 2 * d <= n; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long t = 0; t < count; ++t) {
      Poly g = digits_of(int(t), p, d);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void FieldSpec::check(Fel a) const {
  if (int(a) >= q) throw std::out_of_range("field element rep out of range");
}

Fel FieldSpec::inv(Fel a) const {
  check(a);
  if (a == 0) throw std::domain_error("division by zero in GF(q)");
  return inv_tab[a];
}

Fel FieldSpec::pow(Fel a, long e) const {
  check(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Fel r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fel FieldSpec::from_int(long v) const {
  long r = v % p;
  if (r < 0) r += p;
  return Fel(r);
}

std::string FieldSpec::element_str(Fel a) const {
  check(a);
  if (m == 1 || int(a) < p) return std::to_string(int(a));
  Poly d = digits_of(a, p, m);
  std::ostringstream os;
  bool first = true;
  for (int i = m - 1; i >= 0; --i) {
    int c = d[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "a";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string FieldSpec::modulus_str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = m; i >= 0; --i) {
    int c = modulus[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FieldSpec make_field(int p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > 81) throw std::invalid_argument("fields larger than GF(81) are not supported");
  }
  if (q < 3) throw std::invalid_argument("field must have at least 3 elements");

  FieldSpec F;
  F.p = p;
  F.m = m;
  F.q = int(q);

  if (m == 1) {
    F.modulus = {0, 1};  // x
  } else {
    // smallest coefficient tuple (c0, c1, ...) with x^m + ... irreducible
    long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    bool found = false;
    for (long t = 0; t < count && !found; ++t) {
      // t encodes the tuple with c0 most significant so that tuple order
      // matches the constant-term-first comparison
      Poly c(m, 0);
      long tt = t;
      for (int i = m - 1; i >= 0; --i) {
        c[i] = int(tt % p);
        tt /= p;
      }
      Poly f = c;
      f.resize(m + 1, 0);
      f[m] = 1;
      if (irreducible(f, p)) {
        F.modulus = f;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");  // unreachable
  }

  const int Q = F.q;
  F.add_tab.assign(std::size_t(Q) * Q, 0);
  F.mul_tab.assign(std::size_t(Q) * Q, 0);
  F.neg_tab.assign(Q, 0);
  F.inv_tab.assign(Q, 0);

  for (int a = 0; a < Q; ++a) {
    Poly da = digits_of(a, p, m);
    for (int b = 0; b < Q; ++b) {
      Poly db = digits_of(b, p, m);
      Poly s(m, 0);
      for (int i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
      F.add_tab[std::size_t(a) * Q + b] = Fel(rep_of(s, p, m));
      Poly prod = m == 1 ? Poly{(da[0] * db[0]) % p} : pmod(pmul(da, db, p), F.modulus, p);
      F.mul_tab[std::size_t(a) * Q + b] = Fel(rep_of(prod, p, m));
    }
    Poly n(m, 0);
    for (int i = 0; i < m; ++i) n[i] = (p - da[i]) % p;
    F.neg_tab[a] = Fel(rep_of(n, p, m));
  }
  for (int a = 1; a < Q; ++a)
    for (int b = 1; b < Q; ++b)
      if (F.mul_tab[std::size_t(a) * Q + b] == 1) {
        F.inv_tab[a] = Fel(b);
        break;
      }
  return F;
}

std::vector<Fel> field_elements(const FieldSpec& F) {
  std::vector<Fel> e(F.q);
  for (int i = 0; i < F.q; ++i) e[i] = Fel(i);
  return e;
}

}  // namespace qcl
