// gf.hpp — exact arithmetic in GF(q), q = p^m, 3 <= q <= 81.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcl {

// Element of GF(q), stored as its rep: an integer in [0, q) whose base-p
// digits (least significant first) are the coefficients of a polynomial of
// degree < m over GF(p). rep 0 is the additive identity, rep 1 the
// multiplicative identity; for m > 1, rep p is the residue class of x,
// printed as 'a'.
using Fel = std::uint8_t;

struct FieldSpec {
  int p = 0;  // prime characteristic
  int m = 0;  // extension degree
  int q = 0;  // p^m
  // monic irreducible modulus over GF(p), m+1 coefficients, constant first
  std::vector<int> modulus;

  std::vector<Fel> add_tab;  // q*q, row-major
  std::vector<Fel> mul_tab;  // q*q
  std::vector<Fel> neg_tab;  // q
  std::vector<Fel> inv_tab;  // q, entry 0 unused

  Fel add(Fel a, Fel b) const {
    check(a);
    check(b);
    return add_tab[std::size_t(a) * q + b];
  }
  Fel mul(Fel a, Fel b) const {
    check(a);
    check(b);
    return mul_tab[std::size_t(a) * q + b];
  }
  Fel neg(Fel a) const {
    check(a);
    return neg_tab[a];
  }
  Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }
  Fel inv(Fel a) const;  // throws std::domain_error for a = 0
  Fel pow(Fel a, long e) const;
  // the image of an integer under Z -> GF(q) (reduction mod p)
  Fel from_int(long v) const;

  void check(Fel a) const;  // throws std::out_of_range for rep >= q

  std::string element_str(Fel a) const;  // "0", "2", "a", "2a+1", ...
  std::string modulus_str() const;       // "x^2+x+1"
};

// Field with the lexicographically smallest monic irreducible modulus of
// degree m over GF(p) (coefficient tuples compared constant term first).
// For m = 1 the modulus is x. Throws std::invalid_argument for non-prime p,
// m < 1, p^m < 3 or p^m > 81.
FieldSpec make_field(int p, int m);

// all q elements in ascending rep order: 0, 1, ...
std::vector<Fel> field_elements(const FieldSpec& F);

bool is_prime(int n);

}  // namespace qcl
