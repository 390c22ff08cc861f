#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gring/errors.hpp"

namespace gring {

// F_{p^m} with elements encoded as the base-p integer of their coefficient
// vector: code = c0 + c1*p + ... + c_{m-1}*p^{m-1}. All files and tables use
// this encoding. For q <= 4096 multiplication and inversion go through
// exp/log tables over a fixed primitive element; above that, schoolbook
// polynomial arithmetic modulo the modulus.
class FiniteField {
 public:
  // modulus: monic degree-m coefficient list [c0..cm]. When absent, the
  // lexicographically smallest monic irreducible (by base-p code of
  // [c0..c_{m-1}]) is selected, so defaults are reproducible.
  explicit FiniteField(int p, int m = 1, std::optional<std::vector<int>> modulus = std::nullopt);

  int p() const { return p_; }
  int m() const { return m_; }
  uint32_t q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  uint32_t primitive() const { return primitive_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, long long e) const;
  // a^(p^k); k is reduced mod m.
  uint32_t frobenius(uint32_t a, int k) const;
  int unit_order(uint32_t a) const;
  bool is_unit(uint32_t a) const { return a != 0 && a < q_; }

  std::vector<uint8_t> digits(uint32_t code) const;
  uint32_t from_digits(const std::vector<uint8_t>& d) const;
  std::string poly_str(uint32_t code) const;

  static bool is_prime(int n);

 private:
  int p_, m_;
  uint32_t q_;
  std::vector<int> modulus_;
  bool lut_ = false;
  uint32_t primitive_ = 1;
  std::vector<uint32_t> exp_, log_;
  std::vector<std::vector<uint32_t>> frob_;

  uint32_t polymul(uint32_t a, uint32_t b) const;
  uint32_t polypow(uint32_t a, unsigned long long e) const;
  void build_tables();
};

// Checked element wrapper; the heavy loops use raw codes on FiniteField.
class FieldElem {
 public:
  FieldElem() : f_(nullptr), code_(0) {}
  FieldElem(const FiniteField& f, uint32_t code);

  uint32_t code() const { return code_; }
  const FiniteField& field() const;
  bool is_zero() const { return code_ == 0; }

  friend FieldElem operator+(FieldElem a, FieldElem b);
  friend FieldElem operator-(FieldElem a, FieldElem b);
  friend FieldElem operator*(FieldElem a, FieldElem b);
  friend FieldElem operator/(FieldElem a, FieldElem b);
  FieldElem pow(long long e) const;
  FieldElem frobenius(int k) const;
  friend bool operator==(FieldElem a, FieldElem b) { return a.f_ == b.f_ && a.code_ == b.code_; }
  friend bool operator!=(FieldElem a, FieldElem b) { return !(a == b); }

 private:
  const FiniteField* f_;
  uint32_t code_;
  static void check_same(const FieldElem& a, const FieldElem& b);
};

}  // namespace gring
