#include "gring/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gring/fpmat.hpp"

namespace gring {

namespace {

constexpr uint32_t kLutMax = 4096;
constexpr uint64_t kFieldSizeCap = 1u << 20;

// dense polynomials over F_p, lowest coefficient first
using Poly = std::vector<int>;

int pdeg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<size_t>(i)]) return i;
  return -1;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  int df = pdeg(f);
  Poly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  // f is monic
  for (int i = static_cast<int>(r.size()) - 1; i >= df; --i) {
    int c = r[static_cast<size_t>(i)];
    if (!c) continue;
    r[static_cast<size_t>(i)] = 0;
    for (int j = 0; j < df; ++j) {
      size_t idx = static_cast<size_t>(i - df + j);
      r[idx] = ((r[idx] - c * f[static_cast<size_t>(j)]) % p + p) % p;
    }
  }
  r.resize(static_cast<size_t>(df));
  return r;
}

Poly ppowmod(Poly base, unsigned long long e, const Poly& f, int p) {
  Poly r(static_cast<size_t>(pdeg(f)), 0);
  r[0] = 1;
  while (e) {
    if (e & 1ull) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly pmod(Poly a, const Poly& b, int p) {
  int db = pdeg(b);
  int lead = b[static_cast<size_t>(db)];
  int li = inv_mod(lead, p);
  for (int i = pdeg(a); i >= db; i = pdeg(a)) {
    int c = (a[static_cast<size_t>(i)] * li) % p;
    for (int j = 0; j <= db; ++j) {
      size_t idx = static_cast<size_t>(i - db + j);
      a[idx] = ((a[idx] - c * b[static_cast<size_t>(j)]) % p + p) % p;
    }
  }
  return a;
}

Poly pgcd(Poly a, Poly b, int p) {
  while (pdeg(b) >= 0) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin irreducibility test for a monic degree-m polynomial over F_p.
bool irreducible(const Poly& f, int p) {
  int m = pdeg(f);
  if (m < 1) return false;
  if (m == 1) return true;
  Poly x(static_cast<size_t>(m), 0);
  if (m > 1) x[1] = 1;
  // x^(p^m) == x mod f
  auto ppow = [&](unsigned long long e) { return ppowmod(x, e, f, p); };
  unsigned long long pm = 1;
  for (int i = 0; i < m; ++i) pm *= static_cast<unsigned long long>(p);
  Poly xq = x;
  for (int i = 0; i < m; ++i) xq = ppowmod(xq, static_cast<unsigned long long>(p), f, p);
  if (pdeg(xq) != 1 || xq[1] != 1 || xq[0] != 0) return false;
  // gcd(x^(p^(m/l)) - x, f) == 1 for every prime l | m
  for (int l = 2; l <= m; ++l) {
    if (m % l) continue;
    bool lp = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) lp = false;
    if (!lp) continue;
    int k = m / l;
    Poly xe = x;
    for (int i = 0; i < k; ++i) xe = ppowmod(xe, static_cast<unsigned long long>(p), f, p);
    Poly diff = xe;
    diff[1] = ((diff[1] - 1) % p + p) % p;
    Poly g = pgcd(f, diff, p);
    if (pdeg(g) != 0) return false;
  }
  (void)ppow;
  (void)pm;
  return true;
}

}  // namespace

bool FiniteField::is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteField::FiniteField(int p, int m, std::optional<std::vector<int>> modulus) : p_(p), m_(m) {
  if (!is_prime(p)) fail(Error::Kind::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
  if (p > 251) fail(Error::Kind::InvalidArgument, "characteristic above 251 unsupported");
  if (m < 1) fail(Error::Kind::InvalidArgument, "extension degree must be >= 1");
  uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<uint64_t>(p);
    if (q > kFieldSizeCap) fail(Error::Kind::InvalidArgument, "field larger than 2^20 elements");
  }
  q_ = static_cast<uint32_t>(q);

  if (modulus) {
    modulus_ = *modulus;
    if (static_cast<int>(modulus_.size()) != m + 1 || modulus_[static_cast<size_t>(m)] != 1)
      fail(Error::Kind::InvalidArgument, "modulus must be monic of degree m");
    for (auto& c : modulus_) {
      c %= p;
      if (c < 0) c += p;
    }
    if (!irreducible(modulus_, p)) fail(Error::Kind::ReducibleModulus, "modulus is reducible over F_p");
  } else {
    // smallest base-p code of [c0..c_{m-1}] whose monic polynomial is irreducible
    uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= static_cast<uint64_t>(p);
    bool found = false;
    for (uint64_t code = 0; code < count; ++code) {
      Poly f(static_cast<size_t>(m + 1), 0);
      uint64_t c = code;
      for (int i = 0; i < m; ++i) {
        f[static_cast<size_t>(i)] = static_cast<int>(c % static_cast<uint64_t>(p));
        c /= static_cast<uint64_t>(p);
      }
      f[static_cast<size_t>(m)] = 1;
      if (irreducible(f, p)) {
        modulus_ = std::move(f);
        found = true;
        break;
      }
    }
    if (!found) fail(Error::Kind::InvalidArgument, "no irreducible modulus found");
  }
  build_tables();
}

uint32_t FiniteField::polymul(uint32_t a, uint32_t b) const {
  Poly pa(static_cast<size_t>(m_), 0), pb(static_cast<size_t>(m_), 0);
  uint32_t t = a;
  for (int i = 0; i < m_; ++i) {
    pa[static_cast<size_t>(i)] = static_cast<int>(t % static_cast<uint32_t>(p_));
    t /= static_cast<uint32_t>(p_);
  }
  t = b;
  for (int i = 0; i < m_; ++i) {
    pb[static_cast<size_t>(i)] = static_cast<int>(t % static_cast<uint32_t>(p_));
    t /= static_cast<uint32_t>(p_);
  }
  Poly r = pmulmod(pa, pb, modulus_, p_);
  uint32_t code = 0;
  for (int i = m_ - 1; i >= 0; --i) code = code * static_cast<uint32_t>(p_) + static_cast<uint32_t>(r[static_cast<size_t>(i)]);
  return code;
}

uint32_t FiniteField::polypow(uint32_t a, unsigned long long e) const {
  uint32_t r = 1, base = a;
  while (e) {
    if (e & 1ull) r = polymul(r, base);
    base = polymul(base, base);
    e >>= 1;
  }
  return r;
}

void FiniteField::build_tables() {
  if (q_ > kLutMax) return;
  // find a primitive element: smallest code of multiplicative order q-1
  uint32_t n = q_ - 1;
  std::vector<uint32_t> prime_factors;
  {
    uint32_t t = n;
    for (uint32_t d = 2; d * d <= t; ++d)
      while (t % d == 0) {
        if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
        t /= d;
      }
    if (t > 1) prime_factors.push_back(t);
  }
  primitive_ = 1;
  if (n > 1) {
    for (uint32_t g = 2; g < q_; ++g) {
      bool ok = true;
      for (uint32_t f : prime_factors)
        if (polypow(g, n / f) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        primitive_ = g;
        break;
      }
    }
  }
  exp_.assign(n, 1);
  log_.assign(q_, 0);
  uint32_t v = 1;
  for (uint32_t i = 0; i < n; ++i) {
    exp_[i] = v;
    log_[v] = i;
    v = polymul(v, primitive_);
  }
  frob_.assign(static_cast<size_t>(m_), std::vector<uint32_t>(q_, 0));
  for (int k = 0; k < m_; ++k) {
    unsigned long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= static_cast<unsigned long long>(p_);
    for (uint32_t a = 1; a < q_; ++a)
      frob_[static_cast<size_t>(k)][a] = exp_[static_cast<uint32_t>((static_cast<unsigned long long>(log_[a]) * pk) % n)];
  }
  lut_ = true;
}

uint32_t FiniteField::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  uint32_t r = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    uint32_t da = a % static_cast<uint32_t>(p_), db = b % static_cast<uint32_t>(p_);
    a /= static_cast<uint32_t>(p_);
    b /= static_cast<uint32_t>(p_);
    r += ((da + db) % static_cast<uint32_t>(p_)) * mult;
    mult *= static_cast<uint32_t>(p_);
  }
  return r;
}

uint32_t FiniteField::neg(uint32_t a) const {
  if (p_ == 2) return a;
  uint32_t r = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    uint32_t da = a % static_cast<uint32_t>(p_);
    a /= static_cast<uint32_t>(p_);
    r += ((static_cast<uint32_t>(p_) - da) % static_cast<uint32_t>(p_)) * mult;
    mult *= static_cast<uint32_t>(p_);
  }
  return r;
}

uint32_t FiniteField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FiniteField::mul(uint32_t a, uint32_t b) const {
  if (!a || !b) return 0;
  if (lut_) return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  return polymul(a, b);
}

uint32_t FiniteField::inv(uint32_t a) const {
  if (!a) fail(Error::Kind::DivisionByZero, "inverse of zero");
  if (lut_) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  unsigned long long e = 1;
  for (int i = 0; i < m_; ++i) e *= static_cast<unsigned long long>(p_);
  return polypow(a, e - 2);
}

uint32_t FiniteField::div(uint32_t a, uint32_t b) const {
  if (!b) fail(Error::Kind::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

uint32_t FiniteField::pow(uint32_t a, long long e) const {
  if (e < 0) {
    if (!a) fail(Error::Kind::DivisionByZero, "zero to a negative power");
    return pow(inv(a), -e);
  }
  if (a == 0) return e == 0 ? 1u : 0u;
  if (lut_) {
    uint32_t n = q_ - 1;
    return exp_[static_cast<uint32_t>((static_cast<unsigned long long>(log_[a]) * static_cast<unsigned long long>(e % n)) % n)];
  }
  return polypow(a, static_cast<unsigned long long>(e));
}

uint32_t FiniteField::frobenius(uint32_t a, int k) const {
  k %= m_;
  if (k < 0) k += m_;
  if (!a || k == 0) return a;
  if (lut_) return frob_[static_cast<size_t>(k)][a];
  unsigned long long pk = 1;
  for (int i = 0; i < k; ++i) pk *= static_cast<unsigned long long>(p_);
  return polypow(a, pk);
}

int FiniteField::unit_order(uint32_t a) const {
  if (!a) fail(Error::Kind::DivisionByZero, "order of zero");
  if (lut_) {
    uint32_t n = q_ - 1;
    if (n == 0) return 1;
    return static_cast<int>(n / std::gcd(n, log_[a]));
  }
  int ord = 1;
  uint32_t v = a;
  while (v != 1) {
    v = mul(v, a);
    ++ord;
  }
  return ord;
}

std::vector<uint8_t> FiniteField::digits(uint32_t code) const {
  std::vector<uint8_t> d(static_cast<size_t>(m_), 0);
  for (int i = 0; i < m_; ++i) {
    d[static_cast<size_t>(i)] = static_cast<uint8_t>(code % static_cast<uint32_t>(p_));
    code /= static_cast<uint32_t>(p_);
  }
  return d;
}

uint32_t FiniteField::from_digits(const std::vector<uint8_t>& d) const {
  uint32_t code = 0;
  for (int i = m_ - 1; i >= 0; --i) code = code * static_cast<uint32_t>(p_) + d[static_cast<size_t>(i)];
  return code;
}

std::string FiniteField::poly_str(uint32_t code) const {
  if (code == 0) return "0";
  std::ostringstream os;
  bool first = true;
  auto d = digits(code);
  for (int i = 0; i < m_; ++i) {
    if (!d[static_cast<size_t>(i)]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || d[static_cast<size_t>(i)] != 1) os << static_cast<int>(d[static_cast<size_t>(i)]);
    if (i >= 1) os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

FieldElem::FieldElem(const FiniteField& f, uint32_t code) : f_(&f), code_(code) {
  if (code >= f.q()) fail(Error::Kind::InvalidArgument, "element code out of range");
}

const FiniteField& FieldElem::field() const {
  if (!f_) fail(Error::Kind::InvalidArgument, "empty field element");
  return *f_;
}

void FieldElem::check_same(const FieldElem& a, const FieldElem& b) {
  if (a.f_ != b.f_) fail(Error::Kind::FieldMismatch, "operands belong to different fields");
}

FieldElem operator+(FieldElem a, FieldElem b) {
  FieldElem::check_same(a, b);
  return FieldElem(*a.f_, a.f_->add(a.code_, b.code_));
}
FieldElem operator-(FieldElem a, FieldElem b) {
  FieldElem::check_same(a, b);
  return FieldElem(*a.f_, a.f_->sub(a.code_, b.code_));
}
FieldElem operator*(FieldElem a, FieldElem b) {
  FieldElem::check_same(a, b);
  return FieldElem(*a.f_, a.f_->mul(a.code_, b.code_));
}
FieldElem operator/(FieldElem a, FieldElem b) {
  FieldElem::check_same(a, b);
  return FieldElem(*a.f_, a.f_->div(a.code_, b.code_));
}
FieldElem FieldElem::pow(long long e) const { return FieldElem(*f_, f_->pow(code_, e)); }
FieldElem FieldElem::frobenius(int k) const { return FieldElem(*f_, f_->frobenius(code_, k)); }

}  // namespace gring
