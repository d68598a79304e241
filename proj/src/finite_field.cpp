#include "pfister/finite_field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "pfister/error.hpp"

namespace pfister {

int gf2_degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

namespace {

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = gf2_degree(m);
  for (int da = gf2_degree(a); da >= dm; da = gf2_degree(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace

bool gf2_is_irreducible(std::uint32_t p) {
  const int d = gf2_degree(p);
  if (d < 1) return false;
  if (d == 1) return true;
  for (std::uint64_t f = 2; gf2_degree(f) <= d / 2; ++f) {
    if (gf2_degree(f) >= 1 && gf2_mod(p, f) == 0) return false;
  }
  return true;
}

std::uint32_t default_modulus(int k) {
  static const std::uint32_t table[17] = {
      0,
      0x3,      // x + 1
      0x7,      // x^2 + x + 1
      0xB,      // x^3 + x + 1
      0x13,     // x^4 + x + 1
      0x25,     // x^5 + x^2 + 1
      0x43,     // x^6 + x + 1
      0x83,     // x^7 + x + 1
      0x11B,    // x^8 + x^4 + x^3 + x + 1
      0x211,    // x^9 + x^4 + 1
      0x409,    // x^10 + x^3 + 1
      0x805,    // x^11 + x^2 + 1
      0x1053,   // x^12 + x^6 + x^4 + x + 1
      0x201B,   // x^13 + x^4 + x^3 + x + 1
      0x4443,   // x^14 + x^10 + x^6 + x + 1
      0x8003,   // x^15 + x + 1
      0x1100B,  // x^16 + x^12 + x^3 + x + 1
  };
  if (k < 1 || k > 16) throw Error(ErrorCode::InvalidArgument, "field degree must be in [1,16]");
  return table[k];
}

FiniteField::Element FiniteField::mul_reduce(Element a, Element b, int, std::uint32_t modulus) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i)
    if ((b >> i) & 1u) prod ^= static_cast<std::uint64_t>(a) << i;
  return static_cast<Element>(gf2_mod(prod, modulus));
}

FiniteField::Element FiniteField::mul_slow(Element a, Element b) const {
  return mul_reduce(a, b, k_, modulus_);
}

std::shared_ptr<const FiniteField::Tables> FiniteField::build_tables(int k, std::uint32_t modulus) {
  static std::mutex mu;
  static std::map<std::pair<int, std::uint32_t>, std::shared_ptr<const Tables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({k, modulus});
  if (it != cache.end()) return it->second;

  const std::uint32_t q = 1u << k;
  const std::uint32_t n = q - 1;
  std::vector<std::uint32_t> primes;
  {
    std::uint32_t m = n;
    for (std::uint32_t p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    }
    if (m > 1) primes.push_back(m);
  }
  auto slow_pow = [&](Element a, std::uint64_t e) {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul_reduce(r, a, k, modulus);
      a = mul_reduce(a, a, k, modulus);
      e >>= 1;
    }
    return r;
  };
  Element g = 1;
  if (n > 1) {
    for (g = 2; g < q; ++g) {
      bool primitive = true;
      for (std::uint32_t p : primes)
        if (slow_pow(g, n / p) == 1) primitive = false;
      if (primitive) break;
    }
  }
  auto t = std::make_shared<Tables>();
  t->generator = g;
  t->log.assign(q, 0);
  t->exp.assign(2 * static_cast<std::size_t>(n) + 2, 0);
  Element x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    t->exp[i] = x;
    t->exp[i + n] = x;
    t->log[x] = i;
    x = mul_reduce(x, g, k, modulus);
  }
  cache.emplace(std::make_pair(k, modulus), t);
  return t;
}

FiniteField::FiniteField(int k, std::uint32_t modulus) : k_(k), modulus_(modulus) {
  if (k < 1 || k > 16) throw Error(ErrorCode::InvalidArgument, "field degree must be in [1,16]");
  if (gf2_degree(modulus) != k || !gf2_is_irreducible(modulus))
    throw Error(ErrorCode::InvalidArgument, "modulus is not an irreducible polynomial of degree k");
  tables_ = build_tables(k, modulus);
}

FiniteField FiniteField::standard(int k) { return FiniteField(k, default_modulus(k)); }

FiniteField FiniteField::from_spec(const std::string& spec) {
  std::string s = spec;
  if (s.rfind("F_", 0) == 0) s = s.substr(2);
  try {
    if (s.rfind("2^", 0) == 0) return standard(std::stoi(s.substr(2)));
    const unsigned long q = std::stoul(s);
    for (int k = 1; k <= 16; ++k)
      if ((1ul << k) == q) return standard(k);
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::InvalidArgument, "unsupported field '" + spec + "' (use 2^k, 1 <= k <= 16)");
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
  const std::uint32_t n = order() - 1;
  return tables_->exp[(n - tables_->log[a]) % n];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = order() - 1;
  return tables_->exp[(static_cast<std::uint64_t>(tables_->log[a]) * (e % n)) % n];
}

FiniteField::Element FiniteField::sqrt(Element a) const {
  // Frobenius has order k, so sqrt(a) = a^(2^(k-1)).
  Element r = a;
  for (int i = 1; i < k_; ++i) r = mul(r, r);
  return r;
}

FiniteField::Element FiniteField::trace(Element a) const {
  Element t = 0, x = a;
  for (int i = 0; i < k_; ++i) {
    t ^= x;
    x = mul(x, x);
  }
  return t;
}

std::string FiniteField::name() const { return "F_" + std::to_string(order()); }

}  // namespace pfister
