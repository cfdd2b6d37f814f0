#include "forge/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace forge {

namespace {

Int floor_mod(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

Ring Ring::integers() {
  static const auto desc = std::make_shared<const Desc>();
  return Ring(desc);
}

Ring Ring::modular(const Int& m) {
  if (m < 2) throw std::invalid_argument("modular ring requires modulus >= 2");
  auto d = std::make_shared<Desc>();
  d->kind = RingKind::Modular;
  d->modulus = m;
  return Ring(std::move(d));
}

Ring Ring::polynomial(const Ring& base, int num_vars,
                      std::optional<int> degree_bound) {
  if (base.is_polynomial())
    throw std::invalid_argument("polynomial rings over polynomial rings are not supported");
  if (num_vars < 1 || num_vars > kMaxPolyVars)
    throw std::invalid_argument("polynomial ring supports 1.." +
                                std::to_string(kMaxPolyVars) + " variables");
  if (degree_bound && *degree_bound < 0)
    throw std::invalid_argument("degree bound must be nonnegative");
  auto d = std::make_shared<Desc>();
  d->kind = RingKind::Polynomial;
  d->base = base.d_;
  d->num_vars = num_vars;
  d->degree_bound = degree_bound;
  return Ring(std::move(d));
}

const Int& Ring::modulus() const {
  if (!is_modular()) throw std::logic_error("modulus(): not a modular ring");
  return d_->modulus;
}

Ring Ring::base() const {
  if (!is_polynomial()) throw std::logic_error("base(): not a polynomial ring");
  return Ring(d_->base);
}

int Ring::num_vars() const {
  if (!is_polynomial()) throw std::logic_error("num_vars(): not a polynomial ring");
  return d_->num_vars;
}

bool Ring::enumerable() const {
  if (is_modular()) return true;
  if (is_polynomial())
    return base().is_modular() && d_->degree_bound.has_value();
  return false;
}

namespace {

// Number of monomials of total degree <= d in k variables: C(k + d, d).
Int monomial_count(int k, int d) {
  Int n = 1;
  for (int i = 1; i <= k; i++) {
    n *= d + i;
    n /= i;
  }
  return n;
}

}  // namespace

Int Ring::element_count() const {
  if (is_modular()) return d_->modulus;
  if (is_polynomial() && enumerable()) {
    Int slots = monomial_count(d_->num_vars, *d_->degree_bound);
    Int count = 1;
    const Int& m = base().modulus();
    for (Int i = 0; i < slots; i++) count *= m;
    return count;
  }
  throw std::invalid_argument("element_count(): ring is not enumerable");
}

bool Ring::operator==(const Ring& other) const {
  if (d_ == other.d_) return true;
  if (d_->kind != other.d_->kind) return false;
  switch (d_->kind) {
    case RingKind::Integers:
      return true;
    case RingKind::Modular:
      return d_->modulus == other.d_->modulus;
    case RingKind::Polynomial:
      return d_->num_vars == other.d_->num_vars &&
             d_->degree_bound == other.d_->degree_bound &&
             Ring(d_->base) == Ring(other.d_->base);
  }
  return false;
}

std::string Ring::to_string() const {
  switch (d_->kind) {
    case RingKind::Integers:
      return "int";
    case RingKind::Modular:
      return "zmod:" + d_->modulus.str();
    case RingKind::Polynomial:
      return "poly:" + Ring(d_->base).to_string() + ":" +
             std::to_string(d_->num_vars);
  }
  return "?";
}

Ring Ring::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);

  if (parts.size() == 1 && parts[0] == "int") return integers();
  if (parts.size() == 2 && parts[0] == "zmod") return modular(Int(parts[1]));
  if (parts[0] == "poly" && parts.size() >= 3) {
    int k = std::stoi(parts.back());
    std::string base_text;
    for (size_t i = 1; i + 1 < parts.size(); i++) {
      if (i > 1) base_text += ":";
      base_text += parts[i];
    }
    return polynomial(parse(base_text), k);
  }
  throw std::invalid_argument("unrecognized ring descriptor: " + text);
}

std::uint64_t mono_pack(const std::vector<std::uint32_t>& exps) {
  if (exps.size() > kMaxPolyVars)
    throw std::invalid_argument("too many variables in monomial");
  std::uint64_t deg = 0;
  std::uint64_t packed = 0;
  for (size_t i = 0; i < exps.size(); i++) {
    if (exps[i] > kMaxExponent)
      throw std::overflow_error("monomial exponent exceeds 12-bit field");
    deg += exps[i];
    packed |= std::uint64_t(exps[i]) << (36 - 12 * i);
  }
  if (deg > 0xFFFF) throw std::overflow_error("monomial degree exceeds 16-bit field");
  return (deg << 48) | packed;
}

std::vector<std::uint32_t> mono_unpack(std::uint64_t mono, int num_vars) {
  std::vector<std::uint32_t> exps(num_vars);
  for (int i = 0; i < num_vars; i++)
    exps[i] = static_cast<std::uint32_t>((mono >> (36 - 12 * i)) & kMaxExponent);
  return exps;
}

std::uint64_t mono_mul(std::uint64_t a, std::uint64_t b) {
  for (int shift = 0; shift < 48; shift += 12) {
    std::uint64_t ea = (a >> shift) & kMaxExponent;
    std::uint64_t eb = (b >> shift) & kMaxExponent;
    if (ea + eb > kMaxExponent)
      throw std::overflow_error("monomial exponent overflow in product");
  }
  if (mono_degree(a) + mono_degree(b) > 0xFFFF)
    throw std::overflow_error("monomial degree overflow in product");
  return a + b;  // independent fields, no carries after the checks above
}

namespace {

// Coefficient normalization for a polynomial ring's base.
Int normalize_coeff(const Ring& poly_ring, const Int& c) {
  Ring base = poly_ring.base();
  if (base.is_modular()) return floor_mod(c, base.modulus());
  return c;
}

Poly normalize_poly(const Ring& r, Poly p) {
  std::sort(p.terms.begin(), p.terms.end(),
            [](const PolyTerm& a, const PolyTerm& b) { return a.mono > b.mono; });
  std::vector<PolyTerm> merged;
  merged.reserve(p.terms.size());
  for (auto& t : p.terms) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  p.terms.clear();
  for (auto& t : merged) {
    t.coeff = normalize_coeff(r, t.coeff);
    if (t.coeff != 0) p.terms.push_back(std::move(t));
  }
  return p;
}

}  // namespace

RingElem RingElem::from_int(const Ring& r, const Int& value) {
  switch (r.kind()) {
    case RingKind::Integers:
      return RingElem(r, value);
    case RingKind::Modular:
      return RingElem(r, floor_mod(value, r.modulus()));
    case RingKind::Polynomial: {
      Poly p;
      Int c = normalize_coeff(r, value);
      if (c != 0) p.terms.push_back({0, std::move(c)});
      return RingElem(r, std::move(p));
    }
  }
  throw std::logic_error("from_int: bad ring kind");
}

RingElem RingElem::variable(const Ring& r, int index) {
  if (!r.is_polynomial())
    throw std::invalid_argument("variable(): not a polynomial ring");
  if (index < 1 || index > r.num_vars())
    throw std::invalid_argument("variable index out of range");
  std::vector<std::uint32_t> exps(r.num_vars(), 0);
  exps[index - 1] = 1;
  Poly p;
  p.terms.push_back({mono_pack(exps), Int(1)});
  return RingElem(r, std::move(p));
}

RingElem RingElem::from_poly(const Ring& r, Poly p) {
  if (!r.is_polynomial())
    throw std::invalid_argument("from_poly(): not a polynomial ring");
  return RingElem(r, normalize_poly(r, std::move(p)));
}

bool RingElem::is_zero() const {
  if (ring_.is_polynomial()) return poly().terms.empty();
  return scalar() == 0;
}

bool RingElem::is_one() const {
  if (ring_.is_polynomial()) {
    const auto& t = poly().terms;
    return t.size() == 1 && t[0].mono == 0 && t[0].coeff == 1;
  }
  return scalar() == 1;
}

const Int& RingElem::scalar() const { return std::get<Int>(payload_); }
const Poly& RingElem::poly() const { return std::get<Poly>(payload_); }

void throw_ring_mismatch(const char* where) {
  throw std::invalid_argument(std::string(where) +
                              ": operands belong to different rings");
}

void require_same_ring(const RingElem& a, const RingElem& b, const char* where) {
  if (a.ring() != b.ring()) throw_ring_mismatch(where);
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b, "add");
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::Integers:
      return RingElem(r, a.scalar() + b.scalar());
    case RingKind::Modular: {
      Int s = a.scalar() + b.scalar();
      if (s >= r.modulus()) s -= r.modulus();
      return RingElem(r, std::move(s));
    }
    case RingKind::Polynomial: {
      // Merge of two sorted term lists.
      const auto& ta = a.poly().terms;
      const auto& tb = b.poly().terms;
      Poly out;
      out.terms.reserve(ta.size() + tb.size());
      size_t i = 0, j = 0;
      while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && ta[i].mono > tb[j].mono)) {
          out.terms.push_back(ta[i++]);
        } else if (i == ta.size() || tb[j].mono > ta[i].mono) {
          out.terms.push_back(tb[j++]);
        } else {
          Int c = normalize_coeff(r, ta[i].coeff + tb[j].coeff);
          if (c != 0) out.terms.push_back({ta[i].mono, std::move(c)});
          i++;
          j++;
        }
      }
      return RingElem(r, std::move(out));
    }
  }
  throw std::logic_error("add: bad ring kind");
}

RingElem RingElem::operator-() const {
  const Ring& r = ring_;
  switch (r.kind()) {
    case RingKind::Integers:
      return RingElem(r, -scalar());
    case RingKind::Modular: {
      Int s = scalar() == 0 ? Int(0) : r.modulus() - scalar();
      return RingElem(r, std::move(s));
    }
    case RingKind::Polynomial: {
      Poly out = poly();
      for (auto& t : out.terms) t.coeff = normalize_coeff(r, -t.coeff);
      return RingElem(r, std::move(out));
    }
  }
  throw std::logic_error("neg: bad ring kind");
}

RingElem operator-(const RingElem& a, const RingElem& b) { return a + (-b); }

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b, "mul");
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::Integers:
      return RingElem(r, a.scalar() * b.scalar());
    case RingKind::Modular:
      return RingElem::from_int(r, a.scalar() * b.scalar());
    case RingKind::Polynomial: {
      const auto& ta = a.poly().terms;
      const auto& tb = b.poly().terms;
      Poly acc;
      acc.terms.reserve(ta.size() * tb.size());
      for (const auto& x : ta)
        for (const auto& y : tb)
          acc.terms.push_back({mono_mul(x.mono, y.mono), x.coeff * y.coeff});
      return RingElem::from_poly(r, std::move(acc));
    }
  }
  throw std::logic_error("mul: bad ring kind");
}

bool RingElem::operator==(const RingElem& o) const {
  return ring_ == o.ring_ && payload_ == o.payload_;
}

namespace {

void append_int_bytes(const Int& v, std::string& out) {
  // Sign byte, byte length, magnitude little-endian.
  out.push_back(v < 0 ? '-' : (v == 0 ? '0' : '+'));
  Int mag = abs(v);
  std::string bytes;
  while (mag != 0) {
    bytes.push_back(static_cast<char>(static_cast<unsigned char>(mag & 0xFF)));
    mag >>= 8;
  }
  std::uint32_t len = static_cast<std::uint32_t>(bytes.size());
  for (int i = 0; i < 4; i++)
    out.push_back(static_cast<char>((len >> (8 * i)) & 0xFF));
  out += bytes;
}

}  // namespace

void RingElem::canonical_bytes(std::string& out) const {
  switch (ring_.kind()) {
    case RingKind::Integers:
      out.push_back('I');
      append_int_bytes(scalar(), out);
      return;
    case RingKind::Modular:
      out.push_back('M');
      append_int_bytes(scalar(), out);
      return;
    case RingKind::Polynomial: {
      out.push_back('P');
      const auto& ts = poly().terms;
      std::uint32_t n = static_cast<std::uint32_t>(ts.size());
      for (int i = 0; i < 4; i++)
        out.push_back(static_cast<char>((n >> (8 * i)) & 0xFF));
      for (const auto& t : ts) {
        for (int i = 0; i < 8; i++)
          out.push_back(static_cast<char>((t.mono >> (8 * i)) & 0xFF));
        append_int_bytes(t.coeff, out);
      }
      return;
    }
  }
}

std::string RingElem::to_string() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
    case RingKind::Modular:
      return scalar().str();
    case RingKind::Polynomial: {
      const auto& ts = poly().terms;
      if (ts.empty()) return "0";
      std::ostringstream os;
      bool first = true;
      for (const auto& t : ts) {
        if (!first) os << " + ";
        first = false;
        auto exps = mono_unpack(t.mono, ring_.num_vars());
        bool has_var = false;
        for (auto e : exps) has_var |= e > 0;
        if (!has_var || t.coeff != 1) os << t.coeff.str();
        for (size_t i = 0; i < exps.size(); i++) {
          if (exps[i] == 0) continue;
          os << "x" << (i + 1);
          if (exps[i] > 1) os << "^" << exps[i];
        }
      }
      return os.str();
    }
  }
  return "?";
}

std::vector<RingElem> enumerate_ring(const Ring& r) {
  if (!r.enumerable())
    throw std::invalid_argument("enumerate_ring: ring is not enumerable");
  std::vector<RingElem> out;
  if (r.is_modular()) {
    for (Int i = 0; i < r.modulus(); i++) out.push_back(RingElem::from_int(r, i));
    return out;
  }
  // Polynomial over Z/m within the declared degree window: iterate all
  // coefficient assignments over the monomials of total degree <= bound.
  const int k = r.num_vars();
  const int bound = *r.degree_bound();
  const Int m = r.base().modulus();

  std::vector<std::uint64_t> monos;
  std::vector<std::uint32_t> exps(k, 0);
  // Odometer over exponent tuples with total degree <= bound.
  while (true) {
    std::uint32_t deg = 0;
    for (auto e : exps) deg += e;
    if (deg <= static_cast<std::uint32_t>(bound)) monos.push_back(mono_pack(exps));
    int pos = k - 1;
    while (pos >= 0) {
      exps[pos]++;
      std::uint32_t total = 0;
      for (auto e : exps) total += e;
      if (total <= static_cast<std::uint32_t>(bound)) break;
      exps[pos] = 0;
      pos--;
    }
    if (pos < 0) break;
  }
  std::sort(monos.begin(), monos.end(), std::greater<>());

  std::vector<Int> coeffs(monos.size(), Int(0));
  while (true) {
    Poly p;
    for (size_t i = 0; i < monos.size(); i++)
      if (coeffs[i] != 0) p.terms.push_back({monos[i], coeffs[i]});
    out.push_back(RingElem::from_poly(r, std::move(p)));
    size_t pos = 0;
    while (pos < coeffs.size()) {
      coeffs[pos] += 1;
      if (coeffs[pos] < m) break;
      coeffs[pos] = 0;
      pos++;
    }
    if (pos == coeffs.size()) break;
  }
  return out;
}

RingElem dot_product(const std::vector<RingElem>& a,
                     const std::vector<RingElem>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot_product: length mismatch");
  if (a.empty()) throw std::invalid_argument("dot_product: empty vectors");
  RingElem acc = RingElem::zero(a[0].ring());
  for (size_t i = 0; i < a.size(); i++) acc = acc + a[i] * b[i];
  return acc;
}

}  // namespace forge
