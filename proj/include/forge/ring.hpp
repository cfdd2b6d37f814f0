#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace forge {

using Int = boost::multiprecision::cpp_int;

enum class RingKind { Integers, Modular, Polynomial };

/// Descriptor of a commutative coefficient ring: the integers, Z/m, or a
/// sparse multivariate polynomial ring over one of the former. Polynomial
/// towers deeper than one level are rejected up front so that every element
/// has a flat canonical form.
class Ring {
 public:
  static Ring integers();
  static Ring modular(const Int& m);
  static Ring polynomial(const Ring& base, int num_vars,
                         std::optional<int> degree_bound = std::nullopt);

  RingKind kind() const { return d_->kind; }
  bool is_integers() const { return d_->kind == RingKind::Integers; }
  bool is_modular() const { return d_->kind == RingKind::Modular; }
  bool is_polynomial() const { return d_->kind == RingKind::Polynomial; }

  const Int& modulus() const;
  Ring base() const;
  int num_vars() const;
  std::optional<int> degree_bound() const { return d_->degree_bound; }

  /// A ring is enumerable when it has finitely many elements we can list:
  /// Z/m, or a polynomial ring over Z/m with a declared degree bound (the
  /// bound only windows the enumeration; arithmetic is unrestricted).
  bool enumerable() const;
  Int element_count() const;

  bool operator==(const Ring& other) const;
  bool operator!=(const Ring& other) const { return !(*this == other); }

  /// Mini-grammar: `int`, `zmod:<m>`, `poly:<base>:<k>`.
  std::string to_string() const;
  static Ring parse(const std::string& text);

 private:
  struct Desc {
    RingKind kind = RingKind::Integers;
    Int modulus;                       // Modular only
    std::shared_ptr<const Desc> base;  // Polynomial only
    int num_vars = 0;
    std::optional<int> degree_bound;
  };
  explicit Ring(std::shared_ptr<const Desc> d) : d_(std::move(d)) {}
  std::shared_ptr<const Desc> d_;
};

// Monomials are packed into one word: the top 16 bits hold the total degree
// and each variable gets a 12-bit exponent field, most significant first.
// Unsigned comparison of packed words is then exactly graded-lex order.
constexpr int kMaxPolyVars = 4;
constexpr std::uint32_t kMaxExponent = 0xFFF;

std::uint64_t mono_pack(const std::vector<std::uint32_t>& exps);
std::vector<std::uint32_t> mono_unpack(std::uint64_t mono, int num_vars);
std::uint64_t mono_mul(std::uint64_t a, std::uint64_t b);
inline std::uint32_t mono_degree(std::uint64_t mono) {
  return static_cast<std::uint32_t>(mono >> 48);
}

struct PolyTerm {
  std::uint64_t mono = 0;
  Int coeff;
  bool operator==(const PolyTerm& o) const {
    return mono == o.mono && coeff == o.coeff;
  }
};

/// Sparse polynomial: terms sorted by packed monomial, descending, with no
/// zero coefficients. Coefficients are kept reduced modulo the base modulus
/// when the base ring is Z/m, so equality is plain structural equality.
struct Poly {
  std::vector<PolyTerm> terms;
  bool operator==(const Poly& o) const { return terms == o.terms; }
};

/// An element of a chosen ring, always in canonical form: integers as-is,
/// residues reduced into [0, m), polynomials as described above. Values are
/// immutable after construction and safe to share across threads.
class RingElem {
 public:
  RingElem() : ring_(Ring::integers()), payload_(Int(0)) {}

  static RingElem from_int(const Ring& r, const Int& value);
  static RingElem from_int(const Ring& r, long value) {
    return from_int(r, Int(value));
  }
  static RingElem zero(const Ring& r) { return from_int(r, 0); }
  static RingElem one(const Ring& r) { return from_int(r, 1); }
  /// x_i as an element of a polynomial ring (index is 1-based).
  static RingElem variable(const Ring& r, int index);
  /// Constant polynomial with the given base-ring scalar.
  static RingElem constant(const Ring& r, const Int& value) {
    return from_int(r, value);
  }
  static RingElem from_poly(const Ring& r, Poly p);

  const Ring& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  /// Scalar payload of an Integers/Modular element.
  const Int& scalar() const;
  /// Term list of a Polynomial element.
  const Poly& poly() const;

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem operator-() const;

  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  /// Appends a canonical byte serialization; two elements of the same ring
  /// are equal iff their serializations are byte-equal.
  void canonical_bytes(std::string& out) const;
  std::string canonical_bytes() const {
    std::string s;
    canonical_bytes(s);
    return s;
  }

  std::string to_string() const;

 private:
  RingElem(Ring r, std::variant<Int, Poly> payload)
      : ring_(std::move(r)), payload_(std::move(payload)) {}

  Ring ring_;
  std::variant<Int, Poly> payload_;
};

/// All elements of an enumerable ring, each exactly once, in a fixed order.
std::vector<RingElem> enumerate_ring(const Ring& r);

[[noreturn]] void throw_ring_mismatch(const char* where);
void require_same_ring(const RingElem& a, const RingElem& b, const char* where);

RingElem dot_product(const std::vector<RingElem>& a,
                     const std::vector<RingElem>& b);

}  // namespace forge
