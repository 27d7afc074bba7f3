#pragma once

// Arithmetic in the imaginary quadratic field K_m = Q(sqrt(-m)), the period
// lattice <1, tau> of a CM elliptic curve C/<1, tau>, and its endomorphism
// ring R = <1, N*tau>.

#include "ellarr/integer.hpp"

#include <ostream>
#include <string>

namespace ellarr {

/// Shape of the integral generator omega of O_m = Z[omega].
enum class OmegaCase {
  pure_imaginary,  // omega = sqrt(-m)
  half_integral,   // omega = (1 + sqrt(-m)) / 2, only for m = 3 mod 4
};

struct FieldParams {
  Integer m;
  OmegaCase omega_case = OmegaCase::pure_imaginary;
  /// (m + 1) / 4 in the half-integral case, 0 otherwise.
  Integer m_prime;

  bool half_integral() const { return omega_case == OmegaCase::half_integral; }
  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

inline bool is_square_free(const Integer& m) {
  if (m < 1) return false;
  for (Integer d = 2; d * d <= m; ++d)
    if (m % (d * d) == 0) return false;
  return true;
}

inline FieldParams make_field(const Integer& m) {
  if (m <= 0) throw input_error("field.m", "m must be a positive integer, got " + to_string(m));
  if (!is_square_free(m)) throw input_error("field.m", to_string(m) + " is not square-free");
  FieldParams f;
  f.m = m;
  if (m % 4 == 3) {
    f.omega_case = OmegaCase::half_integral;
    f.m_prime = (m + 1) / 4;
  }
  return f;
}

/// tau = (a + b*omega) / c together with every integer constant derived from
/// it. With trace_num = c*tr(tau) and det_num = c^2*det(tau):
///   g = gcd(c, det_num),  c = g*c_prime,  det_num = g*delta_prime,
///   N = c^2 / g = g*c_prime^2,  conductor = [O_m : R] = |b|*c_prime,
/// and the primitive minimal polynomial of tau is
///   N X^2 - (trace_num*c_prime) X + delta_prime.
struct CurveParams {
  FieldParams field;
  Integer a, b, c;
  Integer trace_num;
  Integer det_num;
  Integer g;
  Integer c_prime;
  Integer delta_prime;
  Integer N;
  Integer conductor;

  /// trace_num * c_prime: the trace of N*tau, i.e. (N tau) + conj(N tau).
  Integer trace_prime() const { return trace_num * c_prime; }
  /// N * delta_prime: the norm of N*tau.
  Integer norm_prime() const { return N * delta_prime; }
  bool maximal_order() const { return conductor == 1; }

  friend bool operator==(const CurveParams& l, const CurveParams& r) {
    return l.field == r.field && l.a == r.a && l.b == r.b && l.c == r.c;
  }
};

inline CurveParams make_curve(const FieldParams& field, const Integer& a, const Integer& b,
                              const Integer& c) {
  if (c <= 0)
    throw input_error("tau.c", "c must be positive (negate a and b instead), got " + to_string(c));
  if (b == 0) throw input_error("tau.b", "b = 0 gives a real tau");
  if (gcd(a, b, c) != 1)
    throw input_error("tau", "gcd(a, b, c) must be 1, got " + to_string(gcd(a, b, c)));

  CurveParams p;
  p.field = field;
  p.a = a;
  p.b = b;
  p.c = c;
  if (field.half_integral()) {
    p.trace_num = 2 * a + b;
    p.det_num = a * a + a * b + b * b * field.m_prime;
  } else {
    p.trace_num = 2 * a;
    p.det_num = a * a + b * b * field.m;
  }
  p.g = gcd(c, p.det_num);
  p.c_prime = c / p.g;
  p.delta_prime = p.det_num / p.g;
  p.N = p.g * p.c_prime * p.c_prime;
  p.conductor = abs(b) * p.c_prime;

  if (gcd(p.N, p.trace_prime(), p.delta_prime) != 1)
    throw std::logic_error("minimal polynomial of tau is not primitive");
  return p;
}

/// lead X^2 + lin X + constant, primitive with negative discriminant.
struct IntQuadratic {
  Integer lead, lin, constant;

  Integer discriminant() const { return lin * lin - 4 * lead * constant; }
  friend bool operator==(const IntQuadratic&, const IntQuadratic&) = default;
};

inline IntQuadratic min_poly(const CurveParams& curve) {
  return {curve.N, -curve.trace_prime(), curve.delta_prime};
}

inline std::string to_string(const IntQuadratic& q) {
  std::string s = to_string(q.lead) + "*X^2";
  s += q.lin < 0 ? " - " + to_string(-q.lin) : " + " + to_string(q.lin);
  s += "*X";
  s += q.constant < 0 ? " - " + to_string(-q.constant) : " + " + to_string(q.constant);
  return s;
}

/// x + y*(N tau), coordinates in the basis {1, N tau} of R.
struct RingElement {
  Integer x;
  Integer y;

  RingElement() = default;
  RingElement(Integer x_, Integer y_ = 0) : x(std::move(x_)), y(std::move(y_)) {}

  bool is_zero() const { return x == 0 && y == 0; }
  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RingElement& e) {
    return os << '[' << e.x << ", " << e.y << ']';
  }
};

inline RingElement ring_add(const CurveParams&, const RingElement& l, const RingElement& r) {
  return {l.x + r.x, l.y + r.y};
}

inline RingElement ring_neg(const CurveParams&, const RingElement& e) { return {-e.x, -e.y}; }

inline RingElement ring_sub(const CurveParams& curve, const RingElement& l, const RingElement& r) {
  return ring_add(curve, l, ring_neg(curve, r));
}

// (N tau)^2 = trace_prime * (N tau) - norm_prime
inline RingElement ring_mul(const CurveParams& curve, const RingElement& l, const RingElement& r) {
  const Integer yy = l.y * r.y;
  return {l.x * r.x - yy * curve.norm_prime(), l.x * r.y + l.y * r.x + yy * curve.trace_prime()};
}

/// Image under the nontrivial automorphism of K_m; conj(N tau) = trace_prime - N tau.
inline RingElement conj(const CurveParams& curve, const RingElement& e) {
  return {e.x + e.y * curve.trace_prime(), -e.y};
}

/// alpha * conj(alpha), the degree of alpha as an isogeny.
inline Integer norm(const CurveParams& curve, const RingElement& e) {
  return e.x * e.x + e.x * e.y * curve.trace_prime() + e.y * e.y * curve.norm_prime();
}

}  // namespace ellarr
