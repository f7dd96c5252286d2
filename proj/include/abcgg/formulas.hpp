#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "abcgg/error.hpp"
#include "abcgg/families.hpp"
#include "abcgg/indices.hpp"

// Closed-form values of ABC and ABC_GG on the generated families. Each
// expression is transcribed as published, including the ones that disagree
// with direct computation; comparing the two is verification.hpp's job.

namespace abcgg {

enum class Parity { Even, Odd };

constexpr std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// n = 2k (Even) or n = 2k + 1 (Odd).
struct Branch {
  Parity parity = Parity::Even;
  int k = 0;

  friend bool operator==(const Branch&, const Branch&) = default;
};

struct ClosedForm {
  FamilySpec spec;
  IndexKind index = IndexKind::Abc;
  double value = 0.0;
  std::optional<Branch> branch;  // set only for the parity-split GG formulas
  std::string formula;           // which expression was evaluated
};

constexpr bool has_theorem(Family f, IndexKind index) {
  switch (index) {
    case IndexKind::Wiener: return false;
    case IndexKind::Abc: return true;
    case IndexKind::AbcGG:
      return f != Family::Spiro && f != Family::Polyphenylene && f != Family::DendrimerD3;
  }
  return false;
}

namespace detail::cf {

inline const double kSqrt2 = std::sqrt(2.0);
inline const double kSqrt6 = std::sqrt(6.0);

// sum_{i=lo}^{hi} f(i), ascending; empty when hi < lo.
template <class F>
double sum(int lo, int hi, F f) {
  double s = 0.0;
  for (int i = lo; i <= hi; ++i) s += f(static_cast<double>(i));
  return s;
}

inline double pow2(int e) { return std::ldexp(1.0, e); }

inline Branch branch_of(int n) { return {n % 2 == 0 ? Parity::Even : Parity::Odd, n / 2}; }

inline double q_mn_abc(double m, double n) {
  return m * (m - 1) / (2 * (m + n - 2)) * std::sqrt(2 * (m + n - 3)) +
         m * (n / 2 - 1) * std::sqrt(2 * (n - 2)) +
         m * (n - 1) * std::sqrt((m + 2 * n - 5) / (n * n + m * n - m - 3 * n + 2));
}

inline double q_mn_gg(double m, double n) {
  return m * (m - 1) / (2 * n) * std::sqrt(2 * n - 2) +
         m * (n - 1) * std::sqrt(n * (m - 1) / (n * (m - 1) + 1));
}

// ABC of a chain of k cycles C_q whose cut vertices are adjacent (h = 1).
inline double spiro_adjacent_abc(double q, double k) {
  return (q * k - k + 2) / kSqrt2 + (k - 2) * kSqrt6 / 4;
}

inline double triangular_gg(Branch b) {
  const double k = b.k;
  if (b.parity == Parity::Even) {
    return 2 * sum(1, b.k, [k](double i) {
             return std::sqrt((2 * i - 2) / (2 * i - 1)) +
                    std::sqrt((4 * k - 2 * i) / (4 * k - 2 * i + 1)) +
                    std::sqrt((4 * k - 2) / ((4 * k - 2 * i + 1) * (2 * i - 1)));
           });
  }
  return 2 * sum(1, b.k, [k](double i) {
           return std::sqrt((2 * i - 2) / (2 * i - 1)) +
                  std::sqrt((4 * k - 2 * i + 2) / (4 * k - 2 * i + 3)) +
                  std::sqrt(4 * k / ((4 * k - 2 * i + 3) * (2 * i - 1)));
         }) +
         2 * std::sqrt(2 * k / (2 * k + 1)) + 2 * std::sqrt(k) / (2 * k + 1);
}

// The square-chain sums share one summand; only the coefficient differs.
inline double square_sum(Branch b) {
  const double k = b.k;
  if (b.parity == Parity::Even) {
    return sum(1, b.k, [k](double i) {
      return std::sqrt((6 * k - 1) / ((6 * k - 3 * i + 2) * (3 * i - 1)));
    });
  }
  return sum(1, b.k, [k](double i) {
    return std::sqrt((6 * k + 2) / ((6 * k - 3 * i + 5) * (3 * i - 1)));
  });
}

inline double para_square_gg(Branch b) {
  const double k = b.k;
  if (b.parity == Parity::Even) return 8 * square_sum(b);
  return 8 * square_sum(b) + 4 * std::sqrt(6 * k + 2) / (3 * k + 2);
}

inline double ortho_square_gg(Branch b) {
  const double k = b.k;
  if (b.parity == Parity::Even) return 2 * k * kSqrt2 + 4 * square_sum(b);
  return (2 * k + 1) * kSqrt2 + 2 * std::sqrt(6 * k + 2) / (3 * k + 2) + 4 * square_sum(b);
}

inline double hex_sum(Branch b) {
  const double k = b.k;
  if (b.parity == Parity::Even) {
    return sum(1, b.k, [k](double i) {
      return std::sqrt((10 * k - 1) / ((10 * k - 5 * i + 3) * (5 * i - 2)));
    });
  }
  return sum(1, b.k, [k](double i) {
    return std::sqrt((10 * k + 4) / ((10 * k - 5 * i + 8) * (5 * i - 2)));
  });
}

inline double ortho_hex_gg(Branch b) {
  const double k = b.k;
  if (b.parity == Parity::Even) {
    return 4 * hex_sum(b) + 8 * k * std::sqrt((10 * k - 1) / (30 * k - 6));
  }
  return 4 * hex_sum(b) + (8 * k + 4) * std::sqrt((10 * k + 4) / (30 * k + 9)) +
         2 * std::sqrt(10 * k + 4) / (5 * k + 3);
}

inline double para_hex_gg(Branch b) {
  const double k = b.k;
  if (b.parity == Parity::Even) return 12 * hex_sum(b);
  return 12 * hex_sum(b) + 6 * std::sqrt(10 * k + 4) / (5 * k + 3);
}

inline double meta_hex_gg(Branch b) {
  const double k = b.k;
  if (b.parity == Parity::Even) {
    return 8 * hex_sum(b) + 4 * k * std::sqrt((10 * k - 1) / (30 * k - 6));
  }
  return 8 * hex_sum(b) + (2 * k + 2) * std::sqrt((10 * k + 4) / (30 * k + 9)) +
         4 * std::sqrt(10 * k + 4) / (5 * k + 3);
}

inline double triangulane_abc(int k) {
  return 9 * pow2(k - 1) * kSqrt2 / 2 + (9 * pow2(k) - 6) * kSqrt6 / 4;
}

inline double triangulane_gg(int n) {
  const double top = pow2(n + 2);
  double s = 6 * std::sqrt((top + pow2(n) - 4) / ((top - 1) * (pow2(n) - 1))) +
             3 * std::sqrt(top - 4) / (pow2(n + 1) - 1);
  s += sum(2, n, [&](double di) {
    const int i = static_cast<int>(di);
    const double t = sum(0, i - 2, [n](double tt) { return pow2(n - static_cast<int>(tt)); });
    const double tail = pow2(n - i + 1);
    return 3 * pow2(i) * std::sqrt((top + t + tail - 4) / ((top - 1 + t) * (tail - 1)));
  });
  s += sum(1, n, [n](double di) {
    const int i = static_cast<int>(di);
    return 3 * pow2(i - 1) * std::sqrt(pow2(n - i + 2) - 4) / (pow2(n - i + 1) - 1);
  });
  return s;
}

inline double dendrimer_abc(int n) { return 6 * pow2(n) - 4 + (18 * pow2(n) - 9) * kSqrt2; }

}  // namespace detail::cf

// Throws NoTheorem when no closed form exists for the pair, and
// OutsideTheoremDomain for the chain ABC expressions at n = 1, which are
// stated for n >= 2 and go wrong there.
inline ClosedForm closed_form(const FamilySpec& spec, IndexKind index) {
  using namespace detail::cf;
  validate(spec);
  if (!has_theorem(spec.family, index)) {
    throw Error(ErrorKind::NoTheorem,
                std::string(to_string(spec.family)) + " has no closed form for " +
                    std::string(to_string(index)));
  }
  ClosedForm out{.spec = spec, .index = index};
  const bool abc_index = index == IndexKind::Abc;
  const double n = spec.n;

  switch (spec.family) {
    case Family::QMn:
      out.value = abc_index ? q_mn_abc(spec.m, spec.n) : q_mn_gg(spec.m, spec.n);
      out.formula = abc_index ? "Q(m,n) abc" : "Q(m,n) abc_gg";
      return out;

    // k = 1 is the bare cycle for every h, so it takes the h >= 2 expression;
    // the h = 1 expressions count k - 2 (resp. 2k - 3) cut edges.
    case Family::Spiro: {
      const double q = spec.q, k = spec.k;
      if (spec.h >= 2 || spec.k == 1) {
        out.value = q * k / kSqrt2;
        out.formula = "S(q,h,k) abc, h >= 2";
      } else {
        out.value = spiro_adjacent_abc(q, k);
        out.formula = "S(q,1,k) abc";
      }
      return out;
    }
    case Family::Polyphenylene: {
      const double q = spec.q, k = spec.k;
      if (spec.h >= 2 || spec.k == 1) {
        out.value = 2 * (k - 1) / 3 + q * k / kSqrt2;
        out.formula = "L(q,h,k) abc, h >= 2";
      } else {
        out.value = (4 * k - 6) / 3 + (q * k - k + 2) / kSqrt2;
        out.formula = "L(q,1,k) abc";
      }
      return out;
    }
    case Family::Triangulane:
      out.value = abc_index ? triangulane_abc(spec.k) : triangulane_gg(spec.k);
      out.formula = abc_index ? "T_k abc" : "T_k abc_gg";
      return out;
    case Family::DendrimerD3:
      out.value = dendrimer_abc(spec.n);
      out.formula = "D3[n] abc";
      return out;
    default: break;
  }

  const std::string name(to_string(spec.family));
  if (abc_index) {
    if (spec.n < 2) {
      throw Error(ErrorKind::OutsideTheoremDomain, name + " abc is stated for n >= 2");
    }
    switch (spec.family) {
      case Family::ChainTriangular: out.value = (2 * n + 2) / kSqrt2 + (n - 2) * kSqrt6 / 4; break;
      case Family::ParaSquare: out.value = 2 * n * kSqrt2; break;
      case Family::OrthoSquare: out.value = (3 * n + 2) / kSqrt2 + (n - 2) * kSqrt6 / 4; break;
      case Family::OrthoHex: out.value = (5 * n + 2) / kSqrt2 + (n - 2) * kSqrt6 / 4; break;
      default: out.value = 3 * n * kSqrt2; break;  // para and meta hexagonal
    }
    out.formula = name + " abc";
    return out;
  }

  const Branch b = branch_of(spec.n);
  out.branch = b;
  switch (spec.family) {
    case Family::ChainTriangular: out.value = triangular_gg(b); break;
    case Family::ParaSquare: out.value = para_square_gg(b); break;
    case Family::OrthoSquare: out.value = ortho_square_gg(b); break;
    case Family::OrthoHex: out.value = ortho_hex_gg(b); break;
    case Family::ParaHex: out.value = para_hex_gg(b); break;
    default: out.value = meta_hex_gg(b); break;
  }
  out.formula = name + " abc_gg, " + std::string(to_string(b.parity)) + " n";
  return out;
}

}  // namespace abcgg
