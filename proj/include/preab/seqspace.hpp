#pragma once

#include <string>
#include <utility>
#include <vector>

#include "preab/rational.hpp"

namespace preab {

// Finite-support sequences of exact rationals (indices start at 1). Every
// witness needed here is finitely supported, so nothing else is represented.
class FiniteSeq {
  public:
    FiniteSeq() = default;

    void reserve(std::size_t n) { entries_.reserve(n); }
    // Entries must arrive with strictly increasing indices >= 1.
    void append(long index, const Rational& value);
    const std::vector<std::pair<long, Rational>>& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }

  private:
    std::vector<std::pair<long, Rational>> entries_;
};

// The witness sequence: -1/n at positions 1..n, zero elsewhere.
FiniteSeq make_xn(long n);  // throws std::invalid_argument when n < 1

Rational sup_norm(const FiniteSeq& x);
Rational one_norm(const FiniteSeq& x);
Rational sum_functional(const FiniteSeq& x);

// sum_j j^m |x_j| and sup_{1<=j<=m} |x_j|.
Rational s_seminorm(const FiniteSeq& x, long m);
Rational product_seminorm(const FiniteSeq& x, long m);

struct SeminormRecord {
    long m = 0;
    Rational value;
};

// epsilon-N certificate that (0, 1) lies in the closure of the range of
// (inclusion, -summation): at index n the distance from (x^n, 1) to (0, 1)
// is at most epsilon, with the scalar component exactly zero.
struct ClosureCertificate {
    std::string family;  // "banach" | "nuclear"
    Rational epsilon;
    long witness_index = 0;  // the n achieving the bound (minimal)
    Rational seq_distance;   // sup norm / max product seminorm of x^n
    Rational scalar_distance;
    Rational distance;  // max of the two components
    Rational sum_value;
    long m_max = 0;                        // nuclear only
    std::vector<SeminormRecord> seminorms;  // nuclear: product seminorms m = 1..m_max
    std::vector<SeminormRecord> domination;  // nuclear: ||x^n||_m bounds for |sum|
};

ClosureCertificate banach_closure_witness(const Rational& eps);
ClosureCertificate nuclear_closure_witness(const Rational& eps, long m_max);

// Recomputes every stored value from the witness index; exact comparison.
bool reverify(const ClosureCertificate& cert);

}  // namespace preab
