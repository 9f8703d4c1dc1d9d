#include "preab/seqspace.hpp"

#include <stdexcept>

namespace preab {

void FiniteSeq::append(long index, const Rational& value) {
    if (index < 1) throw std::invalid_argument("FiniteSeq: indices start at 1");
    if (!entries_.empty() && entries_.back().first >= index)
        throw std::invalid_argument("FiniteSeq: indices must be strictly increasing");
    if (value == 0) return;
    entries_.emplace_back(index, value);
}

FiniteSeq make_xn(long n) {
    if (n < 1) throw std::invalid_argument("make_xn: n must be positive");
    FiniteSeq x;
    x.reserve(static_cast<std::size_t>(n));
    const Rational value = rat(-1, n);
    for (long j = 1; j <= n; ++j) x.append(j, value);
    return x;
}

Rational sup_norm(const FiniteSeq& x) {
    Rational best = 0;
    for (const auto& [j, v] : x.entries()) {
        Rational mag = rat_abs(v);
        if (mag > best) best = mag;
    }
    return best;
}

Rational one_norm(const FiniteSeq& x) {
    Rational total = 0;
    for (const auto& [j, v] : x.entries()) total += rat_abs(v);
    return total;
}

Rational sum_functional(const FiniteSeq& x) {
    Rational total = 0;
    for (const auto& [j, v] : x.entries()) total += v;
    return total;
}

Rational s_seminorm(const FiniteSeq& x, long m) {
    if (m < 1) throw std::invalid_argument("s_seminorm: m must be positive");
    Rational total = 0;
    Integer power;
    for (const auto& [j, v] : x.entries()) {
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j),
                      static_cast<unsigned long>(m));
        total += rat(power) * rat_abs(v);
    }
    return total;
}

Rational product_seminorm(const FiniteSeq& x, long m) {
    if (m < 1) throw std::invalid_argument("product_seminorm: m must be positive");
    Rational best = 0;
    for (const auto& [j, v] : x.entries()) {
        if (j > m) break;
        Rational mag = rat_abs(v);
        if (mag > best) best = mag;
    }
    return best;
}

namespace {

// All witnesses target (0, 1); the scalar coordinate of (i, -Sigma)(x^n) is
// -Sigma(x^n) = 1 exactly, so only the sequence coordinate carries distance.
Rational scalar_gap(const FiniteSeq& xn) {
    return rat_abs(rat(1) - (-sum_functional(xn)));
}

long minimal_index(const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("closure witness: eps must be positive");
    const Integer n = rat_ceil(rat(1) / eps);
    long out = n.fits_slong_p() ? n.get_si() : 0;
    if (out < 1) out = 1;
    return out;
}

}  // namespace

ClosureCertificate banach_closure_witness(const Rational& eps) {
    ClosureCertificate cert;
    cert.family = "banach";
    cert.epsilon = eps;
    cert.witness_index = minimal_index(eps);
    const FiniteSeq xn = make_xn(cert.witness_index);
    cert.seq_distance = sup_norm(xn);
    cert.scalar_distance = scalar_gap(xn);
    cert.distance = cert.seq_distance > cert.scalar_distance ? cert.seq_distance
                                                             : cert.scalar_distance;
    cert.sum_value = sum_functional(xn);
    return cert;
}

ClosureCertificate nuclear_closure_witness(const Rational& eps, long m_max) {
    if (m_max < 1) throw std::invalid_argument("nuclear_closure_witness: m_max must be positive");
    ClosureCertificate cert;
    cert.family = "nuclear";
    cert.epsilon = eps;
    cert.m_max = m_max;
    cert.witness_index = minimal_index(eps);
    const FiniteSeq xn = make_xn(cert.witness_index);

    Rational worst = 0;
    for (long m = 1; m <= m_max; ++m) {
        const Rational value = product_seminorm(xn, m);
        cert.seminorms.push_back({m, value});
        if (value > worst) worst = value;
        // Continuity witnesses: |Sigma'(x)| <= ||x||_m on the probe.
        cert.domination.push_back({m, s_seminorm(xn, m)});
    }
    cert.seq_distance = worst;
    cert.scalar_distance = scalar_gap(xn);
    cert.distance = cert.seq_distance > cert.scalar_distance ? cert.seq_distance
                                                             : cert.scalar_distance;
    cert.sum_value = sum_functional(xn);
    return cert;
}

bool reverify(const ClosureCertificate& cert) {
    if (cert.witness_index < 1 || cert.epsilon <= 0) return false;
    const ClosureCertificate fresh =
        cert.family == "banach" ? banach_closure_witness(cert.epsilon)
        : cert.family == "nuclear"
            ? nuclear_closure_witness(cert.epsilon, cert.m_max)
            : ClosureCertificate{};
    if (fresh.family != cert.family) return false;
    if (fresh.witness_index != cert.witness_index) return false;
    if (fresh.seq_distance != cert.seq_distance) return false;
    if (fresh.scalar_distance != cert.scalar_distance) return false;
    if (fresh.distance != cert.distance || !(cert.distance <= cert.epsilon)) return false;
    if (fresh.sum_value != cert.sum_value) return false;
    if (fresh.seminorms.size() != cert.seminorms.size()) return false;
    for (std::size_t i = 0; i < fresh.seminorms.size(); ++i)
        if (fresh.seminorms[i].m != cert.seminorms[i].m ||
            fresh.seminorms[i].value != cert.seminorms[i].value)
            return false;
    if (fresh.domination.size() != cert.domination.size()) return false;
    for (std::size_t i = 0; i < fresh.domination.size(); ++i) {
        if (fresh.domination[i].m != cert.domination[i].m ||
            fresh.domination[i].value != cert.domination[i].value)
            return false;
        // The recorded bound must actually dominate the summation value.
        if (!(rat_abs(cert.sum_value) <= cert.domination[i].value)) return false;
    }
    return true;
}

}  // namespace preab
