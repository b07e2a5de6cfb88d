#pragma once

// Airy function Ai, its derivative, and the negative real zeros of Ai.
// Self-contained: no external special-function library.

namespace cornell::airy {

/// 1-based index of a negative zero of Ai. Construction rejects k < 1.
class ZeroIndex {
public:
    explicit ZeroIndex(int k);
    int value() const noexcept { return k_; }

private:
    int k_;
};

struct AiryPair {
    double ai;
    double ai_prime;
};

/// Ai(x). Absolute error below 1e-12 on |x| <= 20.
double ai(double x);

/// Ai'(x). Absolute error below 1e-11 on |x| <= 20.
double ai_prime(double x);

/// Ai and Ai' evaluated together (shares the expensive part).
AiryPair ai_pair(double x);

/// Leading asymptotic estimate -[3 pi (4k - 1) / 8]^{2/3} of the k-th zero.
double zero_estimate(ZeroIndex k);

/// The k-th negative zero a_k of Ai, relative error below 1e-10.
double zero(ZeroIndex k);

/// Convenience overload; throws DomainError for k < 1.
double zero(int k);

}  // namespace cornell::airy
