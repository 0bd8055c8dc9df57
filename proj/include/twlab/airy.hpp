#pragma once

namespace tw {

// Value pair (Ai(x), Ai'(x)) at a real argument.
struct AiryPair {
    double x = 0.0;
    double ai = 0.0;
    double ai_prime = 0.0;
};

// Evaluate Ai and Ai' on the working range [-40, 200].
//
// Accuracy: relative error <= 1e-11 for x >= -10 and <= 1e-9 on
// [-40, -10); underflow to exact 0 for x beyond ~108 where the true
// value drops below the smallest subnormal.  Throws domain_error
// outside the working range.
//
// Regimes: compensated Maclaurin series on (-12, 9.5); the exponential
// asymptotic expansion for x >= 9.5; the oscillatory phase/modulus
// asymptotic for x <= -12.  The switchover points sit where both sides
// agree to ~1e-14, far past the accuracy contract.
AiryPair airy_eval(double x);

constexpr double airy_range_min = -40.0;
constexpr double airy_range_max = 200.0;

}  // namespace tw
