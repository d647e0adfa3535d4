#pragma once

#include <cmath>

namespace harmdiff {

// Neumaier-compensated accumulator ("twosum" error-free transformation).
// Accumulation order is whatever the caller feeds it; the result is a
// single rounding of the exact sum for all practical magnitudes.
class StableSum {
public:
    StableSum() = default;
    explicit StableSum(double init) : sum_(init) {}

    void add(double value) {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            comp_ += (sum_ - t) + value;
        } else {
            comp_ += (value - t) + sum_;
        }
        sum_ = t;
    }

    double result() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace harmdiff
