#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include <Eigen/Core>

namespace egth {

struct OpCounts {
    std::int64_t add = 0;
    std::int64_t sub = 0;
    std::int64_t mul = 0;
    std::int64_t div = 0;
    std::int64_t neg = 0;
};

/// Instrumented binary64 scalar: every arithmetic operator bumps a
/// thread-local counter. Used to verify that the state-reduction algorithms
/// perform no subtraction. Copies, comparisons and conversions are free.
class Counted {
public:
    Counted() : v_(0.0) {}
    Counted(double v) : v_(v) {}  // NOLINT: implicit by design

    double value() const { return v_; }

    static const OpCounts& counts() { return counts_; }
    static void reset_counts() { counts_ = OpCounts{}; }

    friend Counted operator+(Counted a, Counted b) { ++counts_.add; return Counted(a.v_ + b.v_); }
    friend Counted operator-(Counted a, Counted b) { ++counts_.sub; return Counted(a.v_ - b.v_); }
    friend Counted operator*(Counted a, Counted b) { ++counts_.mul; return Counted(a.v_ * b.v_); }
    friend Counted operator/(Counted a, Counted b) { ++counts_.div; return Counted(a.v_ / b.v_); }
    friend Counted operator-(Counted a) { ++counts_.neg; return Counted(-a.v_); }
    friend Counted operator+(Counted a) { return a; }

    Counted& operator+=(Counted o) { *this = *this + o; return *this; }
    Counted& operator-=(Counted o) { *this = *this - o; return *this; }
    Counted& operator*=(Counted o) { *this = *this * o; return *this; }
    Counted& operator/=(Counted o) { *this = *this / o; return *this; }

    friend bool operator==(Counted a, Counted b) { return a.v_ == b.v_; }
    friend bool operator!=(Counted a, Counted b) { return a.v_ != b.v_; }
    friend bool operator<(Counted a, Counted b) { return a.v_ < b.v_; }
    friend bool operator<=(Counted a, Counted b) { return a.v_ <= b.v_; }
    friend bool operator>(Counted a, Counted b) { return a.v_ > b.v_; }
    friend bool operator>=(Counted a, Counted b) { return a.v_ >= b.v_; }

private:
    double v_;
    static thread_local OpCounts counts_;
};

inline thread_local OpCounts Counted::counts_{};

inline Counted abs(Counted a) { return Counted(std::fabs(a.value())); }
inline Counted sqrt(Counted a) { return Counted(std::sqrt(a.value())); }
inline bool isfinite(Counted a) { return std::isfinite(a.value()); }

/// Underlying double of a scalar, for reporting.
inline double to_double(double v) { return v; }
inline double to_double(float v) { return static_cast<double>(v); }
inline double to_double(Counted v) { return v.value(); }

}  // namespace egth

namespace std {

template <>
struct numeric_limits<egth::Counted> : numeric_limits<double> {};

}  // namespace std

namespace Eigen {

template <>
struct NumTraits<egth::Counted> : GenericNumTraits<egth::Counted> {
    typedef egth::Counted Real;
    typedef egth::Counted NonInteger;
    typedef egth::Counted Nested;
    typedef egth::Counted Literal;

    static inline egth::Counted epsilon() { return std::numeric_limits<double>::epsilon(); }
    static inline egth::Counted dummy_precision() { return 1e-12; }
    static inline egth::Counted highest() { return std::numeric_limits<double>::max(); }
    static inline egth::Counted lowest() { return std::numeric_limits<double>::lowest(); }
    static inline int digits10() { return std::numeric_limits<double>::digits10; }

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 1,
        MulCost = 1
    };
};

}  // namespace Eigen
