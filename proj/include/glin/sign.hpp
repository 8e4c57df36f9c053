#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace glin {

/// An element of the multiplicative group {+1, -1}.
class Sign {
public:
    constexpr Sign() : v_(1) {}
    constexpr explicit Sign(int v) : v_(static_cast<int8_t>(v)) {
        if (v != 1 && v != -1)
            throw std::invalid_argument("Sign must be +1 or -1");
    }

    static constexpr Sign plus() { return Sign(+1); }
    static constexpr Sign minus() { return Sign(-1); }

    constexpr int value() const { return v_; }
    constexpr bool positive() const { return v_ > 0; }

    friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.v_ * b.v_); }
    Sign& operator*=(Sign b) { v_ = static_cast<int8_t>(v_ * b.v_); return *this; }
    constexpr Sign inverse() const { return *this; }  // self-inverse in O(1)
    constexpr Sign operator-() const { return Sign(-v_); }

    friend constexpr bool operator==(Sign a, Sign b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Sign a, Sign b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(Sign a, Sign b) { return a.v_ < b.v_; }

    std::string str() const { return v_ > 0 ? "+1" : "-1"; }

private:
    int8_t v_;
};

inline Sign sign_from_int(int v) { return Sign(v); }

}  // namespace glin
