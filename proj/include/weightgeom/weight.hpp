#ifndef WEIGHTGEOM_WEIGHT_HPP
#define WEIGHTGEOM_WEIGHT_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace wg {

inline constexpr int kMaxRank = 8;

// Integer tuple of length rank. Used both for weights in the fundamental
// basis and for root coefficients over the simple roots; which one a value
// means is fixed by the function that returns it. Coordinates are 0-based,
// simple-root indices elsewhere in the library are 1-based (Bourbaki).
class Weight {
public:
    Weight() = default;
    explicit Weight(int rank);
    Weight(std::initializer_list<int> coords);
    explicit Weight(std::span<const int> coords);

    int rank() const { return rank_; }
    int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const;
    bool is_dominant() const;
    bool is_antidominant() const;
    int sum() const;
    std::vector<int> to_vector() const;
    std::string str() const;  // "(1,0,-1)"

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight& operator*=(int k);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight a) { return a *= k; }
    Weight operator-() const;

    // Lexicographic on coordinates; ranks compare first.
    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

    std::size_t hash() const;

private:
    std::array<std::int32_t, kMaxRank> c_{};
    std::int32_t rank_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

// Parses "1,0,-1" or "(1,0,-1)".
Weight parse_weight(const std::string& text);

struct WeightHash {
    std::size_t operator()(const Weight& w) const { return w.hash(); }
};

}  // namespace wg

template <>
struct std::hash<wg::Weight> {
    std::size_t operator()(const wg::Weight& w) const { return w.hash(); }
};

#endif
