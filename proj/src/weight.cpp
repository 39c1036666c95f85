#include "weightgeom/weight.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "weightgeom/errors.hpp"

namespace wg {

Weight::Weight(int rank) : rank_(rank) {
    if (rank < 0 || rank > kMaxRank) {
        throw InvalidArgument("weight rank out of range: " + std::to_string(rank));
    }
}

Weight::Weight(std::initializer_list<int> coords)
    : Weight(std::span<const int>(coords.begin(), coords.size())) {}

Weight::Weight(std::span<const int> coords) : Weight(static_cast<int>(coords.size())) {
    std::copy(coords.begin(), coords.end(), c_.begin());
}

bool Weight::is_zero() const {
    return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x == 0; });
}

bool Weight::is_dominant() const {
    return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x >= 0; });
}

bool Weight::is_antidominant() const {
    return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x <= 0; });
}

int Weight::sum() const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += c_[i];
    return s;
}

std::vector<int> Weight::to_vector() const {
    return {c_.begin(), c_.begin() + rank_};
}

std::string Weight::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

Weight& Weight::operator+=(const Weight& o) {
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
}

Weight& Weight::operator*=(int k) {
    for (int i = 0; i < rank_; ++i) c_[i] *= k;
    return *this;
}

Weight Weight::operator-() const {
    Weight r = *this;
    r *= -1;
    return r;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    for (int i = 0; i < a.rank_; ++i) {
        if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::size_t Weight::hash() const {
    // FNV-1a over the coordinates; weights here are tiny so this mixes fine.
    std::uint64_t h = 1469598103934665603ULL;
    for (int i = 0; i < rank_; ++i) {
        h ^= static_cast<std::uint32_t>(c_[i]);
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << '(';
    for (int i = 0; i < w.rank(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os << ')';
}

Weight parse_weight(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (ch != '(' && ch != ')' && ch != ' ') s += ch;
    }
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int x = 0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
        if (item.empty() || ec != std::errc() || end != item.data() + item.size())
            throw InvalidArgument("bad weight: " + text);
        v.push_back(x);
    }
    if (v.empty() || v.size() > static_cast<std::size_t>(kMaxRank)) {
        throw InvalidArgument("bad weight: " + text);
    }
    return Weight(std::span<const int>(v));
}

}  // namespace wg
