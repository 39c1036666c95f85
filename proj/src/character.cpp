#include "weightgeom/character.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

#include "weightgeom/cache.hpp"
#include "weightgeom/errors.hpp"

namespace wg {

// ----------------------------------------------------------- FormalCharacter

FormalCharacter::FormalCharacter(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {}

FormalCharacter::FormalCharacter(std::shared_ptr<const RootSystem> rs, Terms terms)
    : rs_(std::move(rs)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.rank() != rs_->rank()) throw InvalidArgument("character term of wrong rank");
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
}

BigInt FormalCharacter::multiplicity(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void FormalCharacter::add(const Weight& w, const BigInt& m) {
    if (m == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt FormalCharacter::dimension() const {
    BigInt d = 0;
    for (const auto& [w, m] : terms_) d += m;
    return d;
}

std::vector<Weight> FormalCharacter::weights() const {
    std::vector<Weight> out;
    out.reserve(terms_.size());
    for (const auto& [w, m] : terms_) out.push_back(w);
    return out;
}

bool FormalCharacter::is_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

bool FormalCharacter::is_weyl_invariant() const {
    for (const auto& [w, m] : terms_) {
        for (int i = 1; i <= rs_->rank(); ++i) {
            if (w[i - 1] == 0) continue;
            if (multiplicity(rs_->reflect(w, i)) != m) return false;
        }
    }
    return true;
}

bool FormalCharacter::is_multiplicity_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 1; });
}

FormalCharacter::Terms FormalCharacter::dominant_part() const {
    Terms out;
    for (const auto& [w, m] : terms_) {
        if (w.is_dominant()) out.emplace(w, m);
    }
    return out;
}

void FormalCharacter::check_same(const FormalCharacter& o) const {
    if (!(rs_->spec() == o.rs_->spec())) {
        throw InvalidArgument("characters over different systems: " + rs_->name() + " vs " + o.rs_->name());
    }
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
    check_same(o);
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
    check_same(o);
    for (const auto& [w, m] : o.terms_) add(w, -m);
    return *this;
}

FormalCharacter FormalCharacter::scaled(const BigInt& k) const {
    FormalCharacter r(rs_);
    if (k == 0) return r;
    for (const auto& [w, m] : terms_) r.terms_.emplace(w, m * k);
    return r;
}

bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.rs_->spec() == b.rs_->spec() && a.terms_ == b.terms_;
}

BigInt DecompositionResult::multiplicity(const Weight& hw) const {
    auto it = constituents.find(hw);
    return it == constituents.end() ? BigInt(0) : it->second;
}

BigInt DecompositionResult::dimension() const {
    BigInt d = 0;
    for (const auto& [hw, m] : constituents) d += m * weyl_dimension(*system, hw);
    return d;
}

const char* to_string(BilinearType t) {
    switch (t) {
        case BilinearType::None: return "none";
        case BilinearType::Symmetric: return "symmetric";
        case BilinearType::Skew: return "skew";
    }
    return "?";
}

// ------------------------------------------------------------- irreducibles

void check_dominant(const RootSystem& rs, const Weight& hw) {
    if (hw.rank() != rs.rank() || !hw.is_dominant()) {
        throw InvalidArgument(hw.str() + " is not a dominant weight of " + rs.name());
    }
}

FormalCharacter trivial_character(std::shared_ptr<const RootSystem> rs) {
    FormalCharacter t(rs);
    t.add(rs->zero(), 1);
    return t;
}

namespace {

std::map<Weight, BigInt> freudenthal(const RootSystem& rs, const Weight& hw) {
    // Dominant weights below hw: close under subtracting positive roots while
    // staying dominant (every dominant mu < hw is reached this way).
    std::set<Weight> dom{hw};
    std::vector<Weight> queue{hw};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        for (const Root& a : rs.positive_roots()) {
            Weight nu = queue[k] - a.fw;
            if (nu.is_dominant() && dom.insert(nu).second) queue.push_back(nu);
        }
    }
    std::sort(queue.begin(), queue.end(), [&](const Weight& a, const Weight& b) {
        long long ha = rs.scaled_height(a), hb = rs.scaled_height(b);
        return ha != hb ? ha > hb : a > b;
    });

    std::map<Weight, BigInt> mult;
    mult[hw] = 1;
    const Weight two_rho = 2 * rs.rho();
    for (const Weight& mu : queue) {
        if (mu == hw) continue;
        BigInt num = 0;
        for (const Root& a : rs.positive_roots()) {
            Weight nu = mu;
            for (;;) {
                nu += a.fw;
                auto it = mult.find(rs.to_dominant(nu));
                if (it == mult.end()) break;  // root strings are unbroken
                num += it->second * rs.pairing(nu, a.simple);
            }
        }
        auto diff = rs.simple_coords(hw - mu);
        if (!diff) throw ConsistencyError("dominant weight outside the root-lattice coset");
        const long long den = rs.pairing(hw + mu + two_rho, *diff);
        if (den <= 0) throw ConsistencyError("Freudenthal denominator not positive");
        BigInt m = 2 * num;
        if (m % den != 0) throw ConsistencyError("Freudenthal recursion gave a non-integer at " + mu.str());
        m /= den;
        if (m > 0) mult[mu] = m;
    }
    return mult;
}

struct IrrepMemo {
    std::mutex mu;
    std::map<std::pair<std::string, Weight>, std::shared_ptr<const std::map<Weight, BigInt>>> table;
};

IrrepMemo& memo() {
    static IrrepMemo m;
    return m;
}

}  // namespace

const std::map<Weight, BigInt>& dominant_multiplicities(const RootSystem& rs, const Weight& hw) {
    check_dominant(rs, hw);
    auto key = std::make_pair(rs.name(), hw);
    {
        std::lock_guard<std::mutex> lock(memo().mu);
        auto it = memo().table.find(key);
        if (it != memo().table.end()) return *it->second;
    }
    std::map<Weight, BigInt> computed;
    if (auto hit = cache_load(rs.spec(), hw)) {
        computed = std::move(*hit);
    } else {
        computed = freudenthal(rs, hw);
        cache_store(rs.spec(), hw, computed);
    }
    auto shared = std::make_shared<const std::map<Weight, BigInt>>(std::move(computed));
    std::lock_guard<std::mutex> lock(memo().mu);
    // A concurrent caller may have won; both values are identical.
    auto [it, inserted] = memo().table.emplace(key, shared);
    return *it->second;
}

FormalCharacter expand_dominant(std::shared_ptr<const RootSystem> rs, const std::map<Weight, BigInt>& dom) {
    FormalCharacter::Terms terms;
    for (const auto& [mu, m] : dom) {
        if (m == 0) continue;
        for (const Weight& w : rs->orbit(mu)) terms.emplace(w, m);
    }
    return FormalCharacter(rs, std::move(terms));
}

FormalCharacter irrep_character(std::shared_ptr<const RootSystem> rs, const Weight& hw) {
    return expand_dominant(rs, dominant_multiplicities(*rs, hw));
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& hw) {
    check_dominant(rs, hw);
    const Weight shifted = hw + rs.rho();
    BigInt num = 1, den = 1;
    for (const Root& a : rs.positive_roots()) {
        num *= rs.pairing(shifted, a.simple);
        den *= rs.pairing(rs.rho(), a.simple);
    }
    if (num % den != 0) throw ConsistencyError("Weyl dimension formula not integral");
    return num / den;
}

Weight dual_highest_weight(const RootSystem& rs, const Weight& hw) {
    check_dominant(rs, hw);
    return -rs.antidominant(hw);
}

// --------------------------------------------------------------- ring ops

FormalCharacter tensor_product(const FormalCharacter& a, const FormalCharacter& b) {
    if (!(a.system().spec() == b.system().spec())) {
        throw InvalidArgument("tensor_product: characters over " + a.system().name() + " and " + b.system().name());
    }
    std::unordered_map<Weight, BigInt, WeightHash> acc;
    acc.reserve(a.size() * 4 + b.size() * 4);
    for (const auto& [wa, ma] : a.terms()) {
        for (const auto& [wb, mb] : b.terms()) {
            BigInt& slot = acc[wa + wb];
            if (ma == 1 && mb == 1) {
                slot += 1;
            } else {
                slot += ma * mb;
            }
        }
    }
    FormalCharacter::Terms terms;
    for (auto& [w, m] : acc) {
        if (m != 0) terms.emplace(w, std::move(m));
    }
    return FormalCharacter(a.system_ptr(), std::move(terms));
}

FormalCharacter adams_operation(const FormalCharacter& a, int k) {
    if (k < 1) throw InvalidArgument("Adams operation needs k >= 1");
    FormalCharacter::Terms terms;
    for (const auto& [w, m] : a.terms()) terms.emplace(k * w, m);
    return FormalCharacter(a.system_ptr(), std::move(terms));
}

namespace {

void check_plethysm(const FormalCharacter& a, int d, const PlethysmOptions& opts) {
    if (d < 1) throw InvalidArgument("plethysm degree must be >= 1");
    if (d > opts.max_degree) {
        throw ComputationRefused("degree " + std::to_string(d) + " exceeds the configured maximum " +
                                 std::to_string(opts.max_degree) + " (raise it with --max-degree)");
    }
    if (a.system().spec().family == Family::E && a.system().rank() == 8 && d >= 2 && !opts.allow_e8) {
        throw ComputationRefused(
            "E8 symmetric/exterior powers are refused: the character of even the square of the "
            "248-dimensional representation needs peeling against irreducibles whose weight systems "
            "are far beyond desk scale");
    }
}

// Newton's identities: n h_n = sum_{k=1}^n p_k h_{n-k}, and the same for e_n
// with alternating signs.
FormalCharacter power_via_newton(const FormalCharacter& a, int d, bool exterior) {
    std::vector<FormalCharacter> h{trivial_character(a.system_ptr())};
    std::vector<FormalCharacter> p;
    for (int n = 1; n <= d; ++n) {
        p.push_back(adams_operation(a, n));
        FormalCharacter acc(a.system_ptr());
        for (int k = 1; k <= n; ++k) {
            FormalCharacter t = tensor_product(p[k - 1], h[n - k]);
            if (exterior && k % 2 == 0) {
                acc -= t;
            } else {
                acc += t;
            }
        }
        FormalCharacter::Terms terms;
        for (const auto& [w, m] : acc.terms()) {
            if (m % n != 0) throw ConsistencyError("Newton identity left a remainder");
            terms.emplace(w, m / n);
        }
        h.emplace_back(a.system_ptr(), std::move(terms));
    }
    return h.back();
}

}  // namespace

FormalCharacter symmetric_power(const FormalCharacter& a, int d, const PlethysmOptions& opts) {
    check_plethysm(a, d, opts);
    return power_via_newton(a, d, false);
}

FormalCharacter exterior_power(const FormalCharacter& a, int d, const PlethysmOptions& opts) {
    check_plethysm(a, d, opts);
    return power_via_newton(a, d, true);
}

// -------------------------------------------------------------- decompose

DecompositionResult decompose(const FormalCharacter& a) {
    const RootSystem& rs = a.system();
    if (!a.is_nonnegative()) throw NotACharacter("decompose: negative multiplicity in input");
    if (!a.is_weyl_invariant()) throw NotACharacter("decompose: input is not Weyl-invariant");

    DecompositionResult out{a.system_ptr(), {}};
    std::map<Weight, BigInt> rest = a.dominant_part();
    // Peel the highest remaining weight first. Ordering by height (then lex)
    // refines dominance; plain lex order on fw coordinates does not.
    auto higher = [&](const Weight& x, const Weight& y) {
        long long hx = rs.scaled_height(x), hy = rs.scaled_height(y);
        return hx != hy ? hx > hy : x > y;
    };
    while (!rest.empty()) {
        auto top = rest.begin();
        for (auto it = rest.begin(); it != rest.end(); ++it) {
            if (higher(it->first, top->first)) top = it;
        }
        const Weight hw = top->first;
        const BigInt n = top->second;
        if (n < 0) throw NotACharacter("decompose: negative multiplicity at " + hw.str());
        for (const auto& [mu, m] : dominant_multiplicities(rs, hw)) {
            BigInt& slot = rest[mu];
            slot -= n * m;
            if (slot < 0) throw NotACharacter("decompose: subtraction went negative at " + mu.str());
            if (slot == 0) rest.erase(mu);
        }
        out.constituents[hw] += n;
    }
    return out;
}

BigInt trivial_multiplicity(const FormalCharacter& a) {
    return decompose(a).multiplicity(a.system().zero());
}

BilinearType invariant_bilinear_type(std::shared_ptr<const RootSystem> rs, const Weight& hw,
                                     const PlethysmOptions& opts) {
    if (dual_highest_weight(*rs, hw) != hw) return BilinearType::None;
    const FormalCharacter chi = irrep_character(rs, hw);
    const BigInt sym = trivial_multiplicity(symmetric_power(chi, 2, opts));
    const BigInt alt = trivial_multiplicity(exterior_power(chi, 2, opts));
    if (sym == 1 && alt == 0) return BilinearType::Symmetric;
    if (sym == 0 && alt == 1) return BilinearType::Skew;
    throw ConsistencyError("self-dual irreducible " + hw.str() + " with invariants in S2 and L2: " +
                           sym.str() + ", " + alt.str());
}

bool minuscule_check(const RootSystem& rs, const Weight& hw) {
    check_dominant(rs, hw);
    // <mu, alpha^vee> = (mu, alpha) / ((alpha, alpha)/2)
    auto pairs_small = [&](const Weight& mu) {
        for (const Root& a : rs.positive_roots()) {
            long long p = rs.pairing(mu, a.simple) / rs.half_norm(a.simple);
            if (p > 1 || p < -1) return false;
        }
        return true;
    };
    // hw has the largest pairings in its orbit, so test it before walking
    // the orbit (which may be huge for non-minuscule weights).
    bool by_roots = pairs_small(hw);
    if (by_roots) {
        for (const Weight& mu : rs.orbit(hw)) {
            if (!pairs_small(mu)) {
                by_roots = false;
                break;
            }
        }
    }
    const bool single_orbit = dominant_multiplicities(rs, hw).size() == 1;
    if (by_roots != single_orbit) {
        throw ConsistencyError("minuscule tests disagree for " + hw.str() + " in " + rs.name());
    }
    return by_roots;
}

}  // namespace wg
