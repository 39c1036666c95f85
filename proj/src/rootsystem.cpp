#include "weightgeom/rootsystem.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

#include <boost/rational.hpp>

#include "weightgeom/errors.hpp"

namespace wg {

char family_letter(Family f) {
    return "ABCDEFG"[static_cast<int>(f)];
}

Family parse_family(char c) {
    if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
    if (c < 'A' || c > 'G') throw InvalidArgument(std::string("unknown family '") + c + "'");
    return static_cast<Family>(c - 'A');
}

std::string RootSystemSpec::name() const {
    return family_letter(family) + std::to_string(rank);
}

bool RootSystemSpec::valid() const {
    switch (family) {
        case Family::A: return rank >= 1 && rank <= kMaxRank;
        case Family::B:
        case Family::C: return rank >= 2 && rank <= kMaxRank;
        case Family::D: return rank >= 3 && rank <= kMaxRank;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

void RootSystemSpec::validate() const {
    if (!valid()) {
        throw InvalidArgument("no root system " + name() + " (ranks: A>=1, B/C>=2, D>=3, E6-E8, F4, G2; at most " +
                              std::to_string(kMaxRank) + ")");
    }
}

RootSystemSpec RootSystemSpec::parse(const std::string& name) {
    if (name.size() < 2) throw InvalidArgument("bad root system name '" + name + "'");
    RootSystemSpec s;
    s.family = parse_family(name[0]);
    try {
        std::size_t used = 0;
        s.rank = std::stoi(name.substr(1), &used);
        if (used != name.size() - 1) throw InvalidArgument("");
    } catch (const std::exception&) {
        throw InvalidArgument("bad root system name '" + name + "'");
    }
    s.validate();
    return s;
}

// ---------------------------------------------------------------- WeylElement

Weight WeylElement::act(const RootSystem& rs, const Weight& w) const {
    Weight r = w;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) r = rs.reflect(r, *it);
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    std::vector<int> w = word_;
    w.insert(w.end(), o.word_.begin(), o.word_.end());
    return WeylElement(std::move(w));
}

WeylElement WeylElement::inverse() const {
    return WeylElement(std::vector<int>(word_.rbegin(), word_.rend()));
}

bool WeylElement::equals(const RootSystem& rs, const WeylElement& o) const {
    return act(rs, rs.rho()) == o.act(rs, rs.rho());
}

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(RootSystemSpec spec) : spec_(spec) {
    spec_.validate();
    build_cartan();
    build_half_lengths();
    build_inverse();
    build_positive_roots();
}

void RootSystem::build_cartan() {
    const int n = rank();
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    auto bond = [&](int i, int j) {  // 1-based, simple bond
        cartan_[i - 1][j - 1] = -1;
        cartan_[j - 1][i - 1] = -1;
    };
    switch (spec_.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) bond(i, i + 1);
            break;
        case Family::B:  // alpha_n short
            for (int i = 1; i < n; ++i) bond(i, i + 1);
            cartan_[n - 2][n - 1] = -2;
            break;
        case Family::C:  // alpha_n long
            for (int i = 1; i < n; ++i) bond(i, i + 1);
            cartan_[n - 1][n - 2] = -2;
            break;
        case Family::D:
            for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
            bond(n - 2, n);
            break;
        case Family::E:
            bond(1, 3);
            bond(2, 4);
            for (int i = 3; i < n; ++i) bond(i, i + 1);
            break;
        case Family::F:  // alpha_1, alpha_2 long
            bond(1, 2);
            bond(2, 3);
            bond(3, 4);
            cartan_[1][2] = -2;
            break;
        case Family::G:  // alpha_1 short
            cartan_[0][1] = -1;
            cartan_[1][0] = -3;
            break;
    }
}

void RootSystem::build_half_lengths() {
    // Solve cartan[i][j] d_j = cartan[j][i] d_i along the (connected) diagram.
    using Q = boost::rational<long long>;
    const int n = rank();
    std::vector<Q> d(n, Q(0));
    d[0] = 1;
    std::deque<int> todo{0};
    while (!todo.empty()) {
        int i = todo.front();
        todo.pop_front();
        for (int j = 0; j < n; ++j) {
            if (j == i || cartan_[i][j] == 0 || d[j] != Q(0)) continue;
            d[j] = d[i] * Q(cartan_[j][i], cartan_[i][j]);
            todo.push_back(j);
        }
    }
    Q lo = *std::min_element(d.begin(), d.end());
    half_len_.resize(n);
    for (int i = 0; i < n; ++i) {
        Q v = d[i] / lo;
        if (v.denominator() != 1) throw ConsistencyError("non-integral root length ratio");
        half_len_[i] = static_cast<int>(v.numerator());
    }
}

void RootSystem::build_inverse() {
    using Q = boost::rational<long long>;
    const int n = rank();
    std::vector<std::vector<Q>> a(n, std::vector<Q>(2 * n, Q(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = cartan_[i][j];
        a[i][n + i] = 1;
    }
    Q det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col] == Q(0)) ++piv;
        if (piv == n) throw ConsistencyError("singular Cartan matrix");
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        Q p = a[col][col];
        det *= p;
        for (auto& x : a[col]) x /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == Q(0)) continue;
            Q f = a[r][col];
            for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    if (det.denominator() != 1 || det <= Q(0)) throw ConsistencyError("unexpected Cartan determinant");
    det_ = det.numerator();
    adj_.assign(n, std::vector<long long>(n, 0));
    adj_row_sum_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Q v = a[i][n + j] * det;
            if (v.denominator() != 1) throw ConsistencyError("non-integral adjugate");
            adj_[i][j] = v.numerator();
            adj_row_sum_[i] += adj_[i][j];
        }
    }
}

void RootSystem::build_positive_roots() {
    const int n = rank();
    std::set<Weight> known;
    std::vector<Weight> level;
    for (int i = 0; i < n; ++i) {
        Weight e(n);
        e[i] = 1;
        level.push_back(e);
        known.insert(e);
    }
    std::vector<Weight> all = level;
    // Extend by alpha_i whenever the alpha_i-string through r continues upward:
    // q = p - <r, alpha_i^vee> where p counts how far the string goes down.
    while (!level.empty()) {
        std::set<Weight> next;
        for (const Weight& r : level) {
            Weight fw = fw_from_simple(r);
            for (int i = 0; i < n; ++i) {
                Weight e(n);
                e[i] = 1;
                if (r == e) continue;
                int p = 0;
                Weight down = r - e;
                while (known.count(down)) {
                    ++p;
                    down -= e;
                }
                if (p - fw[i] > 0) next.insert(r + e);
            }
        }
        level.assign(next.begin(), next.end());
        for (const Weight& r : level) {
            known.insert(r);
            all.push_back(r);
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const Weight& a, const Weight& b) {
        if (a.sum() != b.sum()) return a.sum() < b.sum();
        return a < b;
    });
    positive_.clear();
    for (const Weight& s : all) positive_.push_back(Root{s, fw_from_simple(s)});
    // The top root must dominate everything coefficientwise.
    const Weight& top = positive_.back().simple;
    for (const Root& r : positive_) {
        for (int i = 0; i < n; ++i) {
            if (r.simple[i] > top[i]) throw ConsistencyError("highest root is not unique in " + name());
        }
    }
}

std::vector<int> RootSystem::neighbours(int i) const {
    check_node(i);
    std::vector<int> out;
    for (int j = 1; j <= rank(); ++j) {
        if (j != i && cartan(i, j) != 0) out.push_back(j);
    }
    return out;
}

bool RootSystem::is_root(const Weight& simple) const {
    Weight s = simple;
    if (!s.is_dominant()) s = -s;
    return std::any_of(positive_.begin(), positive_.end(), [&](const Root& r) { return r.simple == s; });
}

Weight RootSystem::rho() const {
    Weight r(rank());
    for (int i = 0; i < rank(); ++i) r[i] = 1;
    return r;
}

Weight RootSystem::fundamental(int i) const {
    check_node(i);
    Weight w(rank());
    w[i - 1] = 1;
    return w;
}

Weight RootSystem::simple_root(int i) const {
    check_node(i);
    Weight w(rank());
    for (int j = 0; j < rank(); ++j) w[j] = cartan_[i - 1][j];
    return w;
}

void RootSystem::check_node(int i) const {
    if (i < 1 || i > rank()) {
        throw InvalidArgument("node index " + std::to_string(i) + " out of range for " + name());
    }
}

Weight RootSystem::reflect(const Weight& w, int i) const {
    check_node(i);
    const int k = w[i - 1];
    if (k == 0) return w;
    Weight r = w;
    const auto& row = cartan_[i - 1];
    for (int j = 0; j < rank(); ++j) r[j] -= k * row[j];
    return r;
}

Weight RootSystem::to_dominant(const Weight& w, std::vector<int>* word) const {
    Weight r = w;
    if (word) word->clear();
    for (;;) {
        int i = 0;
        while (i < rank() && r[i] >= 0) ++i;
        if (i == rank()) return r;
        r = reflect(r, i + 1);
        if (word) word->push_back(i + 1);
    }
}

Weight RootSystem::antidominant(const Weight& dominant) const {
    if (dominant.rank() != rank() || !dominant.is_dominant()) {
        throw InvalidArgument("antidominant: " + dominant.str() + " is not a dominant weight of " + name());
    }
    Weight r = dominant;
    for (;;) {
        int i = 0;
        while (i < rank() && r[i] <= 0) ++i;
        if (i == rank()) return r;
        r = reflect(r, i + 1);
    }
}

std::vector<int> RootSystem::minus_w0_permutation() const {
    std::vector<int> perm(rank());
    for (int i = 1; i <= rank(); ++i) {
        Weight m = -antidominant(fundamental(i));
        int found = 0;
        for (int j = 1; j <= rank(); ++j) {
            if (m == fundamental(j)) found = j;
        }
        if (!found) throw ConsistencyError("-w0 does not permute the fundamental weights");
        perm[i - 1] = found;
    }
    return perm;
}

std::vector<Weight> RootSystem::orbit(const Weight& w) const {
    if (w.rank() != rank()) throw InvalidArgument("orbit: rank mismatch");
    Weight start = to_dominant(w);
    std::unordered_set<Weight, WeightHash> seen{start};
    std::vector<Weight> queue{start};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const Weight cur = queue[k];
        for (int i = 1; i <= rank(); ++i) {
            if (cur[i - 1] == 0) continue;
            Weight nx = reflect(cur, i);
            if (seen.insert(nx).second) queue.push_back(nx);
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::optional<Weight> RootSystem::simple_coords(const Weight& fw) const {
    const int n = rank();
    Weight c(n);
    for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int i = 0; i < n; ++i) s += static_cast<long long>(fw[i]) * adj_[i][j];
        if (s % det_ != 0) return std::nullopt;
        c[j] = static_cast<int>(s / det_);
    }
    return c;
}

Weight RootSystem::fw_from_simple(const Weight& simple) const {
    const int n = rank();
    Weight fw(n);
    for (int i = 0; i < n; ++i) {
        if (simple[i] == 0) continue;
        for (int j = 0; j < n; ++j) fw[j] += simple[i] * cartan_[i][j];
    }
    return fw;
}

long long RootSystem::scaled_height(const Weight& fw) const {
    long long s = 0;
    for (int i = 0; i < rank(); ++i) s += static_cast<long long>(fw[i]) * adj_row_sum_[i];
    return s;
}

long long RootSystem::pairing(const Weight& mu, const Weight& alpha_simple) const {
    long long s = 0;
    for (int j = 0; j < rank(); ++j) {
        s += static_cast<long long>(alpha_simple[j]) * half_len_[j] * mu[j];
    }
    return s;
}

long long RootSystem::half_norm(const Weight& alpha_simple) const {
    // (a, a) = sum_ij a_i a_j cartan[i][j] d_j; halve it.
    long long s = 0;
    for (int i = 0; i < rank(); ++i) {
        for (int j = 0; j < rank(); ++j) {
            s += static_cast<long long>(alpha_simple[i]) * alpha_simple[j] * cartan_[i][j] * half_len_[j];
        }
    }
    return s / 2;
}

std::vector<int> RootSystem::delta_component(int delta, int beta) const {
    check_node(delta);
    check_node(beta);
    if (delta == beta) return {};
    std::vector<int> out{beta};
    std::vector<bool> seen(rank() + 1, false);
    seen[beta] = true;
    seen[delta] = true;
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int j : neighbours(out[k])) {
            if (!seen[j]) {
                seen[j] = true;
                out.push_back(j);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int RootSystem::delta_height(const Root& r, int delta, int beta) const {
    std::vector<int> comp = delta_component(delta, beta);
    int h = 0;
    for (int i = 1; i <= rank(); ++i) {
        if (!std::binary_search(comp.begin(), comp.end(), i)) h += r.simple[i - 1];
    }
    return h;
}

std::shared_ptr<const RootSystem> root_system(const RootSystemSpec& spec) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const RootSystem>> cache;
    spec.validate();
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[spec.name()];
    if (!slot) slot = std::make_shared<const RootSystem>(spec);
    return slot;
}

std::shared_ptr<const RootSystem> root_system(const std::string& name) {
    return root_system(RootSystemSpec::parse(name));
}

}  // namespace wg
