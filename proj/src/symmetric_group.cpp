#include "jucys/symmetric_group.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "jucys/errors.hpp"

namespace jucys {

Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint8_t>(i);
    return c;
}

Partition cycle_type(const Perm& a) {
    int n = static_cast<int>(a.size());
    std::vector<bool> seen(n, false);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        do {
            seen[j] = true;
            ++len;
            j = a[j];
        } while (j != i);
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

namespace {

long long fact_ll(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Lehmer-code rank of a permutation in lexicographic order.
int lehmer_rank(const Perm& p) {
    int n = static_cast<int>(p.size());
    long long r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) smaller += (p[j] < p[i]);
        r = r * (n - i) + smaller;
    }
    return static_cast<int>(r);
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n), order_(fact_ll(n)) {
    if (n < 0 || n > 9) throw std::domain_error("SymmetricGroup: n out of range for full enumeration");

    elements_.reserve(order_);
    Perm p = perm_identity(n);
    do {
        elements_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    classes_ = partitions_of(n);
    for (int i = 0; i < num_classes(); ++i) class_index_[classes_[i]] = i;
    identity_class_ = num_classes() - 1;  // (1^n) is last in reverse-lex order

    type_of_.resize(order_);
    for (long long r = 0; r < order_; ++r)
        type_of_[r] = class_index_.at(cycle_type(elements_[r]));

    rtrans_.assign(n, std::vector<std::vector<int>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            auto& tbl = rtrans_[x][y];
            tbl.resize(order_);
            for (long long r = 0; r < order_; ++r) {
                Perm q = elements_[r];
                std::swap(q[x], q[y]);  // right multiplication by (x y)
                tbl[r] = rank(q);
            }
        }

    // Structure constants by direct counting: fix one representative per class
    // g, then c[type(u)][type(u^{-1} g)][class(g)] += 1 over all u.
    int k = num_classes();
    sc_.assign(k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
    std::vector<Perm> reps(k);
    std::vector<bool> have(k, false);
    for (long long r = 0; r < order_ && !std::all_of(have.begin(), have.end(), [](bool b) { return b; }); ++r) {
        int t = type_of_[r];
        if (!have[t]) {
            reps[t] = elements_[r];
            have[t] = true;
        }
    }
    for (int g = 0; g < k; ++g) {
        for (long long r = 0; r < order_; ++r) {
            const Perm& u = elements_[r];
            Perm v = perm_mul(perm_inverse(u), reps[g]);
            sc_[type_of_[r]][class_index_.at(cycle_type(v))][g]++;
        }
    }
}

int SymmetricGroup::rank(const Perm& p) const { return lehmer_rank(p); }

int SymmetricGroup::class_index(const Partition& alpha) const {
    auto it = class_index_.find(alpha);
    if (it == class_index_.end()) throw std::domain_error("class_index: not a partition of n");
    return it->second;
}

const std::vector<int>& SymmetricGroup::right_transposition(int x, int y) const {
    if (!(0 <= x && x < y && y < n_)) throw std::domain_error("right_transposition: bad pair");
    return rtrans_[x][y];
}

namespace {
std::atomic<int> g_limit{7};
std::mutex g_groups_mutex;
std::map<int, std::unique_ptr<SymmetricGroup>> g_groups;
}  // namespace

int enumeration_limit() { return g_limit.load(); }
void set_enumeration_limit(int limit) { g_limit.store(limit); }

const SymmetricGroup& symmetric_group(int n, bool force) {
    if (n > g_limit.load() && !force)
        throw resource_error("symmetric group enumeration refused for n = " + std::to_string(n) +
                             " (limit " + std::to_string(g_limit.load()) + ")");
    std::lock_guard lock(g_groups_mutex);
    auto it = g_groups.find(n);
    if (it == g_groups.end()) it = g_groups.emplace(n, std::make_unique<SymmetricGroup>(n)).first;
    return *it->second;
}

}  // namespace jucys
