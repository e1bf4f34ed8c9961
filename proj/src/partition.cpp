#include "jucys/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace jucys {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::domain_error("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::domain_error("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::of(std::initializer_list<int> parts) {
    std::vector<int> v;
    for (int p : parts)
        if (p != 0) v.push_back(p);
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

int Partition::multiplicity(int k) const {
    int m = 0;
    for (int p : parts_) m += (p == k);
    return m;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending-first recursion emits reverse lexicographic order.
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Int partition_count(int n) {
    if (n < 0) return 0;
    // Euler's pentagonal number recurrence; independent of the enumeration above.
    std::vector<Int> p(n + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int acc = 0;
        for (int k = 1;; ++k) {
            long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
            long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            Int term = 0;
            if (g1 <= m) term += p[m - g1];
            if (g2 <= m) term += p[m - g2];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[m] = acc;
    }
    return p[n];
}

std::vector<int> content_multiset(const Partition& lambda) {
    std::vector<int> c;
    c.reserve(lambda.size());
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) c.push_back(j - i);
    std::sort(c.begin(), c.end());
    return c;
}

std::vector<int> reduced_contents(const Partition& lambda) {
    std::vector<int> c = content_multiset(lambda);
    auto it = std::find(c.begin(), c.end(), 0);
    if (it != c.end()) c.erase(it);  // box (1,1); absent only for the empty shape
    return c;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> t;
    if (!lambda.empty()) {
        t.assign(lambda.part(0), 0);
        for (int i = 0; i < lambda.length(); ++i)
            for (int j = 0; j < lambda.part(i); ++j) t[j]++;
    }
    return Partition(std::move(t));
}

Int centralizer_size(const Partition& mu) {
    Int z = 1;
    for (int p : mu.parts()) z *= p;
    int run = 1;
    for (int i = 1; i <= mu.length(); ++i) {
        if (i < mu.length() && mu.part(i) == mu.part(i - 1)) {
            ++run;
        } else {
            z *= factorial(run);
            run = 1;
        }
    }
    return z;
}

Int class_size(const Partition& mu) { return factorial(mu.size()) / centralizer_size(mu); }

Int dimension(const Partition& lambda) {
    Partition t = conjugate(lambda);
    Int hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            hooks *= (lambda.part(i) - j) + (t.part(j) - i) - 1;
    return factorial(lambda.size()) / hooks;
}

Rat product_of_parts(const Partition& mu) {
    Rat r = 1;
    for (int p : mu.parts()) r *= p;
    return r;
}

}  // namespace jucys
