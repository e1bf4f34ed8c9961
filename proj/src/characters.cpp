#include "jucys/characters.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace jucys {
namespace {

// Beta-number encoding: a partition with L rows (padded with zeros) becomes the
// strictly decreasing set {lambda_i + L - i}.  Removing a border strip of size s
// means replacing some b in the set by b - s (if absent), and the strip height
// parity is the number of set members strictly between b - s and b.
std::vector<int> beta_numbers(const Partition& lambda, int pad) {
    std::vector<int> b(pad);
    for (int i = 0; i < pad; ++i) {
        int li = i < lambda.length() ? lambda.part(i) : 0;
        b[i] = li + pad - 1 - i;
    }
    return b;  // strictly decreasing
}

Partition from_beta(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<int>());
    std::vector<int> parts;
    int pad = static_cast<int>(b.size());
    for (int i = 0; i < pad; ++i) {
        int li = b[i] - (pad - 1 - i);
        if (li > 0) parts.push_back(li);
    }
    return Partition(std::move(parts));
}

using Key = std::pair<std::vector<int>, std::vector<int>>;
std::map<Key, long long> g_memo;
std::shared_mutex g_memo_mutex;

// chi_lambda on the cycle type given by parts[k..], parts weakly decreasing so
// the largest remaining part is consumed first.
long long mn(const Partition& lambda, const std::vector<int>& parts, std::size_t k) {
    if (lambda.empty()) return 1;
    Key key(lambda.parts(), std::vector<int>(parts.begin() + k, parts.end()));
    {
        std::shared_lock lock(g_memo_mutex);
        auto it = g_memo.find(key);
        if (it != g_memo.end()) return it->second;
    }
    int s = parts[k];
    std::vector<int> beta = beta_numbers(lambda, lambda.length());
    long long acc = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - s;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int v : beta)
            if (v > target && v < beta[i]) ++height;
        std::vector<int> nb = beta;
        nb[i] = target;
        long long sub = mn(from_beta(std::move(nb)), parts, k + 1);
        acc += (height % 2 == 0) ? sub : -sub;
    }
    {
        std::unique_lock lock(g_memo_mutex);
        g_memo.emplace(std::move(key), acc);
    }
    return acc;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::domain_error("character: |lambda| != |mu|");
    return mn(lambda, mu.parts(), 0);
}

PPoly schur_in_p(const Partition& lambda) {
    PPoly out;
    for (const Partition& mu : partitions_of(lambda.size())) {
        long long chi = character(lambda, mu);
        if (chi == 0) continue;
        out[mu] = rat(Int(chi), centralizer_size(mu));
    }
    return out;
}

Rat class_sum_eigenvalue(const Partition& lambda, const Partition& alpha) {
    return rat(class_size(alpha) * character(lambda, alpha), dimension(lambda));
}

}  // namespace jucys
