#include "jucys/blocks.hpp"

#include <stdexcept>

#include "jucys/characters.hpp"
#include "jucys/errors.hpp"
#include "jucys/symfun.hpp"

namespace jucys {

BlockSpec BlockSpec::strict_monotone(int b) { return {Flavor::StrictMonotone, b, {}, {}}; }
BlockSpec BlockSpec::monotone(int b) { return {Flavor::Monotone, b, {}, {}}; }
BlockSpec BlockSpec::atlantes(int b) { return {Flavor::Atlantes, b, {}, {}}; }
BlockSpec BlockSpec::free_single(int b) { return {Flavor::FreeSingle, b, {}, {}}; }
BlockSpec BlockSpec::free_group(int b) { return {Flavor::FreeGroup, b, {}, {}}; }
BlockSpec BlockSpec::class_sum(Partition alpha) { return {Flavor::ClassSum, 0, std::move(alpha), {}}; }
BlockSpec BlockSpec::completed_cycle(int r) { return {Flavor::CompletedCycle, r, {}, {}}; }
BlockSpec BlockSpec::hyper_w(Rat w) { return {Flavor::HyperW, 0, {}, std::move(w)}; }
BlockSpec BlockSpec::hyper_z(Rat z) { return {Flavor::HyperZ, 0, {}, std::move(z)}; }

std::optional<int> BlockSpec::rh_weight(int n) const {
    switch (flavor) {
        case Flavor::StrictMonotone:
        case Flavor::Monotone:
        case Flavor::Atlantes:
        case Flavor::FreeSingle:
        case Flavor::FreeGroup:
            return b;
        case Flavor::ClassSum:
            return n - alpha.length();
        case Flavor::CompletedCycle:
            return b - 1;
        default:
            return std::nullopt;
    }
}

std::string BlockSpec::to_string() const {
    switch (flavor) {
        case Flavor::StrictMonotone: return "strict_monotone(" + std::to_string(b) + ")";
        case Flavor::Monotone: return "monotone(" + std::to_string(b) + ")";
        case Flavor::Atlantes: return "atlantes(" + std::to_string(b) + ")";
        case Flavor::FreeSingle: return "free_single(" + std::to_string(b) + ")";
        case Flavor::FreeGroup: return "free_group(" + std::to_string(b) + ")";
        case Flavor::ClassSum: return "class_sum(" + alpha.to_string() + ")";
        case Flavor::CompletedCycle: return "completed_cycle(" + std::to_string(b) + ")";
        case Flavor::HyperW: return "hyper_w(" + rat_str(param) + ")";
        case Flavor::HyperZ: return "hyper_z(" + rat_str(param) + ")";
    }
    return "?";
}

Rat completed_cycle_eigenvalue(int r, const Partition& lambda) {
    if (r < 1) throw std::domain_error("completed cycle order must be >= 1");
    Rat sum = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        Rat a = rat(2 * lambda.part(i - 1) - 2 * i + 1, 2);  // lambda_i - i + 1/2
        Rat b = rat(-2 * i + 1, 2);                          // -i + 1/2
        Rat pa = 1, pb = 1;
        for (int k = 0; k < r; ++k) {
            pa *= a;
            pb *= b;
        }
        sum += pa - pb;
    }
    return sum / rat(factorial(r));
}

namespace {

// Signed free-group expansion at the eigenvalue level: compositions of b into
// k parts a_i >= 1 (the trivial class (1^n) never appears as a factor), each
// factor being the free-single eigenvalue of order a_i, with weight (-1)^{k+b}.
Rat free_group_eigenvalue(int b, const Partition& lambda, const std::vector<Rat>& single) {
    if (b == 0) return 1;  // empty block vector: identity
    Rat total = 0;
    std::vector<int> comp;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            Rat prod = (comp.size() + b) % 2 == 0 ? 1 : -1;
            for (int a : comp) prod *= single[a];
            total += prod;
            return;
        }
        for (int a = 1; a <= rest; ++a) {
            comp.push_back(a);
            self(self, rest - a);
            comp.pop_back();
        }
    };
    rec(rec, b);
    return total;
}

}  // namespace

Rat block_eigenvalue(const BlockSpec& block, const Partition& lambda) {
    const int n = lambda.size();
    using F = BlockSpec::Flavor;
    switch (block.flavor) {
        case F::StrictMonotone:
            return Rat(sigma_eval(reduced_contents(lambda), block.b));
        case F::Monotone:
            return Rat(h_eval(reduced_contents(lambda), block.b));
        case F::Atlantes:
            return Rat(p_eval(reduced_contents(lambda), block.b));
        case F::FreeSingle: {
            Rat s = 0;
            for (const Partition& alpha : partitions_of(n))
                if (alpha.length() == n - block.b) s += class_sum_eigenvalue(lambda, alpha);
            return s;
        }
        case F::FreeGroup: {
            std::vector<Rat> single(block.b + 1);
            for (int a = 1; a <= block.b; ++a) {
                single[a] = 0;
                for (const Partition& alpha : partitions_of(n))
                    if (alpha.length() == n - a) single[a] += class_sum_eigenvalue(lambda, alpha);
            }
            return free_group_eigenvalue(block.b, lambda, single);
        }
        case F::ClassSum:
            if (block.alpha.size() != n) throw std::domain_error("class_sum block: |alpha| != n");
            return class_sum_eigenvalue(lambda, block.alpha);
        case F::CompletedCycle:
            return completed_cycle_eigenvalue(block.b, lambda);
        case F::HyperW: {
            Rat prod = 1;
            for (int c : content_multiset(lambda)) prod *= Rat(1) + c * block.param;
            return prod;
        }
        case F::HyperZ: {
            Rat prod = 1;
            for (int c : content_multiset(lambda)) {
                Rat f = Rat(1) - c * block.param;
                if (f == 0)
                    throw pole_error("hyper_z pole: 1 - c z = 0 at content " + std::to_string(c));
                prod /= f;
            }
            return prod;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace jucys
