#include "jucys/symfun.hpp"

#include <stdexcept>

namespace jucys {

std::vector<Int> sigma_table(const std::vector<int>& xs, int b) {
    if (b < 0) throw std::domain_error("sigma_table: negative order");
    std::vector<Int> e(b + 1);
    e[0] = 1;
    for (int x : xs)
        for (int k = b; k >= 1; --k) e[k] += x * e[k - 1];
    return e;
}

std::vector<Int> h_table(const std::vector<int>& xs, int b) {
    if (b < 0) throw std::domain_error("h_table: negative order");
    std::vector<Int> h(b + 1);
    h[0] = 1;
    for (int x : xs)
        for (int k = 1; k <= b; ++k) h[k] += x * h[k - 1];
    return h;
}

Int sigma_eval(const std::vector<int>& xs, int b) {
    if (b < 0) throw std::domain_error("sigma_eval: negative order");
    if (b > static_cast<int>(xs.size())) return 0;
    return sigma_table(xs, b)[b];
}

Int h_eval(const std::vector<int>& xs, int b) {
    if (b < 0) throw std::domain_error("h_eval: negative order");
    if (b > 0 && xs.empty()) return 0;
    return h_table(xs, b)[b];
}

Int p_eval(const std::vector<int>& xs, int b) {
    if (b < 0) throw std::domain_error("p_eval: negative order");
    if (b == 0) return static_cast<long>(xs.size());
    Int s = 0;
    for (int x : xs) {
        Int t = x;
        mpz_pow_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(b));
        s += t;
    }
    return s;
}

}  // namespace jucys
