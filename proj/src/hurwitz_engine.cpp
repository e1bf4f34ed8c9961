#include "jucys/hurwitz_engine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "jucys/characters.hpp"
#include "jucys/errors.hpp"
#include "jucys/symfun.hpp"

namespace jucys {

Rat hurwitz_number(const HurwitzProblem& problem) {
    if (problem.mu.size() != problem.nu.size())
        throw std::domain_error("hurwitz_number: |mu| != |nu|");
    const int n = problem.mu.size();
    Rat sum = 0;
    for (const Partition& lambda : partitions_of(n)) {
        Rat term = Rat(character(lambda, problem.mu)) * Rat(character(lambda, problem.nu));
        if (term == 0) continue;
        for (const BlockSpec& block : problem.blocks) {
            term *= block_eigenvalue(block, lambda);
            if (term == 0) break;
        }
        sum += term;
    }
    Rat norm = problem.mode == FiberMode::Full
                   ? Rat(centralizer_size(problem.mu) * centralizer_size(problem.nu))
                   : product_of_parts(problem.mu) * product_of_parts(problem.nu);
    return sum / norm;
}

Rat hypergeometric_coefficient(int n, const std::vector<int>& wpows, const std::vector<int>& zpows,
                               const Partition& mu, const Partition& nu) {
    if (mu.size() != n || nu.size() != n)
        throw std::domain_error("hypergeometric_coefficient: |mu| != n or |nu| != n");
    HurwitzProblem problem{mu, nu, {}, FiberMode::Full};
    for (int c : wpows) problem.blocks.push_back(BlockSpec::strict_monotone(c));
    for (int d : zpows) problem.blocks.push_back(BlockSpec::monotone(d));
    return hurwitz_number(problem);
}

// ---------------------------------------------------------------------------
// Connected numbers
// ---------------------------------------------------------------------------

int ConnectedTable::rh_weight(int b) const {
    switch (family) {
        case Family::Monotone:
        case Family::StrictMonotone:
        case Family::SimpleHurwitz:
            return b;
        case Family::CompletedCycles:
            return b * (r - 1);
        case Family::Atlantes:
            return b * r;
    }
    return 0;
}

int ConnectedTable::nu_length(int n) const {
    switch (family) {
        case Family::Monotone:
        case Family::StrictMonotone:
            return n / r;
        default:
            return n;
    }
}

Rat ConnectedTable::at(const Partition& mu, int b) const {
    auto it = connected.find({mu, b});
    return it == connected.end() ? Rat(0) : it->second;
}

std::optional<int> ConnectedTable::key_for_genus(int g, const Partition& mu) const {
    int rh = 2 * g - 2 + mu.length() + nu_length(mu.size());
    if (rh < 0) return std::nullopt;
    switch (family) {
        case Family::Monotone:
        case Family::StrictMonotone:
        case Family::SimpleHurwitz:
            return rh;
        case Family::CompletedCycles:
            if (r == 1 || rh % (r - 1) != 0) return std::nullopt;
            return rh / (r - 1);
        case Family::Atlantes:
            if (rh % r != 0) return std::nullopt;
            return rh / r;
    }
    return std::nullopt;
}

namespace {

// The disconnected/connected bridge lives in a tiny bespoke algebra: terms are
// keyed by (mu, b), products merge the partitions and add the b's.
using DisKey = std::pair<Partition, int>;
using DisSeries = std::map<DisKey, Rat>;

Partition merge_partitions(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

DisSeries mul(const DisSeries& a, const DisSeries& b, int nmax, int bmax) {
    DisSeries c;
    for (auto& [ka, va] : a)
        for (auto& [kb, vb] : b) {
            if (ka.first.size() + kb.first.size() > nmax) continue;
            if (ka.second + kb.second > bmax) continue;
            c[{merge_partitions(ka.first, kb.first), ka.second + kb.second}] += va * vb;
        }
    return c;
}

// log(1 + x) with x having no constant term; terminates because every term of
// x carries positive degree |mu| >= 1.
DisSeries log1p(const DisSeries& x, int nmax, int bmax) {
    DisSeries acc, pw = x;
    for (int k = 1; k <= nmax && !pw.empty(); ++k) {
        Rat c = rat((k % 2 == 1) ? 1 : -1, k);
        for (auto& [key, v] : pw) acc[key] += c * v;
        pw = mul(pw, x, nmax, bmax);
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second == 0 ? acc.erase(it) : std::next(it);
    return acc;
}

}  // namespace

ConnectedTable connected_numbers(Family family, int nmax, int bmax, int r) {
    if (nmax < 0 || bmax < 0 || r < 1) throw std::domain_error("connected_numbers: bad bounds");
    const bool multi_copy = family == Family::SimpleHurwitz || family == Family::CompletedCycles ||
                            family == Family::Atlantes;

    DisSeries disconnected;
    for (int n = 1; n <= nmax; ++n) {
        Partition nu;
        if (family == Family::Monotone || family == Family::StrictMonotone) {
            if (n % r != 0) continue;
            nu = Partition(std::vector<int>(n / r, r));
        } else {
            nu = Partition(std::vector<int>(n, 1));
        }
        for (const Partition& mu : partitions_of(n)) {
            for (int b = 0; b <= bmax; ++b) {
                HurwitzProblem problem{mu, nu, {}, FiberMode::Full};
                switch (family) {
                    case Family::Monotone:
                        problem.blocks = {BlockSpec::monotone(b)};
                        break;
                    case Family::StrictMonotone:
                        problem.blocks = {BlockSpec::strict_monotone(b)};
                        break;
                    case Family::SimpleHurwitz: {
                        if (b > 0 && n < 2) continue;  // no transpositions in S_1
                        std::vector<int> two_cycle{2};
                        two_cycle.insert(two_cycle.end(), n - 2, 1);
                        problem.blocks.assign(b, BlockSpec::class_sum(Partition(two_cycle)));
                        break;
                    }
                    case Family::CompletedCycles:
                        problem.blocks.assign(b, BlockSpec::completed_cycle(r));
                        break;
                    case Family::Atlantes:
                        problem.blocks.assign(b, BlockSpec::atlantes(r));
                        break;
                }
                Rat h = hurwitz_number(problem);
                if (multi_copy) h /= Rat(factorial(b));  // exponential marker
                if (h != 0) disconnected[{mu, b}] += h;
            }
        }
    }

    ConnectedTable table;
    table.family = family;
    table.r = r;
    table.nmax = nmax;
    table.bmax = bmax;
    DisSeries conn = log1p(disconnected, nmax, bmax);
    for (auto& [key, v] : conn) {
        Rat value = v;
        if (multi_copy) value *= Rat(factorial(key.second));
        table.connected[key] = value;
    }
    return table;
}

// ---------------------------------------------------------------------------
// ELSV-adjacent series
// ---------------------------------------------------------------------------

namespace {

// dense power series over Q, coefficient vector s[0..order]
using Series = std::vector<Rat>;

Series series_mul(const Series& a, const Series& b) {
    Series c(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < c.size() && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

Series series_log(const Series& a) {
    if (a.empty() || a[0] != 1) throw std::domain_error("series_log: constant term must be 1");
    Series x = a;
    x[0] = 0;
    Series acc(a.size(), Rat(0)), pw = x;
    for (std::size_t k = 1; k < a.size(); ++k) {
        Rat c = rat((k % 2 == 1) ? 1 : -1, static_cast<long>(k));
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * pw[i];
        pw = series_mul(pw, x);
    }
    return acc;
}

Series series_exp(const Series& a) {
    if (a.empty() || a[0] != 0) throw std::domain_error("series_exp: constant term must be 0");
    Series acc(a.size(), Rat(0)), pw(a.size(), Rat(0));
    acc[0] = 1;
    pw[0] = 1;
    Rat kfac = 1;
    for (std::size_t k = 1; k < a.size(); ++k) {
        pw = series_mul(pw, a);
        kfac *= static_cast<long>(k);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += pw[i] / kfac;
    }
    return acc;
}

Series series_div(const Series& num, const Series& den) {
    if (den.empty() || den[0] == 0) throw std::domain_error("series_div: unit denominator required");
    Series q(num.size(), Rat(0));
    for (std::size_t i = 0; i < num.size(); ++i) {
        Rat acc = num[i];
        for (std::size_t j = 1; j <= i; ++j)
            if (j < den.size()) acc -= den[j] * q[i - j];
        q[i] = acc / den[0];
    }
    return q;
}

}  // namespace

std::vector<Rat> elsv_k_coefficients(int L) {
    if (L < 1) throw std::domain_error("elsv_k_coefficients: L >= 1 required");
    Series a(L + 1);
    for (int k = 0; k <= L; ++k) a[k] = Rat(odd_double_factorial(k));
    Series lg = series_log(a);
    std::vector<Rat> out(L);
    for (int l = 1; l <= L; ++l) out[l - 1] = -lg[l];
    return out;
}

QuasiPolyReport quasipolynomiality_check(const ConnectedTable& monotone, int g, int ell,
                                         int degree_bound, int grid_max,
                                         const std::vector<Rat>& correction_in_2d) {
    if (grid_max < degree_bound + 2)
        throw std::domain_error("quasipolynomiality_check: not enough samples for the requested degree");
    QuasiPolyReport report;
    report.degree_bound = degree_bound;

    // ratio on ordered tuples; the aut(mu) factor converts the Z-normalized
    // connected number to the numbered-parts normalization, which is the one
    // polynomial in each variable across the diagonal
    auto ratio = [&](const std::vector<int>& point) -> Rat {
        std::vector<int> sorted = point;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        Partition mu(sorted);
        auto key = monotone.key_for_genus(g, mu);
        if (!key) return 0;
        Rat value = monotone.at(mu, *key);
        Int aut = 1;
        int run = 1;
        for (int i = 1; i <= mu.length(); ++i) {
            if (i < mu.length() && mu.part(i) == mu.part(i - 1))
                ++run;
            else {
                aut *= factorial(run);
                run = 1;
            }
        }
        value *= Rat(aut);
        for (int p : point) value /= Rat(binomial(2 * p, p));
        Rat corr = 0, x = 1;
        long twod = 2 * mu.size();
        for (const Rat& c : correction_in_2d) {
            corr += c * x;
            x *= twod;
        }
        return value * corr;
    };

    std::vector<std::vector<int>> grid;
    std::vector<int> point(ell, 1);
    std::function<void(int)> gen = [&](int i) {
        if (i == ell) {
            grid.push_back(point);
            return;
        }
        for (int v = 1; v <= grid_max; ++v) {
            point[i] = v;
            gen(i + 1);
        }
    };
    gen(0);

    std::map<std::vector<int>, Rat> values;
    for (auto& p : grid) {
        values[p] = ratio(p);
        report.table.emplace_back(p, values[p]);
    }

    // (D+1)-st forward differences in each variable must vanish
    int d1 = degree_bound + 1;
    for (auto& p : grid) {
        for (int axis = 0; axis < ell; ++axis) {
            if (p[axis] + d1 > grid_max) continue;
            Rat diff = 0;
            for (int k = 0; k <= d1; ++k) {
                std::vector<int> q = p;
                q[axis] += k;
                Rat sign = ((d1 - k) % 2 == 0) ? 1 : -1;
                diff += sign * Rat(binomial(d1, k)) * values[q];
            }
            if (diff != 0) {
                report.ok = false;
                if (report.first_failure.empty()) {
                    std::string pt;
                    for (int v : p) pt += std::to_string(v) + ",";
                    report.first_failure = "difference of order " + std::to_string(d1) +
                                           " along axis " + std::to_string(axis) + " at (" + pt +
                                           ") = " + rat_str(diff);
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Operator identities at the eigenvalue level
// ---------------------------------------------------------------------------

bool lascoux_thibon_check(const Partition& lambda, int order) {
    if (order < 1) throw std::domain_error("lascoux_thibon_check: order >= 1 required");
    const int sz = order + 1;

    std::vector<int> contents = reduced_contents(lambda);
    Series lhs(sz, Rat(0));
    Rat kfac = 1;
    for (int k = 1; k <= order; ++k) {
        kfac *= k;
        lhs[k] = Rat(p_eval(contents, k)) / kfac;
    }

    // E0(z)/z and zeta(z)/z, both with unit constant term after the shift.
    Series e0(sz, Rat(0)), zeta(sz, Rat(0));
    Rat rfac = 1;
    for (int r = 1; r <= order + 1; ++r) {
        rfac *= r;
        Rat casimir = 0;
        for (int i = 1; i <= lambda.length(); ++i) {
            Rat a = rat(2 * lambda.part(i - 1) - 2 * i + 1, 2);
            Rat b = rat(-2 * i + 1, 2);
            Rat pa = 1, pb = 1;
            for (int k = 0; k < r; ++k) {
                pa *= a;
                pb *= b;
            }
            casimir += pa - pb;
        }
        e0[r - 1] = casimir / rfac;
        if (r % 2 == 1) {
            // zeta(z) = sum_m z^{2m+1} / (4^m (2m+1)!)
            Int four_m;
            mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>((r - 1) / 2));
            zeta[r - 1] = rat(Int(1), four_m * factorial(r));
        }
    }
    Series rhs = series_div(e0, zeta);
    rhs[0] -= lambda.size();  // subtract the energy eigenvalue E = |lambda|
    for (int k = 0; k <= order; ++k)
        if (lhs[k] != rhs[k]) return false;
    return true;
}

bool newton_eigenvalue_check(const Partition& lambda, int order) {
    std::vector<int> contents = reduced_contents(lambda);
    std::vector<Int> h = h_table(contents, order);
    std::vector<Int> sigma = sigma_table(contents, order);
    for (int k = 0; k <= order; ++k) {
        Int acc = 0;
        for (int i = 0; i <= k; ++i) {
            Int term = h[i] * sigma[k - i];
            acc += ((k - i) % 2 == 0) ? term : -term;
        }
        if (acc != ((k == 0) ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace jucys
