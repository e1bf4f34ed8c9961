#include "jucys/boson.hpp"

#include <functional>

#include "jucys/characters.hpp"
#include "jucys/errors.hpp"

namespace jucys {

BosonOp<Rat> build_L(int m, int N) {
    BosonOp<Rat> op;
    for (int a = -N; a <= N; ++a) {
        if (a == 0) continue;
        int b = m - a;
        if (b == 0 || b < -N || b > N) continue;
        op.add({a, b}, rat(1, 2));
    }
    return op;
}

BosonOp<Rat> build_M(int m, int N) {
    BosonOp<Rat> op;
    for (int a = -N; a <= N; ++a) {
        if (a == 0) continue;
        for (int b = -N; b <= N; ++b) {
            if (b == 0) continue;
            int c = m - a - b;
            if (c == 0 || c < -N || c > N) continue;
            op.add({a, b, c}, rat(1, 3));
        }
    }
    return op;
}

namespace {

// Ordered tuples of derivative orders appearing in (J(x) + d/dx)^m J(x),
// with integer multiplicities.  Starting from [0] (a bare current), each step
// either prepends a fresh current or differentiates one factor.
std::map<std::vector<int>, long long> current_words(int m) {
    std::map<std::vector<int>, long long> words;
    words[{0}] = 1;
    for (int step = 0; step < m; ++step) {
        std::map<std::vector<int>, long long> next;
        for (auto& [w, c] : words) {
            std::vector<int> grown;
            grown.reserve(w.size() + 1);
            grown.push_back(0);
            grown.insert(grown.end(), w.begin(), w.end());
            next[grown] += c;
            for (std::size_t i = 0; i < w.size(); ++i) {
                std::vector<int> d = w;
                d[i]++;
                next[d] += c;
            }
        }
        words = std::move(next);
    }
    return words;
}

// prod_{i=1}^{d} (-j - i)
Rat falling_weight(int j, int d) {
    Rat w = 1;
    for (int i = 1; i <= d; ++i) w *= Rat(-j - i);
    return w;
}

}  // namespace

BosonOp<Rat> build_Y(int n, const std::vector<Rat>& p_coeffs, int N) {
    if (n < 0) throw std::domain_error("build_Y: shift must be >= 0");
    std::vector<Rat> p = p_coeffs;
    while (!p.empty() && p.back() == 0) p.pop_back();
    int deg = static_cast<int>(p.size()) - 1;
    if (deg > 3) throw std::domain_error("build_Y: degree of P must be <= 3");

    // expand x^{-n} P(D) = sum_m c_m (x^2 d/dx)^m x^{-n-m},
    // with (x^2 d/dx)^m x^{-n-m} = x^{-n} prod_{j=1}^{m} (D-n-j)
    std::vector<Rat> rem = p;
    std::vector<Rat> cm(deg + 1, Rat(0));
    for (int m = deg; m >= 0; --m) {
        if (static_cast<int>(rem.size()) <= m) continue;
        Rat c = rem.size() > static_cast<std::size_t>(m) ? rem[m] : Rat(0);
        cm[m] = c;
        if (c == 0) continue;
        // subtract c * prod_{j=1}^{m}(D-n-j) from rem
        std::vector<Rat> q{Rat(1)};
        for (int j = 1; j <= m; ++j) {
            std::vector<Rat> nq(q.size() + 1, Rat(0));
            for (std::size_t i = 0; i < q.size(); ++i) {
                nq[i + 1] += q[i];
                nq[i] -= Rat(n + j) * q[i];
            }
            q = std::move(nq);
        }
        for (std::size_t i = 0; i < q.size(); ++i) rem[i] -= c * q[i];
    }

    BosonOp<Rat> op;
    for (int m = 0; m <= deg; ++m) {
        if (cm[m] == 0) continue;
        int k = -n - m;
        Rat norm = cm[m] / Rat(m + 1);
        for (auto& [word, mult] : current_words(m)) {
            int s = static_cast<int>(word.size());
            int dsum = 0;
            for (int d : word) dsum += d;
            int target = 1 - k - s - dsum;  // required mode sum
            // ordered mode tuples (j_1..j_s), j_u != 0, |j_u| <= N
            std::vector<int> modes(s);
            std::function<void(int, int)> rec = [&](int pos, int remaining) {
                if (pos == s - 1) {
                    int j = remaining;
                    if (j == 0 || j < -N || j > N) return;
                    modes[pos] = j;
                    Rat w = norm * Rat(mult);
                    for (int u = 0; u < s; ++u) w *= falling_weight(modes[u], word[u]);
                    op.add(modes, w);
                    return;
                }
                for (int j = -N; j <= N; ++j) {
                    if (j == 0) continue;
                    modes[pos] = j;
                    rec(pos + 1, remaining - j);
                }
            };
            rec(0, target);
        }
    }
    return op;
}

BosonOp<Rat> build_R(int n, const Rat& beta, int N) {
    if (n < 1 || n > 3) throw std::domain_error("build_R: n must be 1, 2 or 3");
    BosonOp<Rat> op;
    // subsets i_1 < ... < i_k of {1..n}
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Rat> poly{Rat(1)};
        int k = 0;
        for (int i = 1; i <= n; ++i) {
            if (!(mask & (1 << (i - 1)))) continue;
            ++k;
            std::vector<Rat> np(poly.size() + 1, Rat(0));
            for (std::size_t d = 0; d < poly.size(); ++d) {
                np[d + 1] += poly[d];
                np[d] -= Rat(i) * poly[d];
            }
            poly = std::move(np);
        }
        Rat sign = 1;
        for (int i = 0; i < k; ++i) sign *= -beta;
        op = op + build_Y(n, poly, N).scaled(sign);
    }
    return op;
}

TauMM build_tau_mm(int N, const Rat& beta, std::vector<Rat> ttilde) {
    ttilde.resize(N, Rat(0));
    TauMM tau;
    tau.N = N;
    tau.beta = beta;
    tau.ttilde = ttilde;
    tau.series = MSeries<Rat>(N, N);
    for (int n = 0; n <= N; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            Rat weight = 1;
            for (int c : content_multiset(lambda)) {
                Rat f = Rat(1) - beta * c;
                if (f == 0)
                    throw pole_error("tau_mm pole: 1 - beta * content = 0 at content " +
                                     std::to_string(c));
                weight /= f;
            }
            PPoly sp = schur_in_p(lambda);
            // s_lambda(ttilde) with p_k = k ttilde_k
            Rat sval = 0;
            for (auto& [mu, c] : sp) {
                Rat pm = c;
                for (int part : mu.parts()) pm *= Rat(part) * ttilde[part - 1];
                sval += pm;
            }
            if (sval == 0) continue;
            MSeries<Rat> st = ppoly_to_tseries<Rat>(sp, N, N);
            tau.series = tau.series + st.scaled(sval * weight);
        }
    }
    return tau;
}

namespace {

ConstraintReport compare_to_zero(const MSeries<Rat>& diff, int degree) {
    ConstraintReport rep;
    rep.checked_degree = degree;
    for (auto& [m, v] : diff.terms()) {
        if (weighted_degree(m) > degree || v == 0) continue;
        rep.ok = false;
        if (rep.first_failure.empty()) {
            std::string mono;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) mono += "t" + std::to_string(i + 1) + "^" + std::to_string(m[i]) + " ";
            rep.first_failure = "coefficient of " + mono + "= " + rat_str(v);
        }
    }
    return rep;
}

}  // namespace

ConstraintReport verify_constraints(const TauMM& tau, int n) {
    BosonOp<Rat> rn = build_R(n, tau.beta, tau.N);
    MSeries<Rat> lhs = boson_apply(rn, tau.series);
    MSeries<Rat> rhs = tau.series.scaled(Rat(n) * tau.ttilde[n - 1]);
    return compare_to_zero(lhs - rhs, tau.N - n);
}

ConstraintReport verify_cut_and_join(int N, const Rat& hbar) {
    if (hbar == 0) throw std::domain_error("verify_cut_and_join: hbar must be nonzero");
    std::vector<Rat> ttilde(N, Rat(0));
    ttilde[0] = Rat(1) / hbar;
    TauMM tau = build_tau_mm(N, hbar, ttilde);
    BosonOp<Rat> op = build_M(0, N).scaled(hbar * hbar) - build_L(0, N).scaled(hbar);
    op.add({-1}, Rat(1));  // + t_1 (J_{-1} = 1 * t_1)
    return compare_to_zero(boson_apply(op, tau.series), N);
}

int constraint_solution_dimension(const Rat& beta, const std::vector<Rat>& ttilde) {
    const int N = 3;
    std::vector<Rat> tt = ttilde;
    tt.resize(N, Rat(0));

    // unknowns: all monomials of weighted degree <= 3 (including the constant)
    std::vector<Mono> basis;
    std::function<void(Mono&, int)> gen = [&](Mono& m, int var) {
        if (var == N) {
            basis.push_back(m);
            return;
        }
        for (int e = 0; weighted_degree(m) + (var + 1) * e <= N; ++e) {
            m[var] = e;
            gen(m, var + 1);
            m[var] = 0;
        }
    };
    Mono seed(N, 0);
    gen(seed, 0);

    // rows: coefficients of (R_n - n ttilde_n) e_basis for n = 1, 2 at output
    // degrees <= 3 - n
    std::vector<std::vector<Rat>> rows;
    std::map<Mono, int> row_index;
    auto row_of = [&](int n, const Mono& out) {
        (void)n;
        auto [it, fresh] = row_index.emplace(out, static_cast<int>(rows.size()));
        if (fresh) rows.emplace_back(basis.size(), Rat(0));
        return it->second;
    };
    for (int n = 1; n <= 2; ++n) {
        BosonOp<Rat> rn = build_R(n, beta, N);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            MSeries<Rat> e(N, N);
            e.add_term(basis[j], Rat(1));
            MSeries<Rat> img = boson_apply(rn, e) - e.scaled(Rat(n) * tt[n - 1]);
            for (auto& [m, v] : img.terms()) {
                if (weighted_degree(m) > N - n || v == 0) continue;
                Mono key = m;
                key.push_back(n);  // separate the R_1 and R_2 equation blocks
                rows[row_of(n, key)][j] += v;
            }
        }
    }

    // rank by Gaussian elimination
    int rank = 0;
    std::size_t ncols = basis.size();
    for (std::size_t col = 0; col < ncols; ++col) {
        int piv = -1;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                piv = static_cast<int>(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        Rat inv = Rat(1) / rows[rank][col];
        for (auto& v : rows[rank]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
            Rat f = rows[r][col];
            for (std::size_t c2 = 0; c2 < ncols; ++c2) rows[r][c2] -= f * rows[rank][c2];
        }
        ++rank;
    }
    return static_cast<int>(ncols) - rank;
}

}  // namespace jucys
