#include "jucys/waves.hpp"

namespace jucys {

namespace {

RatFunc one_minus_lh(long l) {  // 1 - l hbar
    return RatFunc(PolyQ({Rat(1), Rat(-l)}), PolyQ::constant(1));
}

RatFunc hbar_rf() { return RatFunc::hbar(); }

}  // namespace

XSeries<RatFunc> wave_monotone(const std::vector<Rat>& ttilde, int N) {
    std::vector<RatFunc> scaled;
    for (const Rat& t : ttilde) scaled.push_back(RatFunc(t) / hbar_rf());
    XSeries<RatFunc> psi = exp_principal(scaled, N);
    RatFunc weight(Rat(1));
    for (int j = 1; j <= N; ++j) {
        weight = weight / one_minus_lh(j - 1);  // appends the l = j-1 factor
        auto it = psi.c.find(j);
        if (it != psi.c.end()) {
            it->second = it->second * weight;
            if (it->second.is_zero()) psi.c.erase(it);
        }
    }
    return psi;
}

XSeries<RatFunc> wave_monotone_orbifold(int r, int N) {
    std::vector<Rat> ttilde(r, Rat(0));
    ttilde[r - 1] = rat(1, r);
    return wave_monotone(ttilde, N);
}

XSeries<HSeries> wave_strict_monotone(int r, int N) {
    XSeries<HSeries> psi;
    psi.trust_lo = -N;
    Int nfac = 1, rn = 1;
    for (int n = 0; r * n <= N; ++n) {
        if (n > 0) {
            nfac *= n;
            rn *= r;
        }
        HSeries prod(rat(Int(1), nfac * rn));
        for (int j = 1; j <= r * n - 1; ++j) prod *= HSeries(Rat(1)) + HSeries::monomial(Rat(j), 1);
        psi.set(-r * n, HSeries::monomial(Rat(1), -n) * prod);
    }
    return psi;
}

XSeries<HSeries> wave_atlantes(int r, int N, int M) {
    XSeries<HSeries> psi;
    psi.trust_hi = N;
    Rat nfac = 1;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) nfac *= n;
        Int power_sum = 0;
        for (int j = 1; j <= n - 1; ++j) {
            Int jr = j;
            mpz_pow_ui(jr.get_mpz_t(), jr.get_mpz_t(), static_cast<unsigned long>(r));
            power_sum += jr;
        }
        HSeries expo = hseries_exp(HSeries::monomial(Rat(power_sum), r, M));
        psi.set(n, HSeries::monomial(Rat(1) / nfac, -n) * expo);
    }
    return psi;
}

XSeries<QLaurent> wave_double_hurwitz(const std::vector<Rat>& ttilde, int N) {
    std::vector<QLaurent> scaled;
    for (const Rat& t : ttilde) scaled.push_back(QLaurent::monomial(t, 0, -1));
    XSeries<QLaurent> psi = exp_principal(scaled, N);
    for (auto& [m, v] : psi.c) v *= QLaurent::qpow(static_cast<long>(m) * (m - 1) / 2);
    return psi;
}

XSeries<QLaurent> wave_deformation(const Rat& c, int N) {
    std::vector<Rat> ttilde(N, Rat(0));
    Rat ck = 1;
    for (int k = 1; k <= N; ++k) {
        ttilde[k - 1] = ck;
        ck *= c;
    }
    return wave_double_hurwitz(ttilde, N);
}

XSeries<QLaurent> wave_simple_hurwitz(int N) {
    std::vector<Rat> ttilde{Rat(1)};
    return wave_double_hurwitz(ttilde, N);
}

OperatorExpr<RatFunc> op_monotone_general(const std::vector<Rat>& ttilde) {
    OperatorExpr<RatFunc> op;
    op.name = "A_mm";
    for (std::size_t i = 0; i < ttilde.size(); ++i) {
        if (ttilde[i] == 0) continue;
        int k = static_cast<int>(i + 1);
        OpTerm<RatFunc> t;
        t.coeff = RatFunc(Rat(k) * ttilde[i]);
        t.prims = {Prim<RatFunc>::mulx(k),
                   Prim<RatFunc>::diag(
                       [k](long m) {
                           RatFunc f(Rat(1));
                           for (int j = 0; j < k; ++j) f = f / RatFunc(PolyQ({Rat(1), Rat(-(m + j))}), PolyQ::constant(1));
                           return f;
                       },
                       "prod_{j<" + std::to_string(k) + "} (1-h(D+j))^{-1}")};
        op.terms.push_back(std::move(t));
    }
    OpTerm<RatFunc> euler;
    euler.coeff = -RatFunc::hbar();
    euler.prims = {Prim<RatFunc>::euler()};
    op.terms.push_back(std::move(euler));
    return op;
}

OperatorExpr<RatFunc> op_monotone_polynomial(const std::vector<Rat>& ttilde) {
    int l = 0;
    for (std::size_t i = 0; i < ttilde.size(); ++i)
        if (ttilde[i] != 0) l = static_cast<int>(i + 1);
    OperatorExpr<RatFunc> op;
    op.name = "Atilde_mm";
    auto down_product = [](long m, int count) {  // prod_{j=1}^{count} (1 - hbar(m - j))
        RatFunc f(Rat(1));
        for (int j = 1; j <= count; ++j) f = f * RatFunc(PolyQ({Rat(1), Rat(-(m - j))}), PolyQ::constant(1));
        return f;
    };
    for (int k = 1; k <= l; ++k) {
        if (ttilde[k - 1] == 0) continue;
        OpTerm<RatFunc> t;
        t.coeff = RatFunc(Rat(k) * ttilde[k - 1]);
        int count = l - k;
        t.prims = {Prim<RatFunc>::mulx(k), Prim<RatFunc>::diag([count, down_product](long m) { return down_product(m, count); },
                                                               "prod_{j<=l-k} (1-h(D-j))")};
        op.terms.push_back(std::move(t));
    }
    OpTerm<RatFunc> e;
    e.coeff = -RatFunc::hbar();
    e.prims = {Prim<RatFunc>::euler(),
               Prim<RatFunc>::diag([l, down_product](long m) { return down_product(m, l); },
                                   "prod_{j<=l} (1-h(D-j))")};
    op.terms.push_back(std::move(e));
    return op;
}

OperatorExpr<RatFunc> op_monotone_orbifold(int r) {
    OperatorExpr<RatFunc> op;
    op.name = "monotone_orbifold_r" + std::to_string(r);
    OpTerm<RatFunc> xr;
    xr.coeff = RatFunc(Rat(1));
    xr.prims = {Prim<RatFunc>::mulx(r)};
    op.terms.push_back(std::move(xr));
    // x . prod_{j=1}^{r} (1 + x y + hbar(j-1)) . y  with  y = -hbar d/dx and
    // 1 + x y + hbar(j-1) acting diagonally as 1 - hbar(D - (j-1))
    OpTerm<RatFunc> t;
    t.coeff = -RatFunc::hbar();
    t.prims = {Prim<RatFunc>::mulx(1),
               Prim<RatFunc>::diag(
                   [r](long m) {
                       RatFunc f(Rat(1));
                       for (int j = 1; j <= r; ++j)
                           f = f * RatFunc(PolyQ({Rat(1), Rat(-(m - j + 1))}), PolyQ::constant(1));
                       return f;
                   },
                   "prod_{j=1}^{r} (1+xy+h(j-1))"),
               Prim<RatFunc>::diff()};
    op.terms.push_back(std::move(t));
    return op;
}

OperatorExpr<HSeries> op_strict_monotone(int r) {
    // base = -hbar d/dx + x^{-1}
    OperatorExpr<HSeries> base;
    base.name = "(-h d/dx + 1/x)";
    OpTerm<HSeries> d;
    d.coeff = -HSeries::hbar();
    d.prims = {Prim<HSeries>::diff()};
    base.terms.push_back(std::move(d));
    OpTerm<HSeries> xinv;
    xinv.coeff = HSeries(Rat(1));
    xinv.prims = {Prim<HSeries>::mulx(-1)};
    base.terms.push_back(std::move(xinv));

    OperatorExpr<HSeries> power = base;
    for (int i = 1; i < r; ++i) power = op_compose(power, base);

    OpTerm<HSeries> euler;
    euler.coeff = HSeries::hbar();
    euler.prims = {Prim<HSeries>::euler()};
    power.terms.push_back(std::move(euler));
    power.name = "strict_monotone_r" + std::to_string(r);
    return power;
}

OperatorExpr<HSeries> op_atlantes(int r, int M) {
    OperatorExpr<HSeries> op;
    op.name = "atlantes_r" + std::to_string(r);
    OpTerm<HSeries> y;
    y.coeff = HSeries::hbar();
    y.prims = {Prim<HSeries>::euler()};
    op.terms.push_back(std::move(y));
    OpTerm<HSeries> t;
    t.coeff = HSeries(Rat(-1));
    t.prims = {Prim<HSeries>::mulx(1), Prim<HSeries>::diag(
                                           [r, M](long m) {
                                               Int mr = m;
                                               mpz_pow_ui(mr.get_mpz_t(), mr.get_mpz_t(),
                                                          static_cast<unsigned long>(r));
                                               return hseries_exp(HSeries::monomial(Rat(mr), r, M));
                                           },
                                           "e^{(hD)^r}")};
    op.terms.push_back(std::move(t));
    return op;
}

OperatorExpr<QLaurent> op_double_hurwitz(const std::vector<Rat>& ttilde) {
    OperatorExpr<QLaurent> op;
    op.name = "A_HH";
    for (std::size_t i = 0; i < ttilde.size(); ++i) {
        if (ttilde[i] == 0) continue;
        int k = static_cast<int>(i + 1);
        OpTerm<QLaurent> t;
        t.coeff = QLaurent::monomial(Rat(k) * ttilde[i], static_cast<long>(k) * (k - 1) / 2, 0);
        t.prims = {Prim<QLaurent>::mulx(k),
                   Prim<QLaurent>::diag([k](long m) { return QLaurent::qpow(k * m); },
                                        "e^{" + std::to_string(k) + " h D}")};
        op.terms.push_back(std::move(t));
    }
    OpTerm<QLaurent> e;
    e.coeff = -QLaurent::hpow(1);
    e.prims = {Prim<QLaurent>::euler()};
    op.terms.push_back(std::move(e));
    return op;
}

OperatorExpr<QLaurent> op_deformation(const Rat& c) {
    OperatorExpr<QLaurent> op;
    op.name = "deformation";
    auto qshift = [](long mult) {
        return Prim<QLaurent>::diag([mult](long m) { return QLaurent::qpow(mult * m); },
                                    "e^{" + std::to_string(mult) + " h D}");
    };
    auto euler_y = Prim<QLaurent>::euler();

    OpTerm<QLaurent> one;
    one.coeff = QLaurent(Rat(1));
    op.terms.push_back(std::move(one));

    // - e^{-y} x^{-1} y
    OpTerm<QLaurent> t1;
    t1.coeff = -QLaurent::hpow(1);
    t1.prims = {qshift(-1), Prim<QLaurent>::mulx(-1), euler_y};
    op.terms.push_back(std::move(t1));

    // + 2c y
    if (c != 0) {
        OpTerm<QLaurent> t2;
        t2.coeff = QLaurent::monomial(2 * c, 0, 1);
        t2.prims = {euler_y};
        op.terms.push_back(std::move(t2));

        // - c^2 x e^{y} y
        OpTerm<QLaurent> t3;
        t3.coeff = QLaurent::monomial(-c * c, 0, 1);
        t3.prims = {Prim<QLaurent>::mulx(1), qshift(1), euler_y};
        op.terms.push_back(std::move(t3));
    }
    return op;
}

OperatorExpr<QLaurent> op_simple_hurwitz() {
    OperatorExpr<QLaurent> op;
    op.name = "simple_hurwitz";
    OpTerm<QLaurent> t1;
    t1.coeff = QLaurent::hpow(1);
    t1.prims = {Prim<QLaurent>::diag([](long m) { return QLaurent::qpow(-m); }, "e^{-hD}"),
                Prim<QLaurent>::mulx(-1), Prim<QLaurent>::euler()};
    op.terms.push_back(std::move(t1));
    OpTerm<QLaurent> t2;
    t2.coeff = QLaurent(Rat(-1));
    op.terms.push_back(std::move(t2));
    return op;
}

RatFunc monotone_wave_coefficient_via_schur(const std::vector<Rat>& ttilde, int n) {
    // s_{(n)}(ttilde/hbar) = sum_{mu |- n} chi_{(n)}(mu) p_mu(ttilde) / (Z_mu hbar^{l(mu)})
    RatFunc s(Rat(0));
    Partition row = n == 0 ? Partition() : Partition(std::vector<int>{n});
    for (const Partition& mu : partitions_of(n)) {
        Rat pmu = 1;
        bool dead = false;
        for (int part : mu.parts()) {
            if (part > static_cast<int>(ttilde.size()) || ttilde[part - 1] == 0) {
                dead = true;
                break;
            }
            pmu *= Rat(part) * ttilde[part - 1];
        }
        if (dead) continue;
        Rat coeff = Rat(character(row, mu)) * pmu / Rat(centralizer_size(mu));
        PolyQ hbar_lmu({Rat(1)});
        for (int i = 0; i < mu.length(); ++i) hbar_lmu = hbar_lmu * PolyQ({Rat(0), Rat(1)});
        s += RatFunc(PolyQ::constant(coeff), hbar_lmu);
    }
    RatFunc weight(Rat(1));
    for (int c : content_multiset(row))
        weight = weight / RatFunc(PolyQ({Rat(1), Rat(-c)}), PolyQ::constant(1));
    return s * weight;
}

}  // namespace jucys
