#include "jucys/group_oracle.hpp"

#include <stdexcept>

#include "jucys/errors.hpp"

namespace jucys {

Rat ClassAlgebraElement::at(const Partition& alpha) const {
    auto it = coeff.find(alpha);
    return it == coeff.end() ? Rat(0) : it->second;
}

bool ClassAlgebraElement::is_zero() const {
    for (auto& [k, v] : coeff)
        if (v != 0) return false;
    return true;
}

ClassAlgebraElement ClassAlgebraElement::identity(int n) {
    ClassAlgebraElement e;
    e.n = n;
    e.coeff[Partition(std::vector<int>(n, 1))] = 1;
    return e;
}

ClassAlgebraElement ClassAlgebraElement::class_sum(int n, const Partition& alpha) {
    if (alpha.size() != n) throw std::domain_error("class_sum: |alpha| != n");
    ClassAlgebraElement e;
    e.n = n;
    e.coeff[alpha] = 1;
    return e;
}

static void prune(ClassAlgebraElement& a) {
    for (auto it = a.coeff.begin(); it != a.coeff.end();)
        it = it->second == 0 ? a.coeff.erase(it) : std::next(it);
}

ClassAlgebraElement operator+(const ClassAlgebraElement& a, const ClassAlgebraElement& b) {
    if (a.n != b.n) throw std::domain_error("class algebra: mixed n");
    ClassAlgebraElement c = a;
    for (auto& [k, v] : b.coeff) c.coeff[k] += v;
    prune(c);
    return c;
}

ClassAlgebraElement operator-(const ClassAlgebraElement& a, const ClassAlgebraElement& b) {
    if (a.n != b.n) throw std::domain_error("class algebra: mixed n");
    ClassAlgebraElement c = a;
    for (auto& [k, v] : b.coeff) c.coeff[k] -= v;
    prune(c);
    return c;
}

ClassAlgebraElement operator*(const Rat& s, const ClassAlgebraElement& a) {
    ClassAlgebraElement c;
    c.n = a.n;
    if (s != 0)
        for (auto& [k, v] : a.coeff) c.coeff[k] = s * v;
    return c;
}

bool operator==(const ClassAlgebraElement& a, const ClassAlgebraElement& b) {
    return a.n == b.n && (a - b).coeff.empty();
}

ClassAlgebraElement class_product(const ClassAlgebraElement& a, const ClassAlgebraElement& b) {
    if (a.n != b.n) throw std::domain_error("class_product: mixed n");
    const SymmetricGroup& sg = symmetric_group(a.n, true);
    int k = sg.num_classes();
    std::vector<Rat> out(k, Rat(0));
    for (auto& [pa, va] : a.coeff) {
        int ia = sg.class_index(pa);
        for (auto& [pb, vb] : b.coeff) {
            int ib = sg.class_index(pb);
            Rat w = va * vb;
            for (int g = 0; g < k; ++g) {
                long long c = sg.structure_constant(ia, ib, g);
                if (c != 0) out[g] += w * c;
            }
        }
    }
    ClassAlgebraElement r;
    r.n = a.n;
    for (int g = 0; g < k; ++g)
        if (out[g] != 0) r.coeff[sg.classes()[g]] = out[g];
    return r;
}

namespace {

using Dense = std::vector<long long>;

// out += in * J_y  (right multiplication; y is 0-based here, J_y = sum_{x<y}(x y))
void mul_jucys(const SymmetricGroup& sg, int y, const Dense& in, Dense& out) {
    for (int x = 0; x < y; ++x) {
        const std::vector<int>& tbl = sg.right_transposition(x, y);
        for (std::size_t r = 0; r < in.size(); ++r)
            if (in[r] != 0) out[tbl[r]] += in[r];
    }
}

// Project a dense group-algebra vector to the class basis, insisting that it
// is constant on conjugacy classes.
ClassAlgebraElement project_central(const SymmetricGroup& sg, const Dense& v) {
    int k = sg.num_classes();
    std::vector<long long> val(k, 0);
    std::vector<bool> seen(k, false);
    for (std::size_t r = 0; r < v.size(); ++r) {
        int t = sg.type_of(static_cast<int>(r));
        if (!seen[t]) {
            val[t] = v[r];
            seen[t] = true;
        } else if (val[t] != v[r]) {
            throw std::logic_error("jucys expansion is not central");
        }
    }
    ClassAlgebraElement e;
    e.n = sg.n();
    for (int t = 0; t < k; ++t)
        if (val[t] != 0) e.coeff[sg.classes()[t]] = Rat(static_cast<long>(val[t]));
    return e;
}

}  // namespace

ClassAlgebraElement jucys_symmetric(int n, SymBasis basis, int b, bool force) {
    if (n < 0) throw std::domain_error("jucys_symmetric: n < 0");
    if (b < 0) throw std::domain_error("jucys_symmetric: b < 0");
    const SymmetricGroup& sg = symmetric_group(n, force);
    Dense acc(sg.order(), 0);
    Dense id(sg.order(), 0);
    id[sg.rank(perm_identity(n))] = 1;

    if (basis == SymBasis::P) {
        if (b == 0) {
            // p_0 of n-1 variables
            acc[sg.rank(perm_identity(n))] = std::max(0, n - 1);
        } else {
            for (int y = 1; y < n; ++y) {  // 0-based leg y corresponds to J_{y+1}
                Dense cur = id;
                for (int i = 0; i < b; ++i) {
                    Dense next(sg.order(), 0);
                    mul_jucys(sg, y, cur, next);
                    cur = std::move(next);
                }
                for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += cur[r];
            }
        }
        return project_central(sg, acc);
    }

    // sigma_b / h_b: walk the (strictly / weakly) increasing sequences of
    // larger legs, reusing the partial product along the DFS spine.
    bool strict = (basis == SymBasis::Sigma);
    auto rec = [&](auto&& self, const Dense& cur, int ylow, int depth) -> void {
        if (depth == b) {
            for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += cur[r];
            return;
        }
        for (int y = ylow; y < n; ++y) {
            Dense next(sg.order(), 0);
            mul_jucys(sg, y, cur, next);
            self(self, next, strict ? y + 1 : y, depth + 1);
        }
    };
    rec(rec, id, 1, 0);
    return project_central(sg, acc);
}

namespace {

// Inverse of a central element in the class basis, via the multiplication
// matrix and Gaussian elimination over Q.  Throws pole_error if singular.
ClassAlgebraElement central_inverse(const ClassAlgebraElement& p) {
    const SymmetricGroup& sg = symmetric_group(p.n, true);
    int k = sg.num_classes();
    // M[g][d] = coefficient of C_g in P * C_d
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k, Rat(0)));
    std::vector<Rat> rhs(k, Rat(0));
    rhs[sg.identity_class()] = 1;
    for (auto& [pb, vb] : p.coeff) {
        int ib = sg.class_index(pb);
        for (int d = 0; d < k; ++d)
            for (int g = 0; g < k; ++g) {
                long long c = sg.structure_constant(ib, d, g);
                if (c != 0) m[g][d] += vb * c;
            }
    }
    // Solve M x = rhs.
    for (int col = 0, row = 0; col < k; ++col, ++row) {
        int piv = -1;
        for (int r = row; r < k; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw pole_error("hyper_z block is not invertible (pole)");
        std::swap(m[piv], m[row]);
        std::swap(rhs[piv], rhs[row]);
        Rat inv = Rat(1) / m[row][col];
        for (int c = col; c < k; ++c) m[row][c] *= inv;
        rhs[row] *= inv;
        for (int r = 0; r < k; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int c = col; c < k; ++c) m[r][c] -= f * m[row][c];
            rhs[r] -= f * rhs[row];
        }
    }
    ClassAlgebraElement inv;
    inv.n = p.n;
    for (int g = 0; g < k; ++g)
        if (rhs[g] != 0) inv.coeff[sg.classes()[g]] = rhs[g];
    return inv;
}

ClassAlgebraElement free_single_element(int n, int b) {
    ClassAlgebraElement e;
    e.n = n;
    for (const Partition& alpha : partitions_of(n))
        if (alpha.length() == n - b) e.coeff[alpha] = 1;
    return e;
}

}  // namespace

ClassAlgebraElement block_class_element(const BlockSpec& block, int n, bool force) {
    using F = BlockSpec::Flavor;
    switch (block.flavor) {
        case F::StrictMonotone:
            return jucys_symmetric(n, SymBasis::Sigma, block.b, force);
        case F::Monotone:
            return jucys_symmetric(n, SymBasis::H, block.b, force);
        case F::Atlantes:
            return jucys_symmetric(n, SymBasis::P, block.b, force);
        case F::FreeSingle:
            return free_single_element(n, block.b);
        case F::FreeGroup: {
            if (block.b == 0) return ClassAlgebraElement::identity(n);
            // compositions (a_1,...,a_k) of b with a_i >= 1: every factor is a
            // nontrivial free-single element, weight (-1)^{k+b}
            ClassAlgebraElement total;
            total.n = n;
            std::vector<int> comp;
            auto rec = [&](auto&& self, int rest) -> void {
                if (rest == 0) {
                    ClassAlgebraElement prod = ClassAlgebraElement::identity(n);
                    for (int a : comp) prod = class_product(prod, free_single_element(n, a));
                    Rat sign = (comp.size() + block.b) % 2 == 0 ? 1 : -1;
                    total = total + sign * prod;
                    return;
                }
                for (int a = 1; a <= rest; ++a) {
                    comp.push_back(a);
                    self(self, rest - a);
                    comp.pop_back();
                }
            };
            rec(rec, block.b);
            return total;
        }
        case F::ClassSum:
            return ClassAlgebraElement::class_sum(n, block.alpha);
        case F::CompletedCycle: {
            if (block.b == 1) return Rat(n) * ClassAlgebraElement::identity(n);
            if (block.b == 2) {
                std::vector<int> parts{2};
                for (int i = 0; i < n - 2; ++i) parts.push_back(1);
                return ClassAlgebraElement::class_sum(n, Partition(std::move(parts)));
            }
            throw std::domain_error("group oracle supports completed cycles only for r <= 2");
        }
        case F::HyperW: {
            ClassAlgebraElement total;
            total.n = n;
            Rat wp = 1;
            for (int b = 0; b <= std::max(0, n - 1); ++b) {
                total = total + wp * jucys_symmetric(n, SymBasis::Sigma, b, force);
                wp *= block.param;
            }
            return total;
        }
        case F::HyperZ: {
            // prod_k (1 - z J_k) = sum_b (-z)^b sigma_b(J); invert it centrally.
            ClassAlgebraElement p;
            p.n = n;
            Rat zp = 1;
            for (int b = 0; b <= std::max(0, n - 1); ++b) {
                p = p + zp * jucys_symmetric(n, SymBasis::Sigma, b, force);
                zp *= -block.param;
            }
            return central_inverse(p);
        }
    }
    throw std::logic_error("unreachable");
}

Rat brute_hurwitz(const Partition& mu, const Partition& nu, const std::vector<BlockSpec>& blocks,
                  AutomorphismMode mode, bool force) {
    if (mu.size() != nu.size()) throw std::domain_error("brute_hurwitz: |mu| != |nu|");
    const int n = mu.size();
    symmetric_group(n, force);  // trips the resource guard early

    ClassAlgebraElement acc = class_product(ClassAlgebraElement::class_sum(n, mu),
                                            ClassAlgebraElement::class_sum(n, nu));
    for (const BlockSpec& block : blocks) acc = class_product(acc, block_class_element(block, n, force));

    Rat h = acc.at(Partition(std::vector<int>(n, 1))) / Rat(factorial(n));
    if (mode == AutomorphismMode::PointwiseFibers)
        h *= Rat(centralizer_size(mu) * centralizer_size(nu)) /
             (product_of_parts(mu) * product_of_parts(nu));
    return h;
}

}  // namespace jucys
