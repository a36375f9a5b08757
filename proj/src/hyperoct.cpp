#include "weylchar/hyperoct.hpp"

#include <algorithm>

#include "weylchar/errors.hpp"

namespace weylchar {

DoublePartition IrreducibleLabel::full_at(int n) const {
    auto padded = pad(lambda, n - nu.size());
    if (!padded)
        throw PaddingFails("label " + to_string() + " undefined at n=" + std::to_string(n));
    return {*padded, nu};
}

IrreducibleLabel IrreducibleLabel::from_full(const DoublePartition& t) {
    return {t.plus.drop_first(), t.minus};
}

bool IrreducibleLabel::operator<(const IrreducibleLabel& o) const {
    if (!(lambda == o.lambda)) return lambda < o.lambda;
    return nu < o.nu;
}

const CharacterPolynomial& char_poly_positive(const Partition& lambda) {
    static std::map<Partition, CharacterPolynomial> cache;
    auto it = cache.find(lambda);
    if (it == cache.end())
        it = cache.emplace(lambda, sym_char_poly(lambda).inflate_sym()).first;
    return it->second;
}

Rat sign_twisted_value(const Partition& lambda, int n, const DoublePartition& c) {
    if (!pad(lambda, n).has_value())
        throw PaddingFails("pad(" + format_partition(lambda) + ", " + std::to_string(n) +
                           ") does not exist");
    Rat v = char_poly_positive(lambda).evaluate(c);
    return c.minus.length() % 2 == 0 ? v : -v;
}

ClassFunction induced_character(const ClassFunction& chi_u, const ClassFunction& chi_uprime) {
    if (chi_u.family() != chi_uprime.family())
        throw GroupMismatch("induced factors must share a family");
    Family f = chi_u.family();
    if (f == Family::D) throw GroupMismatch("induced_character operates in family A or BC");
    const int m = chi_u.n();
    const int n = m + chi_uprime.n();

    const GroupClasses& gm = group_classes(f, m);
    std::vector<CharacterPolynomial> binoms(gm.num_classes());
    for (int i = 0; i < gm.num_classes(); ++i) binoms[i] = gen_binom(gm.classes[i].type);

    ClassFunction out(f, n);
    const GroupClasses& gn = group_classes(f, n);
    for (int ci = 0; ci < gn.num_classes(); ++ci) {
        const DoublePartition& whole = gn.classes[ci].type;
        Rat total = 0;
        for (int i = 0; i < gm.num_classes(); ++i) {
            if (chi_u.value(i) == 0) continue;
            Rat ways = binoms[i].evaluate(whole);
            if (ways == 0) continue;
            const DoublePartition& part = gm.classes[i].type;
            auto delta = whole.plus.minus(part.plus);
            auto gamma = whole.minus.minus(part.minus);
            total += chi_u.value(i) * chi_uprime.at({*delta, *gamma}) * ways;
        }
        out.value(ci) = total;
    }
    return out;
}

namespace {

// Integer product over r of C(n_r(alpha)+n_r(beta), n_r(rho)); vanishes
// unless rho fits inside the 1-cycle ... r-cycle counts of (alpha,beta).
long count_binom_product(const DoublePartition& ab, const Partition& rho) {
    long prod = 1;
    for (int r = 1; r <= rho.first_part() && prod != 0; ++r)
        prod *= binomial_ll(ab.plus.multiplicity(r) + ab.minus.multiplicity(r),
                            rho.multiplicity(r));
    return prod;
}

}  // namespace

const CharacterPolynomial& irr_char_poly(const IrreducibleLabel& label) {
    static std::map<IrreducibleLabel, CharacterPolynomial> cache;
    auto it = cache.find(label);
    if (it != cache.end()) return it->second;

    const Partition& lambda = label.lambda;
    const Partition& nu = label.nu;
    const int m = nu.size();
    const Partition mu = nu.drop_first();
    if (!(pad(mu, m).has_value() && *pad(mu, m) == nu))
        throw std::logic_error("unpadding convention violated for nu=" + format_partition(nu));

    CharacterPolynomial result;
    for (const auto& ab : double_partitions_of(m)) {
        // scalar factor from the sign-twisted V(0, nu) character at (alpha,beta)
        Rat s1 = 0;
        for (int k = 0; k <= mu.size(); ++k) {
            for (const auto& rho : partitions_of(k)) {
                long ways = count_binom_product(ab, rho);
                if (ways == 0) continue;
                for (const auto& sigma : partitions_of(mu.size() - k)) {
                    long chi = mn_character(mu, rho.union_with(sigma));
                    if (chi == 0) continue;
                    Rat c = make_rat(chi, z_factor(sigma));
                    if (sigma.length() % 2 != 0) c = -c;
                    s1 += c * ways;
                }
            }
        }
        if (ab.minus.length() % 2 != 0) s1 = -s1;
        if (s1 == 0) continue;

        // polynomial factor: P^(lambda,0) evaluated at the complementary type,
        // i.e. with X_r + Y_r shifted down by n_r(alpha) + n_r(beta)
        CharacterPolynomial p2;
        for (int k = 0; k <= lambda.size(); ++k) {
            for (const auto& xi : partitions_of(k)) {
                CharacterPolynomial shifted(1);
                for (int r = 1; r <= xi.first_part(); ++r) {
                    if (int mult = xi.multiplicity(r)) {
                        int drop = ab.plus.multiplicity(r) + ab.minus.multiplicity(r);
                        CharacterPolynomial arg = CharacterPolynomial::X(r) +
                                                  CharacterPolynomial::Y(r) -
                                                  CharacterPolynomial(drop);
                        shifted = shifted * CharacterPolynomial::binom(arg, mult);
                    }
                }
                Rat coeff = 0;
                for (const auto& eta : partitions_of(lambda.size() - k)) {
                    long chi = mn_character(lambda, xi.union_with(eta));
                    if (chi == 0) continue;
                    Rat c = make_rat(chi, z_factor(eta));
                    if (eta.length() % 2 != 0) c = -c;
                    coeff += c;
                }
                if (coeff != 0) p2 += shifted.scaled(coeff);
            }
        }

        result += (gen_binom(ab) * p2).scaled(s1);
    }
    return cache.emplace(label, std::move(result)).first->second;
}

ClassFunction irr_character(Family f, const IrreducibleLabel& label, int n) {
    if (f == Family::A) {
        DoublePartition full = label.full_at(n);
        ClassFunction cf(Family::A, n);
        const GroupClasses& g = group_classes(Family::A, n);
        for (int i = 0; i < g.num_classes(); ++i)
            cf.value(i) = mn_character(full.plus, g.classes[i].type.plus);
        return cf;
    }
    if (f == Family::D) return restrict_to_dn(irr_character(Family::BC, label, n));
    label.full_at(n);  // validity check
    return class_function_of(irr_char_poly(label), Family::BC, n);
}

CharacterPolynomial m_module_char_poly(const ClassFunction& chi_u) {
    if (chi_u.family() == Family::D)
        throw GroupMismatch("m_module_char_poly operates in family A or BC");
    CharacterPolynomial p;
    const GroupClasses& g = chi_u.group();
    for (int i = 0; i < g.num_classes(); ++i)
        if (chi_u.value(i) != 0) p += gen_binom(g.classes[i].type).scaled(chi_u.value(i));
    return p;
}

FreeModuleChar free_module_char_poly(int m, Family f) {
    FreeModuleChar out;
    long scale = factorial(m);
    if (f != Family::A) scale <<= m;
    out.poly =
        CharacterPolynomial::binom(CharacterPolynomial::X(1), m).scaled(Rat(scale));
    if (f == Family::D) out.d_identity_value_at_m = Rat(m == 0 ? 1 : factorial(m) << (m - 1));
    return out;
}

std::map<int, long> tensor_decompose_free(int m, int p, Family f) {
    if (f == Family::D) throw GroupMismatch("tensor decomposition covers families A and BC");
    std::map<int, long> out;
    for (int d = 0; d <= std::min(m, p); ++d) {
        // (2^d) m! p! / (d! (m-d)! (p-d)!)
        long mult = binomial_ll(m, d) * factorial(d) * binomial_ll(p, d);
        if (f == Family::BC) mult <<= d;
        out[m + p - d] += mult;
    }
    return out;
}

Rat inner_product(const ClassFunction& phi, const ClassFunction& psi) {
    if (phi.family() != psi.family() || phi.n() != psi.n())
        throw GroupMismatch("inner product needs class functions on the same group");
    const GroupClasses& g = phi.group();
    Rat total = 0;
    for (int i = 0; i < g.num_classes(); ++i)
        total += Rat(g.classes[i].size) * phi.value(i) * psi.value(i);
    return total / Rat(g.order);
}

int irr_table_cap() { return 10; }

Decomposition decompose_into_irreducibles(const ClassFunction& phi) {
    const int n = phi.n();
    if (n > irr_table_cap())
        throw CapExceeded("irreducible table cap " + std::to_string(irr_table_cap()) +
                          " exceeded at n=" + std::to_string(n));
    if (phi.family() == Family::D)
        throw GroupMismatch("decompose_into_irreducibles operates in family A or BC");
    Decomposition out;
    if (phi.family() == Family::A) {
        for (const auto& lam : partitions_of(n)) {
            IrreducibleLabel label = IrreducibleLabel::from_full({lam, Partition{}});
            Rat mult = inner_product(phi, irr_character(Family::A, label, n));
            if (!is_integer(mult))
                throw NonIntegralMultiplicity("multiplicity of " + label.to_string() +
                                              " is " + rat_to_string(mult));
            long v = to_int64(mult);
            if (v != 0) out.multiplicities[label] = v;
            if (v < 0) out.is_true_character = false;
        }
        return out;
    }
    for (const auto& t : double_partitions_of(n)) {
        IrreducibleLabel label = IrreducibleLabel::from_full(t);
        Rat mult = inner_product(phi, irr_character(Family::BC, label, n));
        if (!is_integer(mult))
            throw NonIntegralMultiplicity("multiplicity of " + label.to_string() + " is " +
                                          rat_to_string(mult));
        long v = to_int64(mult);
        if (v != 0) out.multiplicities[label] = v;
        if (v < 0) out.is_true_character = false;
    }
    return out;
}

ClassFunction restrict_to_dn(const ClassFunction& phi) {
    if (phi.family() != Family::BC)
        throw GroupMismatch("restrict_to_dn expects a B_n class function");
    const int n = phi.n();
    ClassFunction out(Family::D, n);
    const GroupClasses& gd = group_classes(Family::D, n);
    for (int i = 0; i < gd.num_classes(); ++i)
        out.value(i) = phi.at(gd.classes[i].type);
    return out;
}

ClassFunction trivial_character(Family f, int n) { return ClassFunction::trivial(f, n); }

ClassFunction sign_character(Family f, int n) {
    ClassFunction cf(f, n);
    const GroupClasses& g = group_classes(f, n);
    for (int i = 0; i < g.num_classes(); ++i) {
        const DoublePartition& t = g.classes[i].type;
        if (f == Family::A) {
            // sign of a permutation: (-1)^{n - #cycles}
            cf.value(i) = ((n - t.plus.length()) % 2 == 0) ? 1 : -1;
        } else {
            cf.value(i) = (t.minus.length() % 2 == 0) ? 1 : -1;
        }
    }
    return cf;
}

ClassFunction regular_character(Family f, int n) {
    ClassFunction cf(f, n);
    cf.value(cf.group().identity_index()) = Rat(group_order(f, n));
    return cf;
}

}  // namespace weylchar
