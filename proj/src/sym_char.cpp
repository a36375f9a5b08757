#include "weylchar/sym_char.hpp"

#include <algorithm>

#include "weylchar/errors.hpp"

namespace weylchar {

namespace {

// Beta-set form of lambda with l slots: b_j = lambda_j + (l-1-j), strictly
// decreasing. Removing a rim hook of length r replaces some b_j by b_j - r;
// the sign is (-1)^{#betas strictly between b_j - r and b_j}.
Partition partition_from_betas(std::vector<int> betas) {
    std::sort(betas.begin(), betas.end(), std::greater<int>());
    const int l = static_cast<int>(betas.size());
    std::vector<int> parts;
    for (int j = 0; j < l; ++j) {
        int p = betas[j] - (l - 1 - j);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

long mn_rec(const Partition& lambda, const Partition& rho,
                 std::map<std::pair<Partition, Partition>, long>& memo) {
    if (rho.empty()) return 1;
    auto key = std::make_pair(lambda, rho);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int r = rho.first_part();
    const Partition rest = rho.drop_first();
    const int l = lambda.length();
    std::vector<int> betas(l);
    for (int j = 0; j < l; ++j) betas[j] = lambda.part(j) + (l - 1 - j);

    long total = 0;
    for (int j = 0; j < l; ++j) {
        int target = betas[j] - r;
        if (target < 0) continue;
        if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
        int height = 0;
        for (int k = 0; k < l; ++k)
            if (betas[k] > target && betas[k] < betas[j]) ++height;
        std::vector<int> next = betas;
        next[j] = target;
        long sub = mn_rec(partition_from_betas(std::move(next)), rest, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw SizeMismatch("mn_character: |lambda| = " + std::to_string(lambda.size()) +
                           " but |rho| = " + std::to_string(rho.size()));
    static std::map<std::pair<Partition, Partition>, long> memo;
    return mn_rec(lambda, rho, memo);
}

SymCharTable sym_char_table(int n) {
    SymCharTable t;
    t.n = n;
    for (const auto& lam : partitions_of(n))
        for (const auto& rho : partitions_of(n)) t.values[{lam, rho}] = mn_character(lam, rho);
    return t;
}

const CharacterPolynomial& sym_char_poly(const Partition& lambda) {
    static std::map<Partition, CharacterPolynomial> cache;
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;

    CharacterPolynomial p;
    const int d = lambda.size();
    for (int k = 0; k <= d; ++k) {
        for (const auto& rho : partitions_of(k)) {
            CharacterPolynomial cb = gen_binom(rho, Partition{});
            for (const auto& sigma : partitions_of(d - k)) {
                long chi = mn_character(lambda, rho.union_with(sigma));
                if (chi == 0) continue;
                Rat coef = make_rat(chi, z_factor(sigma));
                if (sigma.length() % 2 != 0) coef = -coef;
                p += cb.scaled(coef);
            }
        }
    }
    return cache.emplace(lambda, std::move(p)).first->second;
}

}  // namespace weylchar
