#include "weylchar/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "weylchar/errors.hpp"

namespace weylchar {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::BC: return "BC";
        case Family::D: return "D";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "BC" || s == "bc" || s == "B" || s == "b") return Family::BC;
    if (s == "D" || s == "d") return Family::D;
    throw ParseError("unknown family '" + s + "' (expected A, BC, or D)");
}

SignedPermutation::SignedPermutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : img_) {
        int a = std::abs(v);
        if (a < 1 || a > n || seen[a])
            throw std::invalid_argument("images do not define a signed permutation");
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& o) const {
    std::vector<int> img(o.n());
    for (int i = 1; i <= o.n(); ++i) img[i - 1] = apply(o.apply(i));
    return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> img(n());
    for (int i = 1; i <= n(); ++i) {
        int v = img_[i - 1];
        img[std::abs(v) - 1] = v > 0 ? i : -i;
    }
    return SignedPermutation(std::move(img));
}

int SignedPermutation::negative_count() const {
    int c = 0;
    for (int v : img_) c += (v < 0);
    return c;
}

bool SignedPermutation::in_family(Family f) const {
    switch (f) {
        case Family::A: return negative_count() == 0;
        case Family::BC: return true;
        case Family::D: return negative_count() % 2 == 0;
    }
    return false;
}

DoublePartition SignedPermutation::cycle_type() const {
    std::vector<int> pos, neg;
    std::vector<bool> visited(n() + 1, false);
    for (int i = 1; i <= n(); ++i) {
        if (visited[i]) continue;
        int len = 0, flips = 0, j = i;
        do {
            visited[j] = true;
            int v = img_[j - 1];
            flips += (v < 0);
            j = std::abs(v);
            ++len;
        } while (j != i);
        (flips % 2 == 0 ? pos : neg).push_back(len);
    }
    std::sort(pos.begin(), pos.end(), std::greater<int>());
    std::sort(neg.begin(), neg.end(), std::greater<int>());
    return {Partition(std::move(pos)), Partition(std::move(neg))};
}

int brute_force_cap(Family f) {
    if (const char* env = std::getenv("WEYLCHAR_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return f == Family::A ? 9 : 7;
}

long group_order(Family f, int n) {
    long fact = factorial(n);
    switch (f) {
        case Family::A: return fact;
        case Family::BC: return fact << n;
        case Family::D: return n == 0 ? 1 : fact << (n - 1);
    }
    return 0;
}

void for_each_element(int n, Family f,
                      const std::function<void(const SignedPermutation&)>& fn) {
    if (n > brute_force_cap(f))
        throw CapExceeded("enumeration of " + family_name(f) + "_" + std::to_string(n) +
                          " exceeds brute-force cap " + std::to_string(brute_force_cap(f)));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (f == Family::A) {
            fn(SignedPermutation(perm));
            continue;
        }
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (f == Family::D && __builtin_popcount(mask) % 2 != 0) continue;
            std::vector<int> img = perm;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) img[i] = -img[i];
            fn(SignedPermutation(std::move(img)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<SignedPermutation> enumerate_group(int n, Family f) {
    if (n > brute_force_cap(f))
        throw CapExceeded("enumeration of " + family_name(f) + "_" + std::to_string(n) +
                          " exceeds brute-force cap " + std::to_string(brute_force_cap(f)));
    std::vector<SignedPermutation> out;
    out.reserve(static_cast<size_t>(group_order(f, n)));
    for_each_element(n, f, [&](const SignedPermutation& w) { out.push_back(w); });
    return out;
}

std::string ConjClass::label() const {
    std::string s = format_double_partition(type);
    if (split == SplitTag::plus) s += ":+";
    if (split == SplitTag::minus) s += ":-";
    return s;
}

SignedPermutation class_representative(const ConjClass& c) {
    std::vector<int> img(c.n);
    int base = 1;
    auto lay = [&](int len, bool negative) {
        // cycle on letters base .. base+len-1, sign flip only on the closing edge
        for (int k = 0; k + 1 < len; ++k) img[base + k - 1] = base + k + 1;
        img[base + len - 2] = negative ? -base : base;
        base += len;
    };
    for (int p : c.type.plus.parts()) lay(p, false);
    for (int p : c.type.minus.parts()) lay(p, true);
    SignedPermutation w(std::move(img));
    if (c.split == SplitTag::minus) {
        // conjugate by the sign flip of letter 1 (lies outside D_n)
        std::vector<int> t(c.n);
        std::iota(t.begin(), t.end(), 1);
        t[0] = -1;
        SignedPermutation flip(std::move(t));
        w = flip.compose(w).compose(flip);
    }
    return w;
}

namespace {

long bn_class_size(int n, const DoublePartition& type) {
    // 2^n n! / prod_r (2r)^{n_r(alpha)} n_r(alpha)! (2r)^{n_r(beta)} n_r(beta)!
    long cent = 1;
    for (int r = 1; r <= n; ++r) {
        for (const Partition* side : {&type.plus, &type.minus}) {
            int m = side->multiplicity(r);
            for (int i = 0; i < m; ++i) cent *= 2LL * r;
            cent *= factorial(m);
        }
    }
    return group_order(Family::BC, n) / cent;
}

bool dn_type_splits(const DoublePartition& type) {
    if (!type.minus.empty()) return false;
    for (int p : type.plus.parts())
        if (p % 2 != 0) return false;
    return !type.plus.empty();
}

GroupClasses build_group_classes(Family f, int n) {
    GroupClasses g;
    g.family = f;
    g.n = n;
    g.order = group_order(f, n);
    auto push = [&](ConjClass c) {
        g.classes.push_back(c);
        return static_cast<int>(g.classes.size()) - 1;
    };
    if (f == Family::A) {
        for (const auto& lam : partitions_of(n))
            push({f, n, {lam, Partition{}}, SplitTag::none, g.order / z_factor(lam)});
    } else if (f == Family::BC) {
        for (const auto& t : double_partitions_of(n))
            push({f, n, t, SplitTag::none, bn_class_size(n, t)});
    } else {
        for (const auto& t : double_partitions_of(n)) {
            if (t.minus.length() % 2 != 0) continue;
            long bsize = bn_class_size(n, t);
            if (dn_type_splits(t)) {
                push({f, n, t, SplitTag::plus, bsize / 2});
                push({f, n, t, SplitTag::minus, bsize / 2});
            } else {
                push({f, n, t, SplitTag::none, bsize});
            }
        }
    }
    return g;
}

int split_key(SplitTag s) { return s == SplitTag::none ? 0 : (s == SplitTag::plus ? 1 : 2); }

}  // namespace

int GroupClasses::index_of(const DoublePartition& type, SplitTag split) const {
    auto it = index_.find({type, split_key(split)});
    if (it == index_.end())
        throw std::out_of_range("no class " + format_double_partition(type) + " in " +
                                family_name(family) + "_" + std::to_string(n));
    return it->second;
}

int GroupClasses::identity_index() const { return index_of(identity_type(n)); }

const GroupClasses& group_classes(Family f, int n) {
    static std::map<std::pair<int, int>, GroupClasses> cache;
    auto key = std::make_pair(static_cast<int>(f), n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        GroupClasses g = build_group_classes(f, n);
        for (int i = 0; i < g.num_classes(); ++i)
            g.index_[{g.classes[i].type, split_key(g.classes[i].split)}] = i;
        it = cache.emplace(key, std::move(g)).first;
    }
    return it->second;
}

namespace {

std::vector<SignedPermutation> group_generators(Family f, int n) {
    std::vector<SignedPermutation> gens;
    for (int i = 1; i < n; ++i) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        std::swap(img[i - 1], img[i]);
        gens.emplace_back(std::move(img));
    }
    if (f == Family::BC && n >= 1) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        img[n - 1] = -n;
        gens.emplace_back(std::move(img));
    }
    if (f == Family::D && n >= 2) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        img[0] = -2;
        img[1] = -1;
        gens.emplace_back(std::move(img));
    }
    return gens;
}

// Conjugation orbit of w under the group generated by gens.
std::set<std::vector<int>> conjugation_orbit(const SignedPermutation& w,
                                             const std::vector<SignedPermutation>& gens) {
    std::set<std::vector<int>> orbit;
    std::vector<SignedPermutation> queue{w};
    orbit.insert(w.images());
    while (!queue.empty()) {
        SignedPermutation x = queue.back();
        queue.pop_back();
        for (const auto& g : gens) {
            SignedPermutation y = g.compose(x).compose(g.inverse());
            if (orbit.insert(y.images()).second) queue.push_back(y);
        }
    }
    return orbit;
}

}  // namespace

std::vector<ConjClass> conjugacy_classes(int n, Family f) {
    // Exhaustive path: bucket every element by signed cycle type; split D_n
    // buckets via the conjugation orbit of the canonical plus representative.
    const GroupClasses& canon = group_classes(f, n);
    std::map<std::pair<DoublePartition, int>, long> counts;
    std::map<DoublePartition, std::set<std::vector<int>>> plus_orbits;
    auto gens = group_generators(f, n);
    for (const auto& c : canon.classes) {
        if (c.split == SplitTag::plus)
            plus_orbits[c.type] = conjugation_orbit(class_representative(c), gens);
    }
    for_each_element(n, f, [&](const SignedPermutation& w) {
        DoublePartition t = w.cycle_type();
        SplitTag tag = SplitTag::none;
        auto it = plus_orbits.find(t);
        if (it != plus_orbits.end())
            tag = it->second.count(w.images()) ? SplitTag::plus : SplitTag::minus;
        counts[{t, split_key(tag)}]++;
    });
    std::vector<ConjClass> out;
    for (const auto& c : canon.classes) {
        ConjClass cc = c;
        cc.size = counts.at({c.type, split_key(c.split)});
        out.push_back(cc);
    }
    return out;
}

ClassFunction::ClassFunction(Family f, int n)
    : family_(f), n_(n), values_(group_classes(f, n).num_classes(), Rat(0)) {}

ClassFunction ClassFunction::constant(Family f, int n, const Rat& v) {
    ClassFunction cf(f, n);
    for (auto& x : cf.values_) x = v;
    return cf;
}

const Rat& ClassFunction::at(const DoublePartition& type, SplitTag split) const {
    return values_[group().index_of(type, split)];
}

void ClassFunction::set(const DoublePartition& type, const Rat& v) {
    values_[group().index_of(type)] = v;
}

Rat ClassFunction::at_identity() const { return values_[group().identity_index()]; }

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (family_ != o.family_ || n_ != o.n_) throw GroupMismatch("class function group mismatch");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (family_ != o.family_ || n_ != o.n_) throw GroupMismatch("class function group mismatch");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    ClassFunction r = *this;
    r += o;
    return r;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    ClassFunction r = *this;
    r -= o;
    return r;
}

ClassFunction ClassFunction::scaled(const Rat& c) const {
    ClassFunction r = *this;
    for (auto& x : r.values_) x *= c;
    return r;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    return family_ == o.family_ && n_ == o.n_ && values_ == o.values_;
}

bool ClassFunction::is_zero() const {
    for (const auto& v : values_)
        if (v != 0) return false;
    return true;
}

long trace_of_action(
    int basis_size,
    const std::function<ActionImage(const SignedPermutation&, int)>& action,
    const SignedPermutation& w) {
    long tr = 0;
    for (int j = 0; j < basis_size; ++j) {
        ActionImage im = action(w, j);
        if (im.sign != 0 && im.index == j) tr += im.sign;
    }
    return tr;
}

namespace {

void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v <= n; ++v) {
        cur.push_back(v);
        subsets_rec(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(n, k, 1, cur, out);
    return out;
}

}  // namespace

ClassFunction brute_induced_character(const ClassFunction& chi_u,
                                      const ClassFunction& chi_uprime) {
    if (chi_u.family() != chi_uprime.family())
        throw GroupMismatch("induced factors must share a family");
    Family f = chi_u.family();
    if (f == Family::D) throw GroupMismatch("brute induction implemented for A and BC");
    const int m = chi_u.n();
    const int n = m + chi_uprime.n();
    if (n > brute_force_cap(f))
        throw CapExceeded("brute induction exceeds cap at n=" + std::to_string(n));

    // Coset representatives of W_n / (W_m x W_{n-m}): one per m-subset of blocks.
    std::vector<SignedPermutation> reps;
    for (const auto& S : subsets(n, m)) {
        std::vector<int> img(n);
        std::vector<bool> taken(n + 1, false);
        for (int i = 0; i < m; ++i) {
            img[i] = S[i];
            taken[S[i]] = true;
        }
        int j = m;
        for (int v = 1; v <= n; ++v)
            if (!taken[v]) img[j++] = v;
        reps.emplace_back(std::move(img));
    }

    ClassFunction out(f, n);
    const GroupClasses& g = group_classes(f, n);
    for (int ci = 0; ci < g.num_classes(); ++ci) {
        SignedPermutation w = class_representative(g.classes[ci]);
        Rat total = 0;
        for (const auto& s : reps) {
            SignedPermutation x = s.inverse().compose(w).compose(s);
            bool stable = true;
            for (int i = 1; i <= m && stable; ++i)
                if (std::abs(x.apply(i)) > m) stable = false;
            if (!stable) continue;
            std::vector<int> left(x.images().begin(), x.images().begin() + m);
            std::vector<int> right(n - m);
            for (int i = 0; i < n - m; ++i) {
                int v = x.images()[m + i];
                right[i] = v > 0 ? v - m : v + m;
            }
            DoublePartition t1 = SignedPermutation(std::move(left)).cycle_type();
            DoublePartition t2 = SignedPermutation(std::move(right)).cycle_type();
            total += chi_u.at(t1) * chi_uprime.at(t2);
        }
        out.value(ci) = total;
    }
    return out;
}

DoublePartition identity_type(int n) {
    return {Partition(std::vector<int>(n, 1)), Partition{}};
}

}  // namespace weylchar
