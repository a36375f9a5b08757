#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "weylchar/partitions.hpp"
#include "weylchar/rational.hpp"

namespace weylchar {

enum class Family { A, BC, D };

std::string family_name(Family f);
Family parse_family(const std::string& s);

/// Signed permutation w of {±1,...,±n}, determined by w(i) for i > 0
/// via w(-a) = -w(a).
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> images);

    static SignedPermutation identity(int n);

    int n() const { return static_cast<int>(img_.size()); }
    int apply(int a) const { return a > 0 ? img_[a - 1] : -img_[-a - 1]; }

    /// (this * o)(i) = this(o(i)).
    SignedPermutation compose(const SignedPermutation& o) const;
    SignedPermutation inverse() const;

    int negative_count() const;
    bool in_family(Family f) const;

    /// Signed cycle type (positive-cycle lengths, negative-cycle lengths).
    /// A cycle is negative iff it reverses an odd number of signs.
    DoublePartition cycle_type() const;

    const std::vector<int>& images() const { return img_; }
    bool operator==(const SignedPermutation& o) const { return img_ == o.img_; }
    bool operator<(const SignedPermutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

/// Brute-force enumeration cap; WEYLCHAR_MAX_N overrides both defaults.
int brute_force_cap(Family f);

long group_order(Family f, int n);

/// Every element of W_n exactly once (n!, 2^n n!, or 2^(n-1) n! elements).
/// Throws CapExceeded above the brute-force cap.
std::vector<SignedPermutation> enumerate_group(int n, Family f);
void for_each_element(int n, Family f, const std::function<void(const SignedPermutation&)>& fn);

enum class SplitTag { none, plus, minus };

struct ConjClass {
    Family family = Family::BC;
    int n = 0;
    DoublePartition type;
    SplitTag split = SplitTag::none;
    long size = 0;

    std::string label() const;  // "2|1" or "2,2|-:+" for split classes
};

/// Canonical class representative built from the signed cycle type:
/// cycles laid out on consecutive letters, sign flips only where the type
/// demands one. The plus split class is the one containing this element;
/// the minus representative is its conjugate by the sign flip of letter 1.
SignedPermutation class_representative(const ConjClass& c);

/// Class list of W_n in canonical order with closed-form sizes
/// (valid for all n; validated against enumeration below the cap).
struct GroupClasses {
    Family family = Family::BC;
    int n = 0;
    long order = 1;
    std::vector<ConjClass> classes;

    int num_classes() const { return static_cast<int>(classes.size()); }
    int index_of(const DoublePartition& type, SplitTag split = SplitTag::none) const;
    int identity_index() const;

private:
    friend const GroupClasses& group_classes(Family, int);
    std::map<std::pair<DoublePartition, int>, int> index_;
};

const GroupClasses& group_classes(Family f, int n);

/// Class list computed by exhaustive orbit enumeration (the slow oracle path).
/// Throws CapExceeded above the brute-force cap.
std::vector<ConjClass> conjugacy_classes(int n, Family f);

/// Exact rational-valued class function on the conjugacy classes of one W_n.
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(Family f, int n);
    static ClassFunction constant(Family f, int n, const Rat& v);
    static ClassFunction trivial(Family f, int n) { return constant(f, n, 1); }

    Family family() const { return family_; }
    int n() const { return n_; }
    const GroupClasses& group() const { return group_classes(family_, n_); }
    int num_classes() const { return static_cast<int>(values_.size()); }

    const Rat& value(int class_index) const { return values_[class_index]; }
    Rat& value(int class_index) { return values_[class_index]; }
    const Rat& at(const DoublePartition& type, SplitTag split = SplitTag::none) const;
    void set(const DoublePartition& type, const Rat& v);
    Rat at_identity() const;

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    ClassFunction scaled(const Rat& c) const;
    bool operator==(const ClassFunction& o) const;
    bool is_zero() const;

private:
    Family family_ = Family::BC;
    int n_ = 0;
    std::vector<Rat> values_;
};

/// Character of a group element's action on an indexed basis where each basis
/// vector maps to +/- a basis vector or to zero.
struct ActionImage {
    int sign = 0;  // -1, 0 (killed), +1
    int index = 0;
};

long trace_of_action(
    int basis_size,
    const std::function<ActionImage(const SignedPermutation&, int)>& action,
    const SignedPermutation& w);

/// Character of Ind_{W_m x W_{n-m}}^{W_n}(U x U') computed literally by
/// summing chi over stabilized cosets; the oracle for the closed formula.
ClassFunction brute_induced_character(const ClassFunction& chi_u,
                                      const ClassFunction& chi_uprime);

DoublePartition identity_type(int n);

}  // namespace weylchar
