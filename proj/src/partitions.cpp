#include "weylchar/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "weylchar/errors.hpp"
#include "weylchar/rational.hpp"

namespace weylchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::multiplicity(int r) const {
    int c = 0;
    for (int p : parts_) c += (p == r);
    return c;
}

Partition Partition::drop_first() const {
    if (parts_.empty()) return {};
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::union_with(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    std::sort(all.begin(), all.end(), std::greater<int>());
    return Partition(std::move(all));
}

std::optional<Partition> Partition::minus(const Partition& sub) const {
    std::vector<int> rest = parts_;
    for (int p : sub.parts_) {
        auto it = std::find(rest.begin(), rest.end(), p);
        if (it == rest.end()) return std::nullopt;
        rest.erase(it);
    }
    return Partition(std::move(rest));
}

bool Partition::operator<(const Partition& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    // (n) before (n-1,1) before ... before (1^n): lexicographically larger first.
    return std::lexicographical_compare(parts_.begin(), parts_.end(),
                                        o.parts_.begin(), o.parts_.end(),
                                        std::greater<int>());
}

long z_factor(const Partition& lambda) {
    long z = 1;
    for (int r = 1; r <= lambda.first_part(); ++r) {
        int m = lambda.multiplicity(r);
        for (int i = 0; i < m; ++i) z *= r;
        z *= factorial(m);
    }
    return z;
}

std::optional<Partition> pad(const Partition& lambda, int n) {
    int head = n - lambda.size();
    if (head < lambda.first_part() || head < 0) return std::nullopt;
    if (head == 0) return Partition{};  // only possible for lambda empty, n = 0
    std::vector<int> parts;
    parts.reserve(lambda.length() + 1);
    parts.push_back(head);
    parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
    return Partition(std::move(parts));
}

namespace {

std::vector<Partition> build_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending-lex enumeration: biggest first part first.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::map<int, std::vector<Partition>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_partitions(n)).first;
    return it->second;
}

long partition_count(int n) {
    return static_cast<long>(partitions_of(n).size());
}

bool DoublePartition::operator<(const DoublePartition& o) const {
    if (size() != o.size()) return size() < o.size();
    if (plus.size() != o.plus.size()) return plus.size() > o.plus.size();
    if (!(plus == o.plus)) return plus < o.plus;
    return minus < o.minus;
}

const std::vector<DoublePartition>& double_partitions_of(int n) {
    static std::map<int, std::vector<DoublePartition>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<DoublePartition> out;
    for (int k = n; k >= 0; --k)
        for (const auto& a : partitions_of(k))
            for (const auto& b : partitions_of(n - k)) out.emplace_back(a, b);
    return cache.emplace(n, std::move(out)).first->second;
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

Partition parse_partition(const std::string& s) {
    std::string t = s;
    if (t.empty() || t == "-" || t == "0") return {};
    std::vector<int> parts;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad partition part '" + tok + "' in '" + s + "'");
        }
        if (pos != tok.size() || v < 1)
            throw ParseError("bad partition part '" + tok + "' in '" + s + "'");
        parts.push_back(v);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

std::string format_double_partition(const DoublePartition& d) {
    return format_partition(d.plus) + "|" + format_partition(d.minus);
}

DoublePartition parse_double_partition(const std::string& s) {
    // Primary syntax "3,1|2"; also accepts the "((3,1),(2))" tuple style.
    std::string t = s;
    if (!t.empty() && t.front() == '(' && t.back() == ')') {
        std::string inner = t.substr(1, t.size() - 2);
        // ((3,1),(2)) -> split at the "),(" boundary
        auto mid = inner.find("),(");
        if (mid != std::string::npos && inner.front() == '(' && inner.back() == ')') {
            std::string a = inner.substr(1, mid - 1);
            std::string b = inner.substr(mid + 3, inner.size() - mid - 4);
            auto clean = [](std::string x) { return x.empty() ? std::string("-") : x; };
            return {parse_partition(clean(a)), parse_partition(clean(b))};
        }
    }
    auto bar = t.find('|');
    if (bar == std::string::npos)
        throw ParseError("double partition needs 'plus|minus' syntax: '" + s + "'");
    return {parse_partition(t.substr(0, bar)), parse_partition(t.substr(bar + 1))};
}

}  // namespace weylchar
