#include "weylchar/fiw_module.hpp"

#include "json.hpp"

#include "weylchar/errors.hpp"

namespace weylchar {

using nlohmann::json;

Rat UnivariatePoly::evaluate(long n) const {
    Rat total = 0, power = 1;
    for (const Rat& c : coeffs) {
        total += c * power;
        power *= n;
    }
    return total;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return *this;
}

bool UnivariatePoly::operator==(const UnivariatePoly& o) const { return coeffs == o.coeffs; }

bool UnivariatePoly::is_zero() const { return coeffs.empty(); }

std::string UnivariatePoly::to_string() const {
    std::string out;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const Rat& c = coeffs[k];
        if (c == 0) continue;
        Rat a = abs(c);
        std::string body = k == 0 ? "" : (k == 1 ? "n" : "n^" + std::to_string(k));
        std::string mag = (a == 1 && k > 0) ? body
                          : body.empty()    ? rat_to_string(a)
                                            : rat_to_string(a) + "*" + body;
        if (out.empty())
            out += (c < 0 ? "-" : "") + mag;
        else
            out += (c < 0 ? " - " : " + ") + mag;
    }
    return out.empty() ? "0" : out;
}

UnivariatePoly binom_univariate(int a, const Rat& scale) {
    // scale * n(n-1)...(n-a+1)/a!
    std::vector<Rat> poly{scale / Rat(factorial(a))};
    for (int i = 0; i < a; ++i) {
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * i;
        }
        poly = std::move(next);
    }
    UnivariatePoly out{std::move(poly)};
    while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
    return out;
}

int FIWSharpModule::generation_degree() const {
    return components.empty() ? -1 : components.rbegin()->first;
}

bool FIWSharpModule::operator==(const FIWSharpModule& o) const {
    return family == o.family && components == o.components;
}

ClassFunction realize(const FIWSharpModule& v, int n) {
    if (n > irr_table_cap())
        throw CapExceeded("realize cap " + std::to_string(irr_table_cap()) +
                          " exceeded at n=" + std::to_string(n));
    ClassFunction total(v.family, n);
    for (const auto& [a, chi] : v.components) {
        if (a > n) continue;
        total += induced_character(chi, trivial_character(v.family, n - a));
    }
    return total;
}

CharacterPolynomial module_char_poly(const FIWSharpModule& v) {
    CharacterPolynomial p;
    for (const auto& [a, chi] : v.components) p += m_module_char_poly(chi);
    return p;
}

UnivariatePoly dimension_poly(const FIWSharpModule& v) {
    UnivariatePoly out;
    for (const auto& [a, chi] : v.components) out += binom_univariate(a, chi.at_identity());
    return out;
}

RecoverResult recover_from_sequence(const std::vector<ClassFunction>& seq, Family f) {
    if (f == Family::D) throw GroupMismatch("recovery operates in family A or BC");
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].family() != f) throw GroupMismatch("sequence family mismatch");
        if (seq[i].n() != static_cast<int>(i))
            throw std::invalid_argument(
                "recover_from_sequence needs a consecutive prefix n = 0..N");
    }
    RecoverResult result;
    result.module.family = f;
    std::map<int, ClassFunction> all;  // including zero components, for the recursion
    for (size_t k = 0; k < seq.size(); ++k) {
        ClassFunction u = seq[k];
        for (size_t j = 0; j < k; ++j)
            u -= induced_character(all.at(static_cast<int>(j)),
                                   trivial_character(f, static_cast<int>(k - j)));
        try {
            Decomposition d = decompose_into_irreducibles(u);
            if (!d.is_true_character) result.is_valid = false;
        } catch (const NonIntegralMultiplicity& e) {
            throw NotACharacter("degree " + std::to_string(k) +
                                " component is not a virtual character: " + e.what());
        }
        all.emplace(static_cast<int>(k), u);
        if (!u.is_zero()) result.module.components.emplace(static_cast<int>(k), u);
    }
    return result;
}

std::string module_to_json(const FIWSharpModule& v) {
    json j;
    j["family"] = family_name(v.family);
    json comps = json::object();
    for (const auto& [a, chi] : v.components) {
        Decomposition d = decompose_into_irreducibles(chi);
        json entry = json::object();
        for (const auto& [label, mult] : d.multiplicities) {
            DoublePartition full = label.full_at(a);
            entry[format_double_partition(full)] = mult;
        }
        comps[std::to_string(a)] = std::move(entry);
    }
    j["components"] = std::move(comps);
    return j.dump(2);
}

FIWSharpModule module_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("module JSON: ") + e.what());
    }
    FIWSharpModule v;
    v.family = parse_family(j.at("family").get<std::string>());
    for (const auto& [key, entry] : j.at("components").items()) {
        int a = std::stoi(key);
        ClassFunction chi(v.family, a);
        for (const auto& [labeltext, mult] : entry.items()) {
            DoublePartition full = parse_double_partition(labeltext);
            if (full.size() != a)
                throw ParseError("label " + labeltext + " is not a double partition of " + key);
            IrreducibleLabel label = IrreducibleLabel::from_full(full);
            chi += irr_character(v.family, label, a).scaled(Rat(mult.get<long>()));
        }
        if (!chi.is_zero()) v.components.emplace(a, std::move(chi));
    }
    return v;
}

}  // namespace weylchar
