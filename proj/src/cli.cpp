#include "weylchar/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylchar/applications.hpp"
#include "weylchar/charpoly.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/fiw_module.hpp"
#include "weylchar/hyperoct.hpp"
#include "weylchar/verify.hpp"

namespace weylchar {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Data files: {"n": {"classType": "value-as-rational-string"}}.
std::vector<ClassFunction> load_sequence(const std::string& path, Family f) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("data file: ") + e.what());
    }
    std::map<int, ClassFunction> by_n;
    for (const auto& [key, entry] : j.items()) {
        int n = std::stoi(key);
        ClassFunction cf(f, n);
        const GroupClasses& g = group_classes(f, n);
        std::vector<bool> seen(g.num_classes(), false);
        for (const auto& [type_text, value] : entry.items()) {
            int idx = g.index_of(parse_double_partition(type_text));
            cf.value(idx) = parse_rational(value.get<std::string>());
            seen[idx] = true;
        }
        for (int i = 0; i < g.num_classes(); ++i)
            if (!seen[i])
                throw ParseError("n=" + key + " is missing class " + g.classes[i].label());
        by_n.emplace(n, std::move(cf));
    }
    std::vector<ClassFunction> out;
    for (auto& [n, cf] : by_n) {
        if (n != static_cast<int>(out.size()))
            throw ParseError("data must cover consecutive n starting at 0");
        out.push_back(std::move(cf));
    }
    return out;
}

std::string polynomial_json(const CharacterPolynomial& p) {
    return json(p.to_json_map()).dump(2);
}

int cmd_irr(const std::string& label_text, const std::string& format, std::ostream& out) {
    DoublePartition stable = parse_double_partition(label_text);
    IrreducibleLabel label{stable.plus, stable.minus};
    const CharacterPolynomial& p = irr_char_poly(label);
    if (format == "json") {
        json j;
        j["label"] = label.to_string();
        j["binomial_form"] = p.to_binomial_string();
        j["expanded"] = p.to_json_map();
        out << j.dump(2) << "\n";
    } else if (format == "latex") {
        out << "P^{(" << label.to_string() << ")} = " << p.to_latex() << "\n";
    } else {
        std::string head = "P^(" + label.to_string() + ") ";
        out << head << "= " << p.to_binomial_string() << "\n";
        out << std::string(head.size(), ' ') << "= " << p.to_string() << "\n";
    }
    return 0;
}

int cmd_table(Family f, int n, const std::string& format, std::ostream& out) {
    if (f == Family::D)
        throw ParseError("table emission covers groups A and BC");
    const GroupClasses& g = group_classes(f, n);
    std::vector<std::string> row_labels;
    std::vector<ClassFunction> rows;
    if (f == Family::BC) {
        for (const auto& t : double_partitions_of(n)) {
            row_labels.push_back(format_double_partition(t));
            rows.push_back(irr_character(f, IrreducibleLabel::from_full(t), n));
        }
    } else {
        for (const auto& lam : partitions_of(n)) {
            row_labels.push_back(format_partition(lam));
            rows.push_back(
                irr_character(f, IrreducibleLabel::from_full({lam, Partition{}}), n));
        }
    }
    if (format == "json") {
        json j;
        j["group"] = family_name(f);
        j["n"] = n;
        json classes = json::array(), sizes = json::array();
        for (const auto& c : g.classes) {
            classes.push_back(c.label());
            sizes.push_back(c.size);
        }
        j["classes"] = std::move(classes);
        j["class_sizes"] = std::move(sizes);
        json table = json::object();
        for (size_t i = 0; i < rows.size(); ++i) {
            json vals = json::array();
            for (int c = 0; c < g.num_classes(); ++c)
                vals.push_back(rat_to_string(rows[i].value(c)));
            table[row_labels[i]] = std::move(vals);
        }
        j["characters"] = std::move(table);
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        auto quoted = [](const std::string& s) {
            return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
        };
        out << "irreducible";
        for (const auto& c : g.classes) out << "," << quoted(c.label());
        out << "\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            out << quoted(row_labels[i]);
            for (int c = 0; c < g.num_classes(); ++c)
                out << "," << rat_to_string(rows[i].value(c));
            out << "\n";
        }
    } else {  // latex
        out << "\\begin{array}{l|";
        for (int c = 0; c < g.num_classes(); ++c) out << "r";
        out << "}\n";
        for (const auto& c : g.classes) out << " & " << c.label();
        out << " \\\\\\hline\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            out << row_labels[i];
            for (int c = 0; c < g.num_classes(); ++c)
                out << " & " << rat_to_string(rows[i].value(c));
            out << " \\\\\n";
        }
        out << "\\end{array}\n";
    }
    return 0;
}

int cmd_fit(const std::string& path, Family f, int degree, const std::string& format,
            std::ostream& out, std::ostream& err) {
    std::vector<ClassFunction> data = load_sequence(path, f);
    CharacterPolynomial p;
    try {
        p = fit(data, degree);
    } catch (const DegenerateFit& e) {
        err << "DegenerateFit: " << e.what() << "\n";
        return 1;
    } catch (const InconsistentFit& e) {
        err << "Inconsistent: " << e.what() << "\n";
        return 1;
    }
    if (format == "json") {
        out << polynomial_json(p) << "\n";
    } else {
        out << p.to_binomial_string() << "\n";
        out << p.to_string() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_n, std::ostream& out) {
    SuiteResult r;
    if (suite == "orthogonality") {
        r = verify_orthogonality(max_n);
    } else if (suite == "oracle") {
        r = verify_oracle(max_n);
    } else if (suite == "roundtrip") {
        r = verify_roundtrip(std::min(max_n, 4), 25, 7901u);
    } else {
        throw ParseError("unknown suite '" + suite + "'");
    }
    out << "suite " << r.name << ": " << r.passed << " passed, " << r.failed << " failed\n";
    for (const auto& f : r.failures) out << "  FAIL " << f << "\n";
    return r.ok() ? 0 : 1;
}

int cmd_app(const std::string& pipeline, Family f, int m, int degree,
            const std::string& range_text, const std::string& format, std::ostream& out,
            std::ostream& err) {
    auto dots = range_text.find("..");
    if (dots == std::string::npos)
        throw ParseError("range must look like 0..4");
    int lo = std::stoi(range_text.substr(0, dots));
    int hi = std::stoi(range_text.substr(dots + 2));
    AnalyzeReport r;
    try {
        r = analyze(parse_pipeline(pipeline), f, m, degree < 0 ? 2 * m : degree, lo, hi);
    } catch (const DegenerateFit& e) {
        err << "DegenerateFit: " << e.what() << "\n";
        return 1;
    } catch (const NotACharacter& e) {
        err << "NotACharacter: " << e.what() << "\n";
        return 1;
    }
    if (format == "latex") {
        out << report_to_latex(r);
    } else if (format == "text") {
        out << "polynomial: " << r.poly.to_binomial_string() << "\n";
        out << "          = " << r.poly.to_string() << "\n";
        out << "decomposition:";
        for (const auto& [a, d] : r.components)
            for (const auto& [label, mult] : d.multiplicities) {
                out << " M(" << format_double_partition(label.full_at(a)) << ")";
                if (mult > 1) out << "^" << mult;
            }
        if (r.components.empty()) out << " 0";
        out << "\n";
        out << "restriction_to_sym: " << r.sym_restriction.to_binomial_string() << "\n";
    } else {
        out << report_to_json(r) << "\n";
    }
    return r.recovered.is_valid ? 0 : 1;
}

int cmd_module(const std::string& path, Family f, std::ostream& out, std::ostream& err) {
    std::vector<ClassFunction> seq = load_sequence(path, f);
    try {
        RecoverResult r = recover_from_sequence(seq, f);
        if (!r.is_valid) {
            err << "NotACharacter: some component has a negative multiplicity\n";
            err << module_to_json(r.module) << "\n";
            return 1;
        }
        out << module_to_json(r.module) << "\n";
        return 0;
    } catch (const NotACharacter& e) {
        err << "NotACharacter: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weylchar: character polynomials for the classical Weyl groups"};
    app.require_subcommand(1);

    std::string label, format = "text";
    auto* irr = app.add_subcommand("irr", "character polynomial of an irreducible");
    irr->add_option("--label", label, "stable double partition, e.g. \"1|1\" or \"-|1,1\"")
        ->required();
    irr->add_option("--format", format, "text|json|latex");

    std::string group = "BC", table_format = "json";
    int table_n = 0;
    auto* table = app.add_subcommand("table", "full character table via character polynomials");
    table->add_option("--group", group, "A|BC");
    table->add_option("--n", table_n, "group index n")->required();
    table->add_option("--format", table_format, "json|csv|latex");

    std::string fit_data, fit_family = "BC", fit_format = "text";
    int fit_degree = 0;
    auto* fitc = app.add_subcommand("fit", "fit a character polynomial to class-function data");
    fitc->add_option("--degree", fit_degree, "degree bound")->required();
    fitc->add_option("--data", fit_data, "JSON file {\"n\": {\"classType\": \"value\"}}")
        ->required();
    fitc->add_option("--family", fit_family, "A|BC");
    fitc->add_option("--format", fit_format, "text|json");

    std::string suite;
    int max_n = 4;
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("--suite", suite, "orthogonality|oracle|roundtrip")->required();
    verify->add_option("--max-n", max_n, "size cap");

    std::string pipeline, app_family = "BC", app_range = "", app_format = "json";
    int app_m = 1, app_degree = -1;
    auto* appc = app.add_subcommand("app", "cohomology pipeline analysis");
    appc->add_option("--pipeline", pipeline, "psigma|os")->required();
    appc->add_option("--family", app_family, "A|BC|D");
    appc->add_option("--m", app_m, "cohomological degree")->required();
    appc->add_option("--range", app_range, "n range, e.g. 0..4")->required();
    appc->add_option("--degree", app_degree, "fit degree bound (default 2m)");
    appc->add_option("--format", app_format, "json|latex|text");

    std::string module_data, module_family = "BC";
    auto* modc = app.add_subcommand("module", "recover an FI_W# module from characters");
    modc->add_option("--recover", module_data, "JSON class-function sequence")->required();
    modc->add_option("--family", module_family, "A|BC");

    std::vector<const char*> argv;
    argv.push_back("weylchar");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (irr->parsed()) return cmd_irr(label, format, out);
        if (table->parsed()) return cmd_table(parse_family(group), table_n, table_format, out);
        if (fitc->parsed())
            return cmd_fit(fit_data, parse_family(fit_family), fit_degree, fit_format, out, err);
        if (verify->parsed()) return cmd_verify(suite, max_n, out);
        if (appc->parsed())
            return cmd_app(pipeline, parse_family(app_family), app_m, app_degree, app_range,
                           app_format, out, err);
        if (modc->parsed()) return cmd_module(module_data, parse_family(module_family), out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace weylchar
