// Command line front end: straightening, fundamental-to-Schur conversion,
// tableau involution, cancellation reports, and the monomial oracle.

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fschur/composition.hpp"
#include "fschur/expansion.hpp"
#include "fschur/expr.hpp"
#include "fschur/json_io.hpp"
#include "fschur/polynomial.hpp"
#include "fschur/tableau.hpp"

namespace {

using namespace fschur;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;      // parse / validation errors
constexpr int kExitNotSymmetric = 3;
constexpr int kExitThetaDomain = 4;

std::vector<Int> parse_csv_ints(const std::string& text) {
    std::vector<Int> out;
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            trimmed += c;
    if (trimmed.empty())
        return out;
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        Int value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("'" + item + "' is not an integer");
        }
        if (used != item.size())
            throw std::invalid_argument("'" + item + "' is not an integer");
        out.push_back(value);
    }
    if (!trimmed.empty() && trimmed.back() == ',')
        throw std::invalid_argument("trailing ',' in '" + text + "'");
    return out;
}

Composition composition_arg(const std::string& text) {
    return Composition(parse_csv_ints(text));
}

Partition partition_arg(const std::string& text) {
    return Partition(parse_csv_ints(text));
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_straighten(const std::string& comp_text, bool trace, bool as_json) {
    Composition L = composition_arg(comp_text);
    RaiseTrace t = straighten_trace(L);
    if (as_json) {
        json out = to_json(t.result);
        if (trace) {
            json steps = json::array();
            for (const auto& step : t.steps)
                steps.push_back(json{{"i", step.index}, {"after", step.after.parts()}});
            out["steps"] = steps;
            out["fixed_index"] =
                t.fixed_index == 0 ? json(nullptr) : json(t.fixed_index);
        }
        emit(out);
        return kExitOk;
    }
    if (trace) {
        Composition cur = L;
        for (const auto& step : t.steps) {
            std::cout << "raise i=" << step.index << ": " << to_string(cur) << " -> "
                      << to_string(step.after) << "\n";
            cur = step.after;
        }
        if (t.fixed_index != 0)
            std::cout << "fixed at i=" << t.fixed_index << ": " << to_string(cur)
                      << "\n";
    }
    std::cout << to_string(t.result) << "\n";
    return kExitOk;
}

int cmd_convert(const std::string& expr_text, const std::string& input_path,
                bool check_symmetric, bool as_json) {
    Expression e;
    if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in)
            throw std::invalid_argument("cannot open input file: " + input_path);
        json j = json::parse(in);
        e = expression_from_json(j);
    } else {
        e = parse_expression(expr_text);
    }
    if (check_symmetric) {
        ConvertReport report = verified_convert(e.f_terms);
        if (!report.symmetric) {
            std::cerr << "not symmetric: first discrepancy at composition "
                      << to_string(*report.first_discrepancy) << " (input coefficient "
                      << report.expected << ", round-trip " << report.actual << ")\n";
            return kExitNotSymmetric;
        }
    }
    SchurExpansion out = evaluate_schur(e);
    if (as_json)
        emit(to_json(out));
    else
        std::cout << serialize(out) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& shape_text, bool as_json) {
    Partition shape = partition_arg(shape_text);
    PairingReport report = cancellation_pairing(shape);
    SchurExpansion sum(report.telescoped.begin(), report.telescoped.end());
    if (as_json) {
        json tableaux = json::array();
        for (const auto& entry : report.entries) {
            json item{{"rows", to_json(entry.tableau)},
                      {"composition", entry.descent.composition.parts()},
                      {"straightened", to_json(entry.straightened)}};
            switch (entry.cls) {
            case PairingClass::Superstandard: item["class"] = "superstandard"; break;
            case PairingClass::Fixed: item["class"] = "fixed"; break;
            case PairingClass::Paired: item["class"] = "paired"; break;
            }
            item["partner"] =
                entry.partner ? json(*entry.partner + 1) : json(nullptr);
            item["raise_index"] =
                entry.raise_index ? json(*entry.raise_index) : json(nullptr);
            tableaux.push_back(std::move(item));
        }
        emit(json{{"shape", shape.parts()},
                  {"tableaux", tableaux},
                  {"sum", to_json(sum)},
                  {"ok", report.ok}});
        return report.ok ? kExitOk : 1;
    }
    std::cout << "shape " << to_string(shape) << ": " << report.entries.size()
              << " standard tableaux\n";
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        const auto& entry = report.entries[i];
        std::cout << "T" << (i + 1) << " " << to_string(entry.tableau) << "  C="
                  << to_string(entry.descent.composition) << "  "
                  << to_string(entry.straightened) << "  ";
        switch (entry.cls) {
        case PairingClass::Superstandard:
            std::cout << "SUPERSTANDARD";
            break;
        case PairingClass::Fixed:
            std::cout << "FIXED";
            break;
        case PairingClass::Paired:
            std::cout << "pair T" << (*entry.partner + 1);
            break;
        }
        std::cout << "\n";
    }
    std::cout << "sum = " << serialize(sum) << "\n";
    std::cout << "identity: " << (report.ok ? "OK" : "FAILED") << "\n";
    return report.ok ? kExitOk : 1;
}

int cmd_theta(const std::string& tableau_text, bool as_json) {
    StandardTableau t = standard_tableau_from_json(json::parse(tableau_text));
    ThetaResult result;
    try {
        result = theta(t);
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitThetaDomain;
    }
    Composition c = descent_data(result.image).composition;
    if (as_json) {
        emit(json{{"tableau", to_json(result.image)},
                  {"composition", c.parts()},
                  {"raise_index", result.raise_index}});
        return kExitOk;
    }
    std::cout << to_string(result.image) << "\n";
    std::cout << "C=" << to_string(c) << "\n";
    std::cout << "i=" << result.raise_index << "\n";
    return kExitOk;
}

int cmd_expand(const std::string& expr_text, std::size_t nvars, bool as_json) {
    Expression e = parse_expression(expr_text);
    SparsePolynomial p = evaluate_poly(e, nvars);
    if (as_json)
        emit(to_json(p));
    else
        std::cout << to_string(p) << "\n";
    return kExitOk;
}

int cmd_syt(const std::string& shape_text, bool as_json) {
    Partition shape = partition_arg(shape_text);
    auto tableaux = enumerate_syt(shape);
    if (as_json) {
        json out = json::array();
        for (const auto& t : tableaux) {
            DescentData dd = descent_data(t);
            out.push_back(json{{"rows", to_json(t)},
                               {"composition", dd.composition.parts()},
                               {"descents", dd.descents}});
        }
        emit(out);
        return kExitOk;
    }
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
        DescentData dd = descent_data(tableaux[i]);
        std::cout << "T" << (i + 1) << " " << to_string(tableaux[i]) << "  C="
                  << to_string(dd.composition) << "  descents={";
        for (std::size_t d = 0; d < dd.descents.size(); ++d) {
            if (d)
                std::cout << ",";
            std::cout << dd.descents[d];
        }
        std::cout << "}\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fundamental quasi-symmetric to Schur expansion toolkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto* straighten_cmd =
        app.add_subcommand("straighten", "straighten a composition Schur function");
    {
        auto comp = std::make_shared<std::string>();
        auto trace = std::make_shared<bool>(false);
        auto as_json = std::make_shared<bool>(false);
        straighten_cmd->add_option("composition", *comp, "comma separated parts")
            ->required();
        straighten_cmd->add_flag("--trace", *trace, "print the raise chain");
        straighten_cmd->add_flag("--json", *as_json, "JSON output");
        straighten_cmd->callback(
            [=, &action] { action = [=] { return cmd_straighten(*comp, *trace, *as_json); }; });
    }

    auto* convert_cmd =
        app.add_subcommand("convert", "convert an expression to the Schur basis");
    {
        auto expr = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto check = std::make_shared<bool>(false);
        auto as_json = std::make_shared<bool>(false);
        auto* pos = convert_cmd->add_option("expression", *expr, "expression text");
        convert_cmd->add_option("--input", *input, "read an expansion JSON file")
            ->excludes(pos);
        convert_cmd->add_flag("--check-symmetric", *check,
                              "fail unless the F part is symmetric");
        convert_cmd->add_flag("--json", *as_json, "JSON output");
        convert_cmd->callback([=, &action] {
            if (convert_cmd->count("expression") == 0 && input->empty())
                throw CLI::RequiredError("expression or --input");
            action = [=] { return cmd_convert(*expr, *input, *check, *as_json); };
        });
    }

    auto* verify_cmd =
        app.add_subcommand("verify", "cancellation report for a shape");
    {
        auto shape = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        verify_cmd->add_option("--shape", *shape, "partition, comma separated")
            ->required();
        verify_cmd->add_flag("--json", *as_json, "JSON output");
        verify_cmd->callback(
            [=, &action] { action = [=] { return cmd_verify(*shape, *as_json); }; });
    }

    auto* theta_cmd = app.add_subcommand("theta", "apply the involution to a tableau");
    {
        auto tab = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        theta_cmd->add_option("--tableau", *tab, "tableau as a JSON array of rows")
            ->required();
        theta_cmd->add_flag("--json", *as_json, "JSON output");
        theta_cmd->callback(
            [=, &action] { action = [=] { return cmd_theta(*tab, *as_json); }; });
    }

    auto* expand_cmd =
        app.add_subcommand("expand", "expand an expression into monomials");
    {
        auto expr = std::make_shared<std::string>();
        auto nvars = std::make_shared<std::size_t>(0);
        auto as_json = std::make_shared<bool>(false);
        expand_cmd->add_option("--vars", *nvars, "number of variables")->required();
        expand_cmd->add_option("expression", *expr, "expression text")->required();
        expand_cmd->add_flag("--json", *as_json, "JSON output");
        expand_cmd->callback(
            [=, &action] { action = [=] { return cmd_expand(*expr, *nvars, *as_json); }; });
    }

    auto* syt_cmd = app.add_subcommand("syt", "list standard tableaux of a shape");
    {
        auto shape = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        syt_cmd->add_option("--shape", *shape, "partition, comma separated")->required();
        syt_cmd->add_flag("--json", *as_json, "JSON output");
        syt_cmd->callback(
            [=, &action] { action = [=] { return cmd_syt(*shape, *as_json); }; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return action();
    } catch (const fschur::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
