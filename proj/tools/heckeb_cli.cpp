// Command-line front end: enumeration, a-values, truncated induction,
// crystal graphs, membership tests, basic sets and decomposition-matrix
// verification, with text, JSON and DOT output.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckeb/a_function.hpp"
#include "heckeb/basic_sets.hpp"
#include "heckeb/crystal.hpp"
#include "heckeb/decomposition.hpp"
#include "heckeb/format.hpp"
#include "heckeb/j_induction.hpp"
#include "heckeb/order.hpp"
#include "heckeb/partition.hpp"

#ifndef HECKEB_INSTALLED_FIXTURE_DIR
#define HECKEB_INSTALLED_FIXTURE_DIR ""
#endif

namespace {

using heckeb::Multipartition;
using heckeb::Partition;
using nlohmann::json;

json mp_json(const Multipartition& m) {
    json arr = json::array();
    for (const auto& comp : m.components())
        arr.push_back(comp.parts());
    return arr;
}

json order_json(const heckeb::Order& o) {
    if (o.is_finite())
        return json(o.value());
    return json(nullptr);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ','))
        out.push_back(std::stoi(token));
    if (out.empty())
        throw std::invalid_argument("expected a comma-separated integer list");
    return out;
}

heckeb::Order parse_order(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "∞")
        return heckeb::Order::infinity();
    return heckeb::Order(std::stoll(text));
}

std::string case_name(heckeb::CaseKind k) {
    switch (k) {
        case heckeb::CaseKind::A: return "A";
        case heckeb::CaseKind::B: return "B";
        case heckeb::CaseKind::C: return "C";
    }
    return "?";
}

std::string beta_status_name(heckeb::BetaStatus s) {
    switch (s) {
        case heckeb::BetaStatus::identity: return "identity";
        case heckeb::BetaStatus::explicit_map: return "explicit";
        case heckeb::BetaStatus::unavailable_requires_canonical_basis:
            return "unavailable-requires-canonical-basis";
    }
    return "?";
}

struct EnumerateArgs {
    int n = 0;
    int r = 1;
    std::string format = "text";
};

int run_enumerate(const EnumerateArgs& args) {
    if (args.r == 1) {
        const auto parts = heckeb::enumerate_partitions(args.n);
        if (args.format == "json") {
            json arr = json::array();
            for (const auto& p : parts)
                arr.push_back(p.parts());
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& p : parts)
                std::cout << heckeb::to_text(p) << "\n";
        }
        return 0;
    }
    const auto mps = heckeb::enumerate_multipartitions(args.n, args.r);
    if (args.format == "json") {
        json arr = json::array();
        for (const auto& m : mps)
            arr.push_back(mp_json(m));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& m : mps)
            std::cout << heckeb::to_text(m) << "\n";
    }
    return 0;
}

struct AValueArgs {
    int n = -1;
    int a = 0;
    int b = 0;
    bool all = false;
    std::string bipartition;
    std::string format = "text";
};

int run_a_value(const AValueArgs& args) {
    const heckeb::WeightParams w(args.a, args.b);
    if (args.all) {
        if (args.n < 0)
            throw std::invalid_argument("a-value --all requires --n");
        const auto mps = heckeb::enumerate_multipartitions(args.n, 2);
        if (args.format == "json") {
            json arr = json::array();
            for (const auto& m : mps)
                arr.push_back({{"bipartition", mp_json(m)}, {"a_value", heckeb::a_value(m, w)}});
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& m : mps)
                std::cout << heckeb::to_text(m) << "\t" << heckeb::a_value(m, w) << "\n";
        }
        return 0;
    }
    const Multipartition m = heckeb::parse_multipartition(args.bipartition, 2);
    if (args.n >= 0 && m.size() != args.n)
        throw std::invalid_argument("a-value: bipartition size does not match --n");
    const long long value = heckeb::a_value(m, w);
    if (args.format == "json")
        std::cout << json({{"bipartition", mp_json(m)}, {"a_value", value}}).dump(2) << "\n";
    else
        std::cout << value << "\n";
    return 0;
}

struct JInduceArgs {
    int a = 0;
    int b = 0;
    int n = -1;
    bool all = false;
    std::string partition;
    std::string format = "text";
};

int run_j_induce(const JInduceArgs& args) {
    const heckeb::WeightParams w(args.a, args.b);
    if (args.all) {
        if (args.n < 0)
            throw std::invalid_argument("j-induce --all requires --n");
        const auto parts = heckeb::enumerate_partitions(args.n);
        if (args.format == "json") {
            json arr = json::array();
            for (const auto& nu : parts)
                arr.push_back({{"partition", nu.parts()},
                               {"image", mp_json(heckeb::j_induce(nu, w))}});
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& nu : parts)
                std::cout << heckeb::to_text(nu) << "\t"
                          << heckeb::to_text(heckeb::j_induce(nu, w)) << "\n";
        }
        return 0;
    }
    const Partition nu = heckeb::parse_partition(args.partition);
    const Multipartition image = heckeb::j_induce(nu, w);
    if (args.format == "json")
        std::cout << json({{"partition", nu.parts()}, {"image", mp_json(image)}}).dump(2)
                  << "\n";
    else
        std::cout << heckeb::to_text(image) << "\n";
    return 0;
}

struct CrystalArgs {
    int e = 2;
    int n = 0;
    std::string charges;
    std::string order = "flotw";
    std::string format = "text";
};

int run_crystal(const CrystalArgs& args) {
    const auto u = parse_int_list(args.charges);
    const auto order = args.order == "ariki" ? heckeb::NodeOrder::ariki
                                             : heckeb::NodeOrder::flotw;
    const auto graph = heckeb::crystal_graph(args.n, u, args.e, order);
    if (args.format == "dot") {
        heckeb::write_dot(graph, std::cout);
    } else if (args.format == "json") {
        std::cout << heckeb::crystal_json(graph) << "\n";
    } else {
        for (size_t n = 0; n < graph.levels.size(); ++n)
            for (const auto& v : graph.levels[n])
                std::cout << "vertex\t" << n << "\t" << heckeb::to_text(v) << "\n";
        for (const auto& edge : graph.edges)
            std::cout << "edge\t" << heckeb::to_text(edge.from) << "\t"
                      << heckeb::to_text(edge.to) << "\t" << edge.res << "\n";
    }
    return 0;
}

struct FlotwArgs {
    int e = 2;
    int n = -1;
    bool all = false;
    std::string charges;
    std::string multipartition;
    std::string format = "text";
};

int run_flotw(const FlotwArgs& args) {
    const auto u = parse_int_list(args.charges);
    if (args.all) {
        if (args.n < 0)
            throw std::invalid_argument("flotw --all requires --n");
        std::vector<Multipartition> members;
        for (const auto& m :
             heckeb::enumerate_multipartitions(args.n, static_cast<int>(u.size())))
            if (heckeb::flotw_test(m, u, args.e))
                members.push_back(m);
        if (args.format == "json") {
            json arr = json::array();
            for (const auto& m : members)
                arr.push_back(mp_json(m));
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& m : members)
                std::cout << heckeb::to_text(m) << "\n";
        }
        return 0;
    }
    const Multipartition m =
        heckeb::parse_multipartition(args.multipartition, static_cast<int>(u.size()));
    const bool member = heckeb::flotw_test(m, u, args.e);
    if (args.format == "json")
        std::cout << json({{"multipartition", mp_json(m)}, {"member", member}}).dump(2) << "\n";
    else
        std::cout << (member ? "true" : "false") << "\n";
    return 0;
}

struct BasicSetArgs {
    int n = 1;
    int a = 0;
    int b = 0;
    std::string xi_order;
    int char_p = 0;
    std::string format = "text";
    bool json_flag = false;
};

void print_mp_list(const std::string& name, const std::vector<Multipartition>& v) {
    std::cout << name << " (" << v.size() << "):\n";
    for (const auto& m : v)
        std::cout << "  " << heckeb::to_text(m) << "\n";
}

int run_basic_set(const BasicSetArgs& args) {
    const heckeb::SpecializationParams params{
        args.n, heckeb::WeightParams(args.a, args.b), parse_order(args.xi_order), args.char_p};
    const auto c = heckeb::resolve_case(params);
    const auto result = heckeb::basic_set(c);
    const std::string format = args.json_flag ? "json" : args.format;
    if (format == "json") {
        json doc;
        doc["case"] = case_name(c.kind);
        doc["e"] = order_json(c.e);
        doc["s"] = c.s ? json(*c.s) : json(nullptr);
        doc["d_mod_e"] = c.d_mod_e ? json(*c.d_mod_e) : json(nullptr);
        doc["l_good"] = c.l_good;
        doc["lambda"] = json::array();
        for (const auto& m : result.lambda)
            doc["lambda"].push_back(mp_json(m));
        doc["basic"] = json::array();
        for (const auto& m : result.basic)
            doc["basic"].push_back(mp_json(m));
        doc["beta_status"] = beta_status_name(result.beta_status);
        if (result.beta) {
            doc["beta"] = json::array();
            for (const auto& [from, to] : *result.beta)
                doc["beta"].push_back({{"from", mp_json(from)}, {"to", mp_json(to)}});
        } else {
            doc["beta"] = json(nullptr);
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "case: " << case_name(c.kind) << "\n";
    std::cout << "e: " << heckeb::to_string(c.e) << "\n";
    if (c.s)
        std::cout << "s: " << *c.s << "\n";
    std::cout << "L-good: " << (c.l_good ? "yes" : "no") << "\n";
    print_mp_list("Lambda", result.lambda);
    print_mp_list("B", result.basic);
    if (result.beta) {
        std::cout << "beta (" << beta_status_name(result.beta_status) << "):\n";
        for (const auto& [from, to] : *result.beta)
            std::cout << "  " << heckeb::to_text(from) << " -> " << heckeb::to_text(to) << "\n";
    } else {
        std::cout << "beta: " << beta_status_name(result.beta_status) << "\n";
    }
    return 0;
}

struct ParamsArgs {
    int n = 1;
    int a = 0;
    int b = 0;
    std::string xi_order;
    int char_p = 0;
    std::string format = "text";
};

int run_params(const ParamsArgs& args) {
    const heckeb::WeightParams w(args.a, args.b);
    const heckeb::SpecializationParams params{args.n, w, parse_order(args.xi_order),
                                              args.char_p};
    const auto c = heckeb::resolve_case(params);
    if (args.format == "json") {
        json doc;
        doc["a"] = w.a;
        doc["b"] = w.b;
        doc["r"] = w.has_quotient() ? json(w.quotient()) : json(nullptr);
        doc["b_prime"] = w.has_quotient() ? json(w.remainder()) : json(nullptr);
        doc["q_is_one"] = c.q_is_one;
        doc["case"] = case_name(c.kind);
        doc["e"] = order_json(c.e);
        doc["d_mod_e"] = c.d_mod_e ? json(*c.d_mod_e) : json(nullptr);
        doc["s"] = c.s ? json(*c.s) : json(nullptr);
        doc["f_n_zero"] = c.f_n_zero;
        doc["l_good"] = c.l_good;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << "a: " << w.a << "\n";
    std::cout << "b: " << w.b << "\n";
    if (w.has_quotient()) {
        std::cout << "r: " << w.quotient() << "\n";
        std::cout << "b': " << w.remainder() << "\n";
    }
    std::cout << "q=1: " << (c.q_is_one ? "yes" : "no") << "\n";
    std::cout << "case: " << case_name(c.kind) << "\n";
    std::cout << "e: " << heckeb::to_string(c.e) << "\n";
    if (c.d_mod_e)
        std::cout << "d mod e: " << *c.d_mod_e << "\n";
    if (c.s)
        std::cout << "s: " << *c.s << "\n";
    std::cout << "f_n=0: " << (c.f_n_zero ? "yes" : "no") << "\n";
    std::cout << "L-good: " << (c.l_good ? "yes" : "no") << "\n";
    return 0;
}

struct VerifyArgs {
    std::string matrix;
    int a = 0;
    int b = 0;
    std::string format = "text";
};

heckeb::DecompositionMatrix load_matrix_file(const std::string& user_path) {
    std::vector<std::string> candidates;
    if (!user_path.empty()) {
        candidates.push_back(user_path);
    } else {
        candidates.push_back("fixtures/b3_q1_qm1.json");
        const std::string installed = HECKEB_INSTALLED_FIXTURE_DIR;
        if (!installed.empty())
            candidates.push_back(installed + "/b3_q1_qm1.json");
    }
    for (const auto& path : candidates) {
        std::ifstream in(path);
        if (in)
            return heckeb::DecompositionMatrix::load(in);
    }
    throw std::invalid_argument("verify: cannot open matrix file (tried " +
                                candidates.front() + ")");
}

int run_verify(const VerifyArgs& args) {
    const auto d = load_matrix_file(args.matrix);
    const heckeb::WeightParams w(args.a, args.b);
    heckeb::AValueMap avals;
    for (const auto& row : d.rows())
        avals.emplace(row, heckeb::a_value(row, w));

    const auto delta = heckeb::verify_delta(d);
    const auto extraction = heckeb::extract_basic_set(d, avals);
    heckeb::DeltaReport delta_a;
    if (extraction.ok) {
        delta_a = heckeb::verify_delta_a(d, avals, extraction.basic, extraction.beta);
    } else {
        delta_a.ok = false;
        delta_a.violations = extraction.violations;
    }

    if (args.format == "json") {
        json doc;
        doc["delta"] = {{"ok", delta.ok}, {"violations", delta.violations}};
        doc["delta_a"] = {{"ok", delta_a.ok}, {"violations", delta_a.violations}};
        doc["beta"] = json::array();
        for (const auto& [from, to] : extraction.beta)
            doc["beta"].push_back({{"from", mp_json(from)}, {"to", mp_json(to)}});
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "Δ: " << (delta.ok ? "OK" : "FAIL") << "\n";
        for (const auto& v : delta.violations)
            std::cout << "  - " << v << "\n";
        std::cout << "Δ_a: " << (delta_a.ok ? "OK" : "FAIL") << "\n";
        for (const auto& v : delta_a.violations)
            std::cout << "  - " << v << "\n";
        if (!extraction.beta.empty()) {
            std::cout << "β:\n";
            for (const auto& [from, to] : extraction.beta)
                std::cout << "  " << heckeb::to_text(from) << " -> " << heckeb::to_text(to)
                          << "\n";
        }
    }
    return delta.ok && delta_a.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unequal-parameter type-B Hecke algebra combinatorics"};
    app.require_subcommand(1);

    EnumerateArgs enum_args;
    auto* enum_cmd = app.add_subcommand("enumerate", "List partitions or multipartitions");
    enum_cmd->add_option("--n", enum_args.n, "Total size")->required();
    enum_cmd->add_option("--r", enum_args.r, "Number of components")
        ->check(CLI::PositiveNumber);
    enum_cmd->add_option("--format", enum_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    AValueArgs a_args;
    auto* a_cmd = app.add_subcommand("a-value", "Lusztig a-invariants for weights (a, b)");
    a_cmd->add_option("--n", a_args.n, "Rank n");
    a_cmd->add_option("--a", a_args.a, "Weight of the braid generators")->required();
    a_cmd->add_option("--b", a_args.b, "Weight of the special generator")->required();
    auto* a_all = a_cmd->add_flag("--all", a_args.all, "Tabulate all bipartitions of n");
    a_cmd->add_option("--bipartition", a_args.bipartition, "Single bipartition, e.g. \"(2|1)\"")
        ->excludes(a_all);
    a_cmd->add_option("--format", a_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    JInduceArgs j_args;
    auto* j_cmd = app.add_subcommand("j-induce", "Truncated induction of partitions");
    j_cmd->add_option("--a", j_args.a, "Weight of the braid generators")->required();
    j_cmd->add_option("--b", j_args.b, "Weight of the special generator")->required();
    j_cmd->add_option("--n", j_args.n, "Rank n (with --all)");
    auto* j_all = j_cmd->add_flag("--all", j_args.all, "Tabulate all partitions of n");
    j_cmd->add_option("--partition", j_args.partition, "Single partition, e.g. \"3,1\"")
        ->excludes(j_all);
    j_cmd->add_option("--format", j_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CrystalArgs crystal_args;
    auto* crystal_cmd = app.add_subcommand("crystal", "Crystal graph up to a given size");
    crystal_cmd->add_option("--e", crystal_args.e, "Quantum characteristic e >= 2")->required();
    crystal_cmd->add_option("--u", crystal_args.charges, "Charges, e.g. \"-1,0\"")->required();
    crystal_cmd->add_option("--n", crystal_args.n, "Maximal size")->required();
    crystal_cmd->add_option("--order", crystal_args.order, "Node order")
        ->check(CLI::IsMember({"flotw", "ariki"}));
    crystal_cmd->add_option("--format", crystal_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    FlotwArgs flotw_args;
    auto* flotw_cmd =
        app.add_subcommand("flotw", "Non-recursive crystal membership (sorted charges)");
    flotw_cmd->add_option("--e", flotw_args.e, "Quantum characteristic e >= 2")->required();
    flotw_cmd->add_option("--u", flotw_args.charges, "Charges, e.g. \"0,1\"")->required();
    auto* flotw_all = flotw_cmd->add_flag("--all", flotw_args.all, "List all members of size n");
    flotw_cmd->add_option("--n", flotw_args.n, "Total size (with --all)");
    flotw_cmd
        ->add_option("--multipartition", flotw_args.multipartition,
                     "Single multipartition, e.g. \"(2|1)\"")
        ->excludes(flotw_all);
    flotw_cmd->add_option("--format", flotw_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    BasicSetArgs basic_args;
    auto* basic_cmd = app.add_subcommand("basic-set", "Canonical basic set for a specialization");
    basic_cmd->add_option("--n", basic_args.n, "Rank n")->required();
    basic_cmd->add_option("--a", basic_args.a, "Weight of the braid generators")->required();
    basic_cmd->add_option("--b", basic_args.b, "Weight of the special generator")->required();
    basic_cmd->add_option("--xi-order", basic_args.xi_order, "Order of xi (integer or 'inf')")
        ->required();
    basic_cmd->add_option("--char", basic_args.char_p, "Field characteristic (0 or prime)");
    basic_cmd->add_option("--format", basic_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    basic_cmd->add_flag("--json", basic_args.json_flag, "Shorthand for --format json");

    ParamsArgs params_args;
    auto* params_cmd = app.add_subcommand("params", "Resolved specialization data");
    params_cmd->add_option("--n", params_args.n, "Rank n")->required();
    params_cmd->add_option("--a", params_args.a, "Weight of the braid generators")->required();
    params_cmd->add_option("--b", params_args.b, "Weight of the special generator")->required();
    params_cmd->add_option("--xi-order", params_args.xi_order, "Order of xi (integer or 'inf')")
        ->required();
    params_cmd->add_option("--char", params_args.char_p, "Field characteristic (0 or prime)");
    params_cmd->add_option("--format", params_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "Check a decomposition matrix and extract the basic set");
    verify_cmd->add_option("--matrix", verify_args.matrix, "Matrix JSON file");
    verify_cmd->add_option("--a", verify_args.a, "Weight of the braid generators")->required();
    verify_cmd->add_option("--b", verify_args.b, "Weight of the special generator")->required();
    verify_cmd->add_option("--format", verify_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (enum_cmd->parsed())
            return run_enumerate(enum_args);
        if (a_cmd->parsed()) {
            if (!a_args.all && a_args.bipartition.empty())
                throw std::invalid_argument("a-value: need --all or --bipartition");
            return run_a_value(a_args);
        }
        if (j_cmd->parsed()) {
            if (!j_args.all && j_args.partition.empty())
                throw std::invalid_argument("j-induce: need --all or --partition");
            return run_j_induce(j_args);
        }
        if (crystal_cmd->parsed())
            return run_crystal(crystal_args);
        if (flotw_cmd->parsed()) {
            if (!flotw_args.all && flotw_args.multipartition.empty())
                throw std::invalid_argument("flotw: need --all or --multipartition");
            return run_flotw(flotw_args);
        }
        if (basic_cmd->parsed())
            return run_basic_set(basic_args);
        if (params_cmd->parsed())
            return run_params(params_args);
        if (verify_cmd->parsed())
            return run_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
