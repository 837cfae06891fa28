// rimhook: command-line front end for the rimhook library.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "rimhook/io.hpp"
#include "rimhook/render.hpp"

using namespace rimhook;

namespace {

// Bad user input: malformed flags, unreadable files, invalid JSON or tableaux.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
auto decode(const std::string& what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::exception& e) {
        throw InputError(what + ": " + e.what());
    }
}

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

// Fixture files wrap their input under "start" or "input".
json read_json(const std::string& path) {
    const std::string text = read_text(path);
    json j = decode(path, [&] { return json::parse(text); });
    if (j.is_object()) {
        if (j.contains("start")) return j.at("start");
        if (j.contains("input")) return j.at("input");
    }
    return j;
}

Poset read_poset(const std::string& path) {
    const std::string text = read_text(path);
    return decode(path, [&] { return parse_poset(text); });
}

Partition flag_partition(const std::string& name, const std::string& value) {
    return decode("--" + name, [&] { return parse_partition(value); });
}

Cell flag_cell(const std::string& value) {
    return decode("--root", [&] {
        const auto comma = value.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("expected row,col");
        return Cell{std::stoi(value.substr(0, comma)), std::stoi(value.substr(comma + 1))};
    });
}

struct Options {
    int n = -1;
    std::string shape, type, content, poset, input, root, format = "text", basis = "e";
    int a = 3, b = 1;
    int max_elements = 5;
    int max_k = 6;
    std::optional<unsigned> seed;
    bool list = false;
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int need_n(const Options& o) {
    if (o.n < 0) throw InputError("--n is required");
    if (o.n > 12) throw InputError("--n must be at most 12");
    return o.n;
}

void emit_matrix(const PartitionMatrix& m, const std::string& format) {
    if (format == "json") print(to_json(m));
    else if (format == "csv") std::cout << to_csv(m);
    else std::cout << render(m);
}

int cmd_kostka(const Options& o) {
    if (!o.shape.empty() || !o.content.empty()) {
        if (o.shape.empty() || o.content.empty()) throw InputError("--shape and --content go together");
        const Partition lambda = flag_partition("shape", o.shape);
        const Partition mu = flag_partition("content", o.content);
        if (lambda.size() != mu.size()) throw std::invalid_argument("shape and content have different sizes");
        const auto ts = enumerate_ssyt(lambda, mu);
        if (o.format == "json") {
            json list = json::array();
            for (const auto& t : ts) list.push_back(to_json(t));
            print({{"shape", to_json(lambda)}, {"content", to_json(mu)}, {"count", ts.size()}, {"tableaux", list}});
        } else {
            std::cout << "K" << to_string(lambda) << to_string(mu) << " = " << ts.size() << '\n';
            for (const auto& t : ts) std::cout << '\n' << render(t);
        }
        return 0;
    }
    emit_matrix(kostka_matrix(need_n(o)), o.format);
    return 0;
}

int cmd_inv_kostka(const Options& o) {
    if (!o.shape.empty() || !o.type.empty()) {
        if (o.shape.empty() || o.type.empty()) throw InputError("--shape and --type go together");
        const Partition lambda = flag_partition("shape", o.shape);
        const Partition mu = flag_partition("type", o.type);
        if (lambda.size() != mu.size()) throw std::invalid_argument("shape and type have different sizes");
        const auto ss = enumerate_srht(lambda, mu);
        Integer total = 0;
        for (const auto& s : ss) total += s.sign();
        if (o.format == "json") {
            json list = json::array();
            for (const auto& s : ss) {
                json j = to_json(s);
                j["sign"] = s.sign();
                list.push_back(std::move(j));
            }
            print({{"shape", to_json(lambda)}, {"type", to_json(mu)}, {"signed_count", to_json(total)},
                   {"tableaux", list}});
        } else {
            std::cout << "signed count for shape " << to_string(lambda) << ", type " << to_string(mu) << " = "
                      << total << '\n';
            for (const auto& s : ss) std::cout << "\nsign " << (s.sign() > 0 ? "+1" : "-1") << '\n' << render(s);
        }
        return 0;
    }
    emit_matrix(inverse_kostka_matrix(need_n(o)), o.format);
    return 0;
}

int cmd_verify(const Options& o) {
    const auto rep = verify_identities(need_n(o));
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& r : rep.last_column)
            rows.push_back({{"type", to_json(r.type)},
                            {"inner_product", to_json(r.inner_product)},
                            {"pairs", r.pairs},
                            {"two_cycles", r.two_cycles},
                            {"fixed_points", r.fixed_points},
                            {"involution_ok", r.involution_ok}});
        print({{"n", rep.n},
               {"k_times_inverse_is_identity", rep.k_times_inverse},
               {"inverse_times_k_is_identity", rep.inverse_times_k},
               {"last_column", rows},
               {"ok", rep.ok()}});
    } else {
        std::cout << "n = " << rep.n << '\n'
                  << "K * K^-1 = I: " << (rep.k_times_inverse ? "yes" : "no") << '\n'
                  << "K^-1 * K = I: " << (rep.inverse_times_k ? "yes" : "no") << '\n';
        for (const auto& r : rep.last_column)
            std::cout << "type " << to_string(r.type) << ": sum " << r.inner_product << ", pairs " << r.pairs
                      << ", 2-cycles " << r.two_cycles << ", fixed " << r.fixed_points
                      << (r.involution_ok ? "" : "  FAILED") << '\n';
        std::cout << (rep.ok() ? "all identities hold" : "identity check FAILED") << '\n';
    }
    return rep.ok() ? 0 : 1;
}

int cmd_involve(const Options& o) {
    if (o.input.empty()) throw InputError("--input is required");
    const json j = read_json(o.input);
    const TableauPair p = decode(o.input, [&] { return pair_from_json(j); });
    const auto res = outer_involution_traced(p.srht, p.syt);
    if (o.format == "json") {
        print({{"input", to_json(p)}, {"image", to_json(res.image)}, {"stripped", res.stripped},
               {"trace", to_json(res.trace)}});
    } else {
        std::cout << "input sign " << (p.srht.sign() > 0 ? "+" : "-") << '\n'
                  << render(p) << "\nimage sign " << (res.image.srht.sign() > 0 ? "+" : "-") << '\n'
                  << render(res.image);
    }
    return 0;
}

int cmd_trace(const Options& o) {
    if (o.input.empty()) throw InputError("--input is required");
    const json j = read_json(o.input);
    Trace trace;
    if (j.contains("S")) {
        const TableauPair p = decode(o.input, [&] { return pair_from_json(j); });
        trace = outer_involution_traced(p.srht, p.syt).trace;
    } else {
        const RootedTableau start = decode(o.input, [&] {
            if (j.contains("root")) return rooted_from_json(j);
            if (o.root.empty()) throw std::invalid_argument("a tableau without a root needs --root");
            return RootedTableau::rooted_at(srht_from_json(j), flag_cell(o.root));
        });
        trace = iota(start).second;
    }
    if (!o.shape.empty()) {
        const Partition expect = flag_partition("shape", o.shape);
        const Partition base = Partition::from_cells(trace.front().tableau.base_cells());
        if (base != expect)
            throw std::invalid_argument("the traced tableau has base shape " + to_string(base) + ", not " +
                                        to_string(expect));
    }
    if (o.format == "json") print(to_json(trace));
    else std::cout << render(trace);
    return 0;
}

int cmd_csf(const Options& o) {
    if (o.poset.empty()) throw InputError("--poset is required");
    const Poset p = read_poset(o.poset);
    const auto res = csf(p);
    if (o.format == "json") {
        json counts = json::object();
        for (const auto& [lambda, f] : res.p_tableau_counts) counts[to_string(lambda)] = f;
        print({{"elements", p.size()},
               {"height", p.size() ? height(p) : 0},
               {"e", to_json(res.e_expansion)},
               {"s", to_json(res.s_expansion)},
               {"p_tableau_counts", counts},
               {"e_positive", res.e_expansion.is_positive()}});
    } else {
        const Basis b = decode("--basis", [&] { return parse_basis(o.basis); });
        if (b == Basis::e) std::cout << to_string(res.e_expansion) << '\n';
        else if (b == Basis::s) std::cout << to_string(res.s_expansion) << '\n';
        else std::cout << to_string(chromatic_monomial_expansion(incomparability_graph(p))) << '\n';
    }
    return 0;
}

int cmd_ss_involution(const Options& o) {
    if (o.poset.empty()) throw InputError("--poset is required");
    const Poset p = read_poset(o.poset);
    const auto census = stanley_stembridge_involution(p);
    if (o.format == "json") print(to_json(p, census));
    else std::cout << render(p, census);
    return 0;
}

int cmd_ab_free(const Options& o) {
    if (o.poset.empty()) throw InputError("--poset is required");
    if (o.a < 1 || o.b < 1) throw InputError("--a and --b must be positive");
    const Poset p = read_poset(o.poset);
    const bool free = is_ab_free(p, o.a, o.b);
    if (o.format == "json") print({{"a", o.a}, {"b", o.b}, {"free", free}});
    else std::cout << "(" << o.a << "+" << o.b << ")-free: " << (free ? "yes" : "no") << '\n';
    return 0;
}

int cmd_corpus(const Options& o) {
    if (o.max_elements < 1 || o.max_elements > 7) throw InputError("--max-elements must be between 1 and 7");
    if (o.max_k < 1) throw InputError("--max-k must be positive");
    json sizes = json::array();
    json listing = json::array();
    bool all_ok = true;
    std::size_t total_free = 0;
    for (int n = 1; n <= o.max_elements; ++n) {
        auto posets = enumerate_posets(n);
        if (o.seed) std::shuffle(posets.begin(), posets.end(), std::mt19937(*o.seed));
        std::size_t free = 0, low_height = 0, failures = 0;
        for (const auto& p : posets) {
            if (!is_ab_free(p, 3, 1)) continue;
            ++free;
            const auto res = csf(p);
            const Graph g = incomparability_graph(p);
            bool ok = res.e_expansion.is_positive() || height(p) > 2;
            for (int k = 1; k <= o.max_k; ++k)
                if (evaluate_at_ones(res.e_expansion, k) != chromatic_polynomial_value(g, k)) ok = false;
            if (res.census) {
                ++low_height;
                std::map<Partition, Integer, RevLexLess> fixed;
                for (const auto& [t, k] : res.census->fixed_by_type()) fixed[t] = k;
                for (const auto& [mu, c] : res.e_expansion.coeffs())
                    if (c < 0 || (mu.length() > 2) || fixed[mu] != c) ok = false;
                for (const auto& [mu, k] : fixed)
                    if (res.e_expansion.coefficient(mu) != k) ok = false;
            }
            if (!ok) ++failures;
            if (o.list)
                listing.push_back({{"poset", to_poset_text(p)}, {"e", to_string(res.e_expansion)}, {"ok", ok}});
        }
        total_free += free;
        all_ok = all_ok && failures == 0;
        sizes.push_back({{"elements", n},
                         {"posets", posets.size()},
                         {"free_3_1", free},
                         {"height_at_most_2", low_height},
                         {"failures", failures}});
    }
    if (o.format == "json") {
        json out = {{"sizes", sizes}, {"free_3_1_total", total_free}, {"ok", all_ok}};
        if (o.list) out["posets"] = listing;
        print(out);
    } else {
        for (const auto& s : sizes)
            std::cout << s["elements"] << " elements: " << s["posets"] << " posets, " << s["free_3_1"]
                      << " (3+1)-free, " << s["height_at_most_2"] << " of height <= 2, " << s["failures"]
                      << " failures\n";
        std::cout << "(3+1)-free total: " << total_free << '\n';
        for (const auto& l : listing)
            std::cout << '\n' << l["poset"].get<std::string>() << "X = " << l["e"].get<std::string>() << '\n';
        std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kostka matrices, special rim-hook tableaux and chromatic symmetric functions"};
    app.require_subcommand(1);
    Options o;

    auto fmt = [&](CLI::App* sub, bool csv = false) {
        auto* opt = sub->add_option("--format", o.format, "Output format");
        if (csv) opt->check(CLI::IsMember({"text", "json", "csv"}));
        else opt->check(CLI::IsMember({"text", "json"}));
    };

    auto* kostka = app.add_subcommand("kostka", "Kostka matrix, or the SSYT of one shape and content");
    kostka->add_option("--n", o.n, "Size of the partitions");
    kostka->add_option("--shape", o.shape, "Shape, e.g. [3,2,1]");
    kostka->add_option("--content", o.content, "Content, e.g. [2,2,2]");
    fmt(kostka, true);

    auto* inv = app.add_subcommand("inv-kostka", "Inverse Kostka matrix, or the special rim-hook tableaux of one shape and type");
    inv->add_option("--n", o.n, "Size of the partitions");
    inv->add_option("--shape", o.shape, "Shape");
    inv->add_option("--type", o.type, "Type");
    fmt(inv, true);

    auto* verify = app.add_subcommand("verify", "Check both matrix identities and replay the last-column cancellation");
    verify->add_option("--n", o.n, "Size of the partitions")->required();
    fmt(verify);

    auto* involve = app.add_subcommand("involve", "Apply the pair involution to {\"S\":...,\"T\":...}");
    involve->add_option("--input", o.input, "Pair JSON file, or - for stdin")->required();
    fmt(involve);

    auto* trace = app.add_subcommand("trace", "Trace the rooted involution step by step");
    trace->add_option("--input", o.input, "Rooted tableau, tableau or pair JSON file, or - for stdin")->required();
    trace->add_option("--root", o.root, "Root cell row,col for an unrooted tableau");
    trace->add_option("--shape", o.shape, "Expected shape of the tableau without its root");
    fmt(trace);

    auto* csf_cmd = app.add_subcommand("csf", "Chromatic symmetric function of a (3+1)-free poset");
    csf_cmd->add_option("--poset", o.poset, "Poset file")->required();
    csf_cmd->add_option("--basis", o.basis, "Basis for text output")->check(CLI::IsMember({"e", "s", "m"}));
    fmt(csf_cmd);

    auto* ss = app.add_subcommand("ss-involution", "Pair census of the involution for a poset of height at most two");
    ss->add_option("--poset", o.poset, "Poset file")->required();
    fmt(ss);

    auto* ab = app.add_subcommand("ab-free", "Test whether a poset is (a+b)-free");
    ab->add_option("--poset", o.poset, "Poset file")->required();
    ab->add_option("--a", o.a, "First chain length");
    ab->add_option("--b", o.b, "Second chain length");
    fmt(ab);

    auto* corpus = app.add_subcommand("corpus", "Check every (3+1)-free poset up to a size");
    corpus->add_option("--max-elements", o.max_elements, "Largest poset size");
    corpus->add_option("--max-k", o.max_k, "Largest number of colours in the colouring check");
    corpus->add_option("--seed", o.seed, "Shuffle the processing order");
    corpus->add_flag("--list", o.list, "List every poset with its e-expansion");
    fmt(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (kostka->parsed()) return cmd_kostka(o);
        if (inv->parsed()) return cmd_inv_kostka(o);
        if (verify->parsed()) return cmd_verify(o);
        if (involve->parsed()) return cmd_involve(o);
        if (trace->parsed()) return cmd_trace(o);
        if (csf_cmd->parsed()) return cmd_csf(o);
        if (ss->parsed()) return cmd_ss_involution(o);
        if (ab->parsed()) return cmd_ab_free(o);
        if (corpus->parsed()) return cmd_corpus(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
