// ela: dimension certificates and verification suites for electrical Lie algebras.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ela/errors.hpp"
#include "ela/serialize.hpp"
#include "ela/verify.hpp"

using namespace ela;

namespace {

constexpr int kPass = 0, kFail = 1, kDiverged = 2, kUsage = 3;

struct Config {
    std::string family;
    int rank = 0;
    std::string suite = "all";
    std::string format = "text";
    std::string out;
    std::size_t max_iter = 0;
    int threads = 1;
};

int rank_cap(Family f) { return f == Family::A ? 12 : 8; }

DynkinDiagram diagram_of(const Config& c) {
    const Family f = parse_family(c.family);
    if (c.rank > rank_cap(f))
        throw UnsupportedType("rank " + std::to_string(c.rank) + " above the cap " + std::to_string(rank_cap(f)) +
                              " for type " + c.family);
    return make_diagram(f, c.rank);
}

std::optional<std::size_t> cap_of(const Config& c) {
    if (c.max_iter) return c.max_iter;
    return std::nullopt;
}

void emit(const Config& c, const Json& j, const std::string& text) {
    if (!c.out.empty()) {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) throw UnsupportedType("cannot write " + c.out);
        f << dump(j);
    }
    if (c.format == "json" && c.out.empty())
        std::cout << dump(j);
    else
        std::cout << text;
}

std::string check_lines(const Certificate& cert) {
    std::string s;
    for (const auto& k : cert.checks)
        s += std::string(k.pass ? "PASS " : "FAIL ") + k.name + (k.witness.empty() ? "" : "  " + k.witness) + "\n";
    return s;
}

std::string value_of(const Certificate& c, const std::string& key) {
    for (const auto& [k, v] : c.values)
        if (k == key) return v;
    return "?";
}

int cmd_dim(const Config& c) {
    const auto d = diagram_of(c);
    const Certificate cert = certify_dimension(d.family, d.rank, cap_of(c), c.threads);
    std::string text = d.name() + ": upper " + value_of(cert, "upper") + ", lower " + value_of(cert, "lower") +
                       " (" + value_of(cert, "provenance") + ")\n";
    if (cert.overall())
        text += "dim = " + value_of(cert, "dimension") + " (certified)\n";
    else
        text += check_lines(cert) + "dim not certified\n";
    emit(c, to_json(cert), text);
    return cert.overall() ? kPass : kFail;
}

int cmd_verify(const Config& c) {
    const auto d = diagram_of(c);
    const Certificate cert = run_suite(c.suite, d, SuiteOptions{cap_of(c), c.threads});
    std::size_t passed = 0;
    for (const auto& k : cert.checks) passed += k.pass;
    const std::string text = check_lines(cert) + d.name() + " " + c.suite + ": " + std::to_string(passed) + "/" +
                             std::to_string(cert.checks.size()) + " checks, " +
                             (cert.overall() ? "pass" : "FAIL") + "\n";
    emit(c, to_json(cert), text);
    return cert.overall() ? kPass : kFail;
}

int cmd_table(const Config& c) {
    const auto d = diagram_of(c);
    const StructureTable t = build_table(d, cap_of(c));
    std::string text;
    for (int a = 0; a < t.size(); ++a) text += std::to_string(a) + "  " + format_tree(d, t.words[a]) + "\n";
    emit(c, to_json(t), text);
    return kPass;
}

int cmd_rep(const Config& c) {
    const auto d = diagram_of(c);
    const Representation rho = faithful_representation(d);
    emit(c, to_json(rho), d.name() + ": matrices of size " + std::to_string(rho.dim) + "\n");
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact structure constants and certificates for electrical Lie algebras"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s) {
        s->add_option("--family", c.family, "A, B, C or D")->required();
        s->add_option("--rank", c.rank, "rank n")->required()->check(CLI::PositiveNumber);
        s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        s->add_option("--out", c.out, "write the JSON document here");
        s->add_option("--max-iter", c.max_iter, "closure equation cap (default 10|Phi+|^2 or ELA_ITER_CAP)");
        s->add_option("--threads", c.threads, "worker threads for table checks")->check(CLI::PositiveNumber);
    };
    auto* dim = app.add_subcommand("dim", "certify the dimension");
    common(dim);
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    common(ver);
    ver->add_option("--suite", c.suite, "suite name")->check(CLI::IsMember(suite_names()));
    auto* tab = app.add_subcommand("table", "print the structure table");
    common(tab);
    auto* rep = app.add_subcommand("rep", "print the matrix model (types A, B, C)");
    common(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        if (*dim) return cmd_dim(c);
        if (*ver) return cmd_verify(c);
        if (*tab) return cmd_table(c);
        if (*rep) return cmd_rep(c);
    } catch (const ClosureDiverged& e) {
        std::cerr << "closure diverged: " << e.what() << "\n";
        return kDiverged;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
