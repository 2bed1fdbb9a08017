// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ela/serialize.hpp"
#include "ela/verify.hpp"

using namespace ela;

namespace {

int failures = 0;

void report(int k, bool pass, const std::string& detail) {
    std::cout << "criterion " << k << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
    failures += !pass;
}

std::string failing(const Certificate& c) {
    std::string s;
    for (const auto& k : c.checks)
        if (!k.pass) s += " " + k.name;
    return s;
}

struct Range {
    Family f;
    int lo, hi;
};
const Range kDims[] = {{Family::A, 1, 8}, {Family::B, 2, 6}, {Family::C, 2, 8}, {Family::D, 4, 6}};

void criterion1() {
    bool ok = true;
    double worst = 0;
    std::string bad;
    for (const auto& r : kDims)
        for (int n = r.lo; n <= r.hi; ++n) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto c = certify_dimension(r.f, n);
            const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            worst = std::max(worst, s);
            if (!c.overall() || s >= 60) {
                ok = false;
                bad += " " + make_diagram(r.f, n).name();
            }
        }
    std::ostringstream os;
    os << "dimensions A1-8, B2-6, C2-8, D4-6 certified; slowest " << worst << " s" << (bad.empty() ? "" : "; failed:" + bad);
    report(1, ok, os.str());
}

void criterion2() {
    const auto d = make_diagram(Family::C, 4);
    const Q entry = evaluate(words::V(d, 1, 3), rep_C_gl(2)).at(13, 9);
    bool ok = entry == 1;
    std::string detail = "(14,10) entry " + to_string(entry);
    for (int n : {2, 3}) {
        const Q s = evaluate(center_element_C(n).element, rep_C_scalar(n)).at(0, 0);
        ok = ok && s == 2 * n;
        detail += "; scalar(c) at n=" + std::to_string(n) + " is " + to_string(s);
    }
    report(2, ok, detail);
}

void criterion3() {
    bool ok = true;
    std::string detail;
    for (int r : {4, 6}) {
        const auto c = check_oracle(build_table(make_diagram(Family::C, r)), hand_table_C(r), "C");
        ok = ok && c.overall();
        detail += "C" + std::to_string(r) + " " + c.checks[0].witness.substr(0, c.checks[0].witness.find(';')) + "; ";
    }
    const auto c = check_oracle(build_table(make_diagram(Family::D, 5)), hand_table_D(5), "D");
    ok = ok && c.overall();
    detail += "D5 " + c.checks[0].witness;
    report(3, ok, detail);
}

void criterion4() {
    bool ok = true;
    std::string detail;
    for (int n : {2, 3}) {
        const auto d = make_diagram(Family::C, 2 * n);
        Certificate all;
        for (const char* s : {"ideal", "center", "quotient", "weights"}) all.merge(run_suite(s, d));
        ok = ok && all.overall();
        detail += d.name() + " " + std::to_string(all.checks.size()) + " checks" + failing(all) + "; ";
    }
    report(4, ok, detail + "ideal, center, quotient, weights");
}

void criterion5() {
    bool ok = true;
    std::string detail;
    for (int n : {1, 2}) {
        const auto d = make_diagram(Family::D, 2 * n + 1);
        const auto c = run_suite("radical", d);
        ok = ok && c.overall();
        detail += d.name() + " " + std::to_string(c.checks.size()) + " checks" + failing(c) + "; ";
    }
    report(5, ok, detail + "radical");
}

void criterion6() {
    bool ok = true;
    int tables = 0, compared = 0, mutants = 0;
    std::string bad;
    for (const auto& r : kDims)
        for (int n = r.lo; n <= r.hi; ++n) {
            const auto d = make_diagram(r.f, n);
            const auto t = build_table(d);
            const auto cert = certify_table(t, d);
            ++tables;
            bool here = cert.ok() && cert.checked_triples == cert.total_triples;
            if (r.f != Family::D) {
                here = here && table_from_presentation(d).same_constants(t);
                ++compared;
            }
            if (t.size() >= 2) {
                auto m = t;
                const int a = t.size() / 2, b = t.size() - 1, g = (a + b) % t.size();
                if (a != b) {
                    sv::axpy(m.constants[a][b], 1, sv::unit(g));
                    sv::axpy(m.constants[b][a], -1, sv::unit(g));
                    const auto mc = certify_table(m, d);
                    here = here && (!mc.jacobi_ok || !mc.relations_ok);
                    ++mutants;
                }
            }
            if (!here) {
                ok = false;
                bad += " " + d.name();
            }
        }
    report(6, ok,
           std::to_string(tables) + " tables exhaustive Jacobi and relators, " + std::to_string(compared) +
               " matrix/presentation comparisons, " + std::to_string(mutants) + " mutants caught" +
               (bad.empty() ? "" : "; failed:" + bad));
}

std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

void criterion7(const std::string& cli) {
    const char* runs[] = {"verify --suite all --family C --rank 4", "verify --suite radical --family D --rank 5",
                          "verify --suite table --family D --rank 5", "verify --suite oddA --family A --rank 5"};
    bool ok = true;
    int k = 0;
    for (const char* args : runs) {
        std::string out[2];
        for (int i = 0; i < 2; ++i) {
            const std::string path = "acceptance_det_" + std::to_string(k) + "_" + std::to_string(i) + ".json";
            const std::string cmd = "\"" + cli + "\" " + args + " --out " + path + " > /dev/null 2>&1";
            const int rc = std::system(cmd.c_str());
            (void)rc;
            out[i] = slurp(path);
            std::remove(path.c_str());
        }
        ok = ok && !out[0].empty() && out[0] == out[1];
        ++k;
    }
    report(7, ok, std::to_string(k) + " verify commands run twice, certificates byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "ela";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7(cli);
    return failures ? 1 : 0;
}
