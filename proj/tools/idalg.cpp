// Command-line front end: exact Hasse-derivation checks, iterative
// differential modules over F_p(t), q-Mahler systems over Q(z), and
// relation discovery among power series.
//
// Exit codes: 0 = success / check passed, 1 = mathematical failure
// (an axiom check or verification failed), 2 = input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <idalg/idalg.hpp>

using json = nlohmann::ordered_json;
using namespace idalg;

namespace {

constexpr int EXIT_PASS = 0;
constexpr int EXIT_MATH_FAIL = 1;
constexpr int EXIT_INPUT = 2;

void write_json(const std::string& path, const json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw parameter_error("cannot write report file: " + path);
    out << j.dump(2) << "\n";
}

std::vector<std::int64_t> parse_digit_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (item.empty()) throw parameter_error("empty entry in digit list");
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw parameter_error("digit list is empty");
    return out;
}

// --- hasse check: random-sample verification of the three axioms ---
int cmd_hasse_check(std::int64_t p, long bound, const std::string& jsonpath) {
    json rep;
    rep["command"] = "hasse check";
    bool ok = true;
    std::string witness;
    auto run_field = [&](auto K, const char* name) {
        std::mt19937 rng(12345u);
        std::uniform_int_distribution<long> dd(0, 8), dc(-6, 6);
        using F = decltype(K);
        auto rand_poly = [&]() {
            Poly<F> f;
            long d = dd(rng);
            for (long i = 0; i <= d; ++i) f.c.push_back(K.from_int(dc(rng)));
            p_trim(K, f);
            return f;
        };
        for (int trial = 0; trial < 40 && ok; ++trial) {
            auto f = rand_poly(), g = rand_poly();
            // Leibniz
            for (long i = 0; i <= 12 && ok; ++i) {
                auto lhs = hasse_apply(K, i, p_mul(K, f, g));
                auto rhs = p_zero(K);
                for (long j = 0; j <= i; ++j)
                    rhs = p_add(K, rhs, p_mul(K, hasse_apply(K, j, f), hasse_apply(K, i - j, g)));
                if (!p_eq(K, lhs, rhs)) {
                    ok = false;
                    witness = std::string("Leibniz fails over ") + name + " at i=" + std::to_string(i);
                }
            }
            // composition
            for (long i = 0; i <= bound && ok; ++i)
                for (long j = 0; i + j <= bound && ok; ++j) {
                    auto [lhs, rhs] = hasse_compose(K, i, j, f);
                    if (!p_eq(K, lhs, rhs)) {
                        ok = false;
                        witness = std::string("composition fails over ") + name + " at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")";
                    }
                }
        }
    };
    if (p == 0) run_field(RationalField{}, "Q");
    else run_field(PrimeField(p), "F_p");
    rep["field"] = p == 0 ? "Q" : ("F_" + std::to_string(p));
    rep["bound"] = bound;
    rep["pass"] = ok;
    if (!ok) rep["witness"] = witness;
    std::cout << (ok ? "axioms hold" : ("FAIL: " + witness)) << "\n";
    write_json(jsonpath, rep);
    return ok ? EXIT_PASS : EXIT_MATH_FAIL;
}

int cmd_hasse_apply(std::int64_t p, long i, const std::string& exprtext,
                    const std::string& jsonpath) {
    json rep;
    rep["command"] = "hasse apply";
    rep["i"] = i;
    std::string result;
    if (p == 0) {
        RationalField Q;
        auto f = parse_expr(Q, exprtext);
        result = render_ratfun(Q, hasse_apply(Q, i, f), "t");
    } else {
        PrimeField K(p);
        auto f = parse_expr(K, exprtext);
        result = render_ratfun(K, hasse_apply(K, i, f), "t");
    }
    rep["input"] = exprtext;
    rep["result"] = result;
    std::cout << result << "\n";
    write_json(jsonpath, rep);
    return EXIT_PASS;
}

IDModule module_from_args(std::int64_t p, const std::string& digits, const std::string& file) {
    if (!file.empty()) {
        auto sf = load_system_file(file);
        auto pp = std::stoll(sf.header_req("p"));
        auto rank = std::stoul(sf.header_req("rank"));
        auto level = std::stol(sf.header_req("level"));
        PrimeField K(pp);
        FpRatRing R{K};
        std::vector<FpRatMat> A;
        for (long n = 0; n <= level; ++n) {
            auto name = "A" + std::to_string(n);
            auto it = sf.matrices.find(name);
            if (it == sf.matrices.end()) throw parameter_error("missing matrix " + name);
            auto m = mat_zero(R, rank, rank);
            for (auto& [idx, text] : it->second) {
                if (idx.first > static_cast<long>(rank) || idx.second > static_cast<long>(rank))
                    throw parameter_error("matrix index out of range in " + name);
                m.at(static_cast<std::size_t>(idx.first - 1),
                     static_cast<std::size_t>(idx.second - 1)) = parse_expr(K, text);
            }
            A.push_back(std::move(m));
        }
        return idmod_build(K, std::move(A));
    }
    if (digits.empty()) throw parameter_error("need --digits or --file");
    return example_system(p, parse_digit_list(digits));
}

int cmd_idmod_check(std::int64_t p, const std::string& digits, const std::string& file,
                    long B, const std::string& jsonpath) {
    auto M = module_from_args(p, digits, file);
    if (B <= 0) B = M.imax;
    auto repc = check_iterative(M, B);
    json rep;
    rep["command"] = "idmod check";
    rep["p"] = M.K.p();
    rep["rank"] = M.rank;
    rep["level"] = M.level;
    rep["bound"] = B;
    rep["pass"] = repc.pass;
    if (!repc.pass) {
        rep["witness_i"] = repc.fail_i;
        rep["witness_j"] = repc.fail_j;
        rep["detail"] = repc.detail;
    }
    std::cout << (repc.pass ? "iterative axioms hold up to B=" + std::to_string(B)
                            : "FAIL: " + repc.detail)
              << "\n";
    write_json(jsonpath, rep);
    return repc.pass ? EXIT_PASS : EXIT_MATH_FAIL;
}

int cmd_idmod_sections(std::int64_t p, const std::string& digits, const std::string& file,
                       std::int64_t N, const std::string& jsonpath) {
    auto M = module_from_args(p, digits, file);
    auto sb = horizontal_sections(M, N);
    json rep;
    rep["command"] = "idmod sections";
    rep["p"] = M.K.p();
    rep["order"] = N;
    rep["dimension"] = sb.basis.size();
    json basis = json::array();
    for (auto& v : sb.basis) {
        json vec = json::array();
        for (auto& s : v) vec.push_back(ts_to_string(M.K, s));
        basis.push_back(vec);
    }
    rep["basis"] = basis;
    std::cout << "dimension " << sb.basis.size() << "\n";
    for (auto& v : sb.basis) {
        std::cout << "  (";
        for (std::size_t c = 0; c < v.size(); ++c)
            std::cout << (c ? ", " : "") << ts_to_string(M.K, v[c]);
        std::cout << ")\n";
    }
    write_json(jsonpath, rep);
    return EXIT_PASS;
}

int cmd_idmod_example(std::int64_t p, const std::string& digits, const std::string& jsonpath) {
    auto M = example_system(p, parse_digit_list(digits));
    json rep;
    rep["command"] = "idmod example";
    rep["p"] = p;
    rep["rank"] = M.rank;
    rep["level"] = M.level;
    json mats = json::array();
    for (auto& A : M.A) {
        json m = json::array();
        for (std::size_t i = 0; i < A.rows; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < A.cols; ++j)
                row.push_back(render_ratfun(M.K, A.at(i, j), "t"));
            m.push_back(row);
        }
        mats.push_back(m);
    }
    rep["matrices"] = mats;
    std::cout << rep.dump(2) << "\n";
    write_json(jsonpath, rep);
    return EXIT_PASS;
}

int cmd_idmod_b1(std::int64_t p, std::int64_t a0, long deg, const std::string& jsonpath) {
    PrimeField K(p);
    auto sols = b1_bruteforce(p, a0, deg);
    auto verdict = b1_case_analysis(p, a0);
    json rep;
    rep["command"] = "idmod b1";
    rep["p"] = p;
    rep["a0"] = a0;
    rep["deg"] = deg;
    json list = json::array();
    for (auto& [f, g] : sols) {
        json pr;
        pr["f"] = render_poly(K, f, "t");
        pr["g"] = render_poly(K, g, "t");
        list.push_back(pr);
    }
    rep["solutions"] = list;
    rep["branch_a_refuted"] = verdict.branch_a_refuted;
    rep["branch_b_refuted"] = verdict.branch_b_refuted;
    rep["both_refuted"] = verdict.both_refuted();
    if (sols.empty()) std::cout << "no solutions\n";
    else
        for (auto& [f, g] : sols)
            std::cout << "f = " << render_poly(K, f, "t") << ", g = " << render_poly(K, g, "t")
                      << "\n";
    std::cout << "case analysis: branch A " << (verdict.branch_a_refuted ? "refuted" : "inconclusive")
              << ", branch B " << (verdict.branch_b_refuted ? "refuted" : "inconclusive") << "\n";
    write_json(jsonpath, rep);
    return EXIT_PASS;
}

MahlerSystem mahler_from_file(const std::string& file) {
    auto sf = load_system_file(file);
    long q = std::stol(sf.header_req("q"));
    auto rank = std::stoul(sf.header_req("rank"));
    QField Q;
    QRatRing R{Q};
    auto it = sf.matrices.find("A");
    if (it == sf.matrices.end()) throw parameter_error("missing matrix A");
    auto m = mat_zero(R, rank, rank);
    for (auto& [idx, text] : it->second) {
        if (idx.first > static_cast<long>(rank) || idx.second > static_cast<long>(rank))
            throw parameter_error("matrix index out of range in A");
        m.at(static_cast<std::size_t>(idx.first - 1), static_cast<std::size_t>(idx.second - 1)) =
            parse_expr(Q, text);
    }
    return mahler_make(q, std::move(m));
}

int cmd_mahler_solve(const std::string& file, std::int64_t N, const std::string& jsonpath) {
    QField Q;
    auto sys = mahler_from_file(file);
    auto basis = admissible_initial(sys);
    json rep;
    rep["command"] = "mahler solve";
    rep["q"] = sys.q;
    rep["rank"] = sys.n;
    rep["order"] = N;
    rep["initial_space_dimension"] = basis.size();
    json sols = json::array();
    bool all_residuals_zero = true;
    for (auto& f0 : basis) {
        auto sol = solve_series(sys, f0, N);
        bool rz = residual_is_zero(sys, sol);
        all_residuals_zero = all_residuals_zero && rz;
        json s;
        json comps = json::array();
        for (auto& c : sol.components) comps.push_back(ts_to_string(Q, c, "z"));
        s["components"] = comps;
        s["residual_zero"] = rz;
        sols.push_back(s);
    }
    rep["solutions"] = sols;
    rep["pass"] = all_residuals_zero;
    std::cout << "initial space dimension " << basis.size() << ", residuals "
              << (all_residuals_zero ? "all zero" : "NONZERO") << "\n";
    for (auto& s : sols) std::cout << "  " << s["components"].dump() << "\n";
    write_json(jsonpath, rep);
    return all_residuals_zero ? EXIT_PASS : EXIT_MATH_FAIL;
}

int cmd_mahler_singular(const std::string& file, const std::string& alpha,
                        const std::string& jsonpath) {
    auto sys = mahler_from_file(file);
    auto a = BigRational::parse(alpha);
    auto v = singularity_check(sys, a);
    json rep;
    rep["command"] = "mahler singular";
    rep["alpha"] = a.str();
    rep["singular"] = v.singular;
    if (v.singular) {
        rep["witness_r"] = v.r;
        rep["which"] = v.which == SingularKind::APole ? "A-pole" : "A-inverse-pole";
    }
    rep["scan_bound"] = v.scan_bound;
    if (v.singular)
        std::cout << "singular at r=" << v.r << " ("
                  << (v.which == SingularKind::APole ? "pole of A" : "pole of A^{-1}") << ")\n";
    else std::cout << "not singular (orbit scanned to r=" << v.scan_bound << ")\n";
    write_json(jsonpath, rep);
    return EXIT_PASS;
}

int cmd_mahler_eval(const std::string& file, const std::string& alpha, std::int64_t N, long steps,
                    const std::string& init, const std::string& jsonpath) {
    QField Q;
    auto sys = mahler_from_file(file);
    auto a = BigRational::parse(alpha);
    std::vector<BigRational> f0;
    if (!init.empty()) {
        std::stringstream ss(init);
        std::string item;
        while (std::getline(ss, item, ',')) f0.push_back(BigRational::parse(strip(item)));
    } else {
        auto basis = admissible_initial(sys);
        if (basis.empty()) throw parameter_error("no admissible initial vector");
        f0 = basis[0];
    }
    auto sol = solve_series(sys, f0, N);
    auto vals = evaluate_at_point(sys, sol, a, steps);
    json rep;
    rep["command"] = "mahler eval";
    rep["alpha"] = a.str();
    rep["order"] = N;
    rep["steps"] = steps;
    json out = json::array();
    for (auto& [v, e] : vals) {
        json entry;
        entry["value"] = v;
        entry["error"] = e;
        out.push_back(entry);
    }
    rep["values"] = out;
    for (auto& [v, e] : vals)
        std::cout << v << " (error <= " << e << ")\n";
    write_json(jsonpath, rep);
    return EXIT_PASS;
}

std::vector<QSeries> series_from_file(const std::string& file, std::int64_t N, bool adjoin_z) {
    auto sf = load_system_file(file);
    QField Q;
    std::vector<QSeries> fs;
    if (adjoin_z) fs.push_back(ts_from_poly(Q, p_monomial(Q, Q.one(), 1), N));
    for (long i = 1;; ++i) {
        auto it = sf.header.find("f" + std::to_string(i));
        if (it == sf.header.end()) break;
        fs.push_back(ts_from_ratfun(Q, parse_expr(Q, it->second), N));
    }
    if (fs.empty()) throw parameter_error("no series given (expected f1 = <expr>, ...)");
    return fs;
}

int cmd_relations_find(const std::string& file, int d, std::int64_t N, bool adjoin_z,
                       const std::string& jsonpath) {
    auto fs = series_from_file(file, N, adjoin_z);
    auto rb = find_relations(fs, d, N);
    json rep;
    rep["command"] = "relations find";
    rep["degree"] = d;
    rep["order"] = N;
    rep["under_determined"] = rb.under_determined;
    rep["dimension"] = rb.basis.size();
    json list = json::array();
    for (auto& P : rb.basis) list.push_back(relation_to_string(P, adjoin_z));
    rep["basis"] = list;
    std::cout << "dimension " << rb.basis.size()
              << (rb.under_determined ? " (under-determined: increase order)" : "") << "\n";
    for (auto& P : rb.basis) std::cout << "  " << relation_to_string(P, adjoin_z) << "\n";
    write_json(jsonpath, rep);
    return EXIT_PASS;
}

// Tiny parser for relation polynomials: terms like "X1^2 - 3*X2 + 1/2".
RelationPoly parse_relation(const std::string& text, std::size_t nvars, bool x0) {
    QField Q;
    RelationPoly P;
    P.nvars = nvars;
    std::size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+') { ++pos; }
        else if (text[pos] == '-') { sign = -1; ++pos; }
        else if (!first) throw parse_error(pos, "expected '+' or '-' between terms");
        first = false;
        skip();
        BigRational coef(1L);
        bool have_coef = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                ++pos;
            coef = BigRational::parse(text.substr(start, pos - start));
            have_coef = true;
        }
        std::vector<int> e(nvars, 0);
        bool have_var = false;
        while (true) {
            skip();
            if (pos < text.size() && text[pos] == '*') { ++pos; skip(); }
            if (pos >= text.size() || text[pos] != 'X') break;
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw parse_error(pos, "expected variable index after X");
            long idx = std::stol(text.substr(start, pos - start));
            long slot = x0 ? idx : idx - 1;
            if (slot < 0 || slot >= static_cast<long>(nvars))
                throw parse_error(start, "variable index out of range");
            int exp = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                std::size_t es = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (es == pos) throw parse_error(pos, "expected exponent");
                exp = std::stoi(text.substr(es, pos - es));
            }
            e[static_cast<std::size_t>(slot)] += exp;
            have_var = true;
        }
        if (!have_coef && !have_var) throw parse_error(pos, "expected a term");
        if (sign < 0) coef = -coef;
        QField K;
        auto it = P.terms.find(e);
        if (it == P.terms.end()) P.terms[e] = coef;
        else {
            it->second = K.add(it->second, coef);
            if (it->second.is_zero()) P.terms.erase(it);
        }
    }
    return P;
}

int cmd_relations_specialize(const std::string& poly, const std::string& values, double tol,
                             bool exact, const std::string& jsonpath) {
    QField Q;
    std::vector<BigRational> vals;
    {
        std::stringstream ss(values);
        std::string item;
        while (std::getline(ss, item, ',')) vals.push_back(BigRational::parse(strip(item)));
    }
    auto P = parse_relation(poly, vals.size(), false);
    json rep;
    rep["command"] = "relations specialize";
    rep["poly"] = relation_to_string(P);
    bool ok;
    if (exact) {
        auto [pass, res] = specialize_check(P, vals);
        ok = pass;
        rep["residual"] = res.str();
        std::cout << (pass ? "holds" : "violated") << ", residual " << res.str() << "\n";
    } else {
        std::vector<double> dv;
        for (auto& v : vals) dv.push_back(v.to_double());
        auto [pass, res] = specialize_check(P, dv, tol);
        ok = pass;
        rep["residual"] = res;
        std::cout << (pass ? "holds" : "violated") << ", residual " << res << "\n";
    }
    rep["pass"] = ok;
    write_json(jsonpath, rep);
    return ok ? EXIT_PASS : EXIT_MATH_FAIL;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact iterative-derivation and Mahler-system toolkit"};
    app.require_subcommand(1);

    std::int64_t p = 0, a0 = 1, N = 32;
    long bound = 16, deg = 3, steps = 6, qq = 2;
    int reldeg = 2;
    double tol = 1e-10;
    bool adjoin_z = false, exact = false;
    std::string digits, file, jsonpath, expr, alpha, values, poly;
    long hasse_i = 1;

    auto* hasse = app.add_subcommand("hasse", "Hasse derivation operations");
    auto* hc = hasse->add_subcommand("check", "verify the derivation axioms on random samples");
    hc->add_option("--p", p, "prime modulus (0 = rationals)");
    hc->add_option("--bound", bound, "max i+j for the composition rule");
    hc->add_option("--json", jsonpath, "write machine-readable report");
    auto* ha = hasse->add_subcommand("apply", "apply d_i to an expression in t");
    ha->add_option("--p", p, "prime modulus (0 = rationals)");
    ha->add_option("--i", hasse_i, "derivation index")->required();
    ha->add_option("--expr", expr, "expression in t")->required();
    ha->add_option("--json", jsonpath, "write machine-readable report");

    auto* idmod = app.add_subcommand("idmod", "iterative differential modules over F_p(t)");
    auto* ic = idmod->add_subcommand("check", "verify the module axioms");
    ic->add_option("--p", p, "prime modulus");
    ic->add_option("--digits", digits, "comma-separated digits a_0,a_1,... of the worked family");
    ic->add_option("--file", file, "module file");
    ic->add_option("--order", bound, "max i+j tested (default: p^{m+1}-1)")->default_val(0);
    ic->add_option("--json", jsonpath, "write machine-readable report");
    auto* is = idmod->add_subcommand("sections", "horizontal-section basis");
    is->add_option("--p", p, "prime modulus");
    is->add_option("--digits", digits, "digits of the worked family");
    is->add_option("--file", file, "module file");
    is->add_option("--order", N, "series precision")->default_val(27);
    is->add_option("--json", jsonpath, "write machine-readable report");
    auto* ie = idmod->add_subcommand("example", "print the worked rank-2 module");
    ie->add_option("--p", p, "prime modulus")->required();
    ie->add_option("--digits", digits, "digits a_0,a_1,...")->required();
    ie->add_option("--json", jsonpath, "write machine-readable report");
    auto* ib = idmod->add_subcommand("b1", "first-obstruction search and case analysis");
    ib->add_option("--p", p, "prime modulus")->required();
    ib->add_option("--a0", a0, "level-0 digit")->required();
    ib->add_option("--deg", deg, "degree bound for f and g")->default_val(3);
    ib->add_option("--json", jsonpath, "write machine-readable report");

    auto* mahler = app.add_subcommand("mahler", "q-Mahler systems over Q(z)");
    auto* ms = mahler->add_subcommand("solve", "series solutions to a given order");
    ms->add_option("--file", file, "system file")->required();
    ms->add_option("--order", N, "truncation order")->default_val(32);
    ms->add_option("--json", jsonpath, "write machine-readable report");
    auto* mg = mahler->add_subcommand("singular", "orbit singularity verdict");
    mg->add_option("--file", file, "system file")->required();
    mg->add_option("--alpha", alpha, "rational point a/b, 0 < |alpha| < 1")->required();
    mg->add_option("--json", jsonpath, "write machine-readable report");
    auto* me = mahler->add_subcommand("eval", "evaluate the solution at a point");
    me->add_option("--file", file, "system file")->required();
    me->add_option("--alpha", alpha, "rational point a/b")->required();
    me->add_option("--order", N, "series truncation order")->default_val(32);
    me->add_option("--steps", steps, "telescoping steps")->default_val(6);
    me->add_option("--init", values, "initial vector f(0) as comma-separated rationals");
    me->add_option("--json", jsonpath, "write machine-readable report");

    auto* rel = app.add_subcommand("relations", "polynomial relations among series");
    auto* rf = rel->add_subcommand("find", "kernel of the monomial evaluation map");
    rf->add_option("--file", file, "series file (f1 = <expr>, f2 = <expr>, ...)")->required();
    rf->add_option("--deg", reldeg, "total degree bound")->default_val(2);
    rf->add_option("--order", N, "truncation order")->default_val(32);
    rf->add_flag("--adjoin-z", adjoin_z, "adjoin z itself as variable X0");
    rf->add_option("--json", jsonpath, "write machine-readable report");
    auto* rs = rel->add_subcommand("specialize", "check a relation at given values");
    rs->add_option("--poly", poly, "relation polynomial in X1..Xn")->required();
    rs->add_option("--values", values, "comma-separated rational values")->required();
    rs->add_option("--tol", tol, "tolerance for the float path")->default_val(1e-10);
    rs->add_flag("--exact", exact, "require an exactly zero residual");
    rs->add_option("--json", jsonpath, "write machine-readable report");

    (void)qq;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_INPUT;
    }

    try {
        if (hc->parsed()) return cmd_hasse_check(p, bound, jsonpath);
        if (ha->parsed()) return cmd_hasse_apply(p, hasse_i, expr, jsonpath);
        if (ic->parsed()) return cmd_idmod_check(p, digits, file, bound, jsonpath);
        if (is->parsed()) return cmd_idmod_sections(p, digits, file, N, jsonpath);
        if (ie->parsed()) return cmd_idmod_example(p, digits, jsonpath);
        if (ib->parsed()) return cmd_idmod_b1(p, a0, deg, jsonpath);
        if (ms->parsed()) return cmd_mahler_solve(file, N, jsonpath);
        if (mg->parsed()) return cmd_mahler_singular(file, alpha, jsonpath);
        if (me->parsed()) return cmd_mahler_eval(file, alpha, N, steps, values, jsonpath);
        if (rf->parsed()) return cmd_relations_find(file, reldeg, N, adjoin_z, jsonpath);
        if (rs->parsed()) return cmd_relations_specialize(poly, values, tol, exact, jsonpath);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT;
    } catch (const parameter_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT;
    } catch (const contract_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT;
    } catch (const pole_error& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return EXIT_MATH_FAIL;
    } catch (const precision_error& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return EXIT_MATH_FAIL;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INPUT;
    }
    std::cerr << "no subcommand chosen\n";
    return EXIT_INPUT;
}
