#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <idalg/idalg.hpp>

using namespace idalg;

#ifndef IDALG_CLI_PATH
#error "build must define IDALG_CLI_PATH"
#endif
#ifndef IDALG_TEST_DIR
#error "build must define IDALG_TEST_DIR"
#endif

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(IDALG_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WEXITSTATUS(st);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data(const std::string& name) {
    return std::string(IDALG_TEST_DIR) + "/data/" + name;
}

template <class F>
RatFun<F> random_ratfun(const F& K, std::mt19937& rng) {
    std::uniform_int_distribution<long> dd(0, 6), dc(-9, 9);
    auto rand_poly = [&](bool nonzero) {
        Poly<F> f;
        long d = dd(rng);
        for (long i = 0; i <= d; ++i) f.c.push_back(K.from_int(dc(rng)));
        p_trim(K, f);
        if (nonzero && f.is_zero()) f = p_from_int(K, 1);
        return f;
    };
    return rf_make(K, rand_poly(false), rand_poly(true));
}

template <class F>
void roundtrip_many(const F& K, int count) {
    std::mt19937 rng(424242u);
    for (int i = 0; i < count; ++i) {
        auto f = random_ratfun(K, rng);
        auto text = render_ratfun(K, f, "t");
        auto g = parse_expr(K, text);
        CHECK(rf_eq(K, f, g));
    }
}

} // namespace

TEST_CASE("rendered expressions parse back to the same fraction") {
    roundtrip_many(RationalField{}, 200);
    roundtrip_many(PrimeField(3), 200);
    roundtrip_many(PrimeField(7), 200);
}

TEST_CASE("parser accepts both ASCII and U+2212 minus") {
    RationalField Q;
    auto a = parse_expr(Q, "1 - t^2");
    auto b = parse_expr(Q, "1 − t^2");
    CHECK(rf_eq(Q, a, b));
}

TEST_CASE("exit code contract") {
    // passes exit 0
    CHECK(run_cli("hasse check --p 3 --bound 8") == 0);
    CHECK(run_cli("hasse apply --p 3 --i 1 --expr \"1/t\"") == 0);
    CHECK(run_cli("idmod check --p 3 --digits 2") == 0);
    CHECK(run_cli("mahler solve --file " + data("mahler_geom.sys") + " --order 16") == 0);
    CHECK(run_cli("relations find --file " + data("geom_pair.series") + " --deg 2") == 0);
    CHECK(run_cli("relations specialize --poly \"X1^2 - X2\" --values 2,4 --exact") == 0);
    // mathematical failure exits 1
    CHECK(run_cli("idmod check --p 3 --digits 2,1,1") == 1);
    CHECK(run_cli("relations specialize --poly \"X1^2 - X2\" --values 2,5 --exact") == 1);
    // input errors exit 2
    CHECK(run_cli("no-such-command") == 2);
    CHECK(run_cli("hasse apply --p 3 --i 1 --expr \"1 + (\"") == 2);
    CHECK(run_cli("idmod check --p 4 --digits 1") == 2);
    CHECK(run_cli("mahler solve --file /nonexistent.sys") == 2);
}

TEST_CASE("json reports are stable and match the committed golden file") {
    std::string out1 = "/tmp/idalg_cli_rel1.json";
    std::string out2 = "/tmp/idalg_cli_rel2.json";
    std::string args = "relations find --file " + data("geom_pair.series") +
                       " --deg 2 --order 32 --json ";
    REQUIRE(run_cli(args + out1) == 0);
    REQUIRE(run_cli(args + out2) == 0);
    auto a = slurp(out1), b = slurp(out2);
    CHECK(a == b);
    CHECK(a == slurp(std::string(IDALG_TEST_DIR) + "/golden/relations_find.json"));
}

TEST_CASE("json report for the singularity verdict matches golden") {
    std::string out = "/tmp/idalg_cli_sing.json";
    std::string args = "mahler singular --file " + data("mahler_geom.sys") +
                       " --alpha 1/3 --json " + out;
    REQUIRE(run_cli(args) == 0);
    CHECK(slurp(out) == slurp(std::string(IDALG_TEST_DIR) + "/golden/mahler_singular.json"));
}
