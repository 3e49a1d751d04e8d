#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <idalg/relations.hpp>

using namespace idalg;

using QPoly = Poly<QField>;

static QSeries geom(std::int64_t N, int power) {
    // 1/(1-z)^power truncated at order N
    QField Q;
    QPoly den{{Q.one(), Q.from_int(-1)}};
    auto s = ts_invert(Q, ts_from_poly(Q, den, N), N);
    auto acc = ts_from_poly(Q, p_from_int(Q, 1), N);
    for (int k = 0; k < power; ++k) acc = ts_mul(Q, acc, s);
    return acc;
}

TEST_CASE("monomial enumeration in graded lex order") {
    auto m = monomials_upto(2, 2);
    std::vector<std::vector<int>> want = {
        {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    CHECK(m == want);
    for (std::size_t i = 0; i + 1 < m.size(); ++i) CHECK(grlex_less(m[i], m[i + 1]));
    CHECK(monomials_upto(3, 4).size() == 35); // C(7,3)
}

TEST_CASE("the geometric pair satisfies exactly one relation") {
    std::vector<QSeries> fs = {geom(32, 1), geom(32, 2)};
    auto rb = find_relations(fs, 2, 32);
    REQUIRE(rb.basis.size() == 1);
    CHECK_FALSE(rb.under_determined);
    const auto& P = rb.basis[0];
    // X1^2 - X2
    REQUIRE(P.terms.size() == 2);
    CHECK(P.terms.at({2, 0}) == BigRational(1L));
    CHECK(P.terms.at({0, 1}) == BigRational(-1L));
    CHECK(relation_to_string(P) == "X1^2 - X2");
    // degree 1 finds nothing
    CHECK(find_relations(fs, 1, 32).basis.empty());
}

TEST_CASE("zero series yield the obvious linear relation") {
    QField Q;
    std::vector<QSeries> fs = {ts_zero(Q, 16)};
    auto rb = find_relations(fs, 1, 16);
    bool found = false;
    for (auto& P : rb.basis)
        if (P.terms.size() == 1 && P.terms.count({1})) found = true;
    CHECK(found);
}

TEST_CASE("precision and valuation guards") {
    QField Q;
    std::vector<QSeries> fs = {geom(8, 1)};
    CHECK_THROWS_AS(find_relations(fs, 2, 16), precision_error);
    CHECK_THROWS_AS(find_relations(fs, 0, 8), parameter_error);
    std::vector<QSeries> laurent = {ts_monomial(Q, Q.one(), -1, 8)};
    CHECK_THROWS_AS(find_relations(laurent, 1, 8), parameter_error);
}

TEST_CASE("under-determined flag trips when rows cannot pin the kernel") {
    QField Q;
    std::vector<QSeries> fs = {ts_from_poly(Q, p_monomial(Q, Q.one(), 1), 4)};
    auto rb = find_relations(fs, 3, 4); // 4 rows vs 4 monomials
    CHECK(rb.under_determined);
}

// Independent soundness check: re-expand each relation term as a product
// of series with a naive schoolbook convolution (no ts_mul) and verify the
// sum vanishes to order N.
namespace {

std::vector<BigRational> naive_product(const std::vector<QSeries>& fs,
                                       const std::vector<int>& e, std::int64_t N) {
    QField Q;
    std::vector<BigRational> acc(static_cast<std::size_t>(N), Q.zero());
    acc[0] = Q.one();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) {
            std::vector<BigRational> nx(static_cast<std::size_t>(N), Q.zero());
            for (std::int64_t a = 0; a < N; ++a)
                for (std::int64_t b = 0; a + b < N; ++b)
                    nx[static_cast<std::size_t>(a + b)] =
                        nx[static_cast<std::size_t>(a + b)] +
                        acc[static_cast<std::size_t>(a)] * ts_coeff(Q, fs[i], b);
            acc = std::move(nx);
        }
    return acc;
}

bool relation_annihilates(const RelationPoly& P, const std::vector<QSeries>& fs,
                          std::int64_t N) {
    QField Q;
    std::vector<BigRational> total(static_cast<std::size_t>(N), Q.zero());
    for (auto& [e, c] : P.terms) {
        auto prod = naive_product(fs, e, N);
        for (std::size_t m = 0; m < prod.size(); ++m) total[m] = total[m] + c * prod[m];
    }
    for (auto& x : total)
        if (!x.is_zero()) return false;
    return true;
}

// Fraction-free Bareiss elimination over the integers; returns the rank.
// Independent of mat_rref, used to cross-check kernel dimensions.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> M) {
    if (M.empty()) return 0;
    std::size_t rows = M.size(), cols = M[0].size();
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                M[i][j] = (M[rank][c] * M[i][j] - M[i][c] * M[rank][j]) / prev;
            M[i][c] = 0;
        }
        prev = M[rank][c];
        ++rank;
    }
    return rank;
}

std::size_t bareiss_kernel_dim(const std::vector<QSeries>& fs, int d, std::int64_t N) {
    QField Q;
    auto mons = monomials_upto(fs.size(), d);
    std::vector<std::vector<mpz_class>> M(static_cast<std::size_t>(N),
                                          std::vector<mpz_class>(mons.size()));
    for (std::size_t j = 0; j < mons.size(); ++j) {
        auto prod = naive_product(fs, mons[j], N);
        // clear the column's denominators
        mpz_class lcm = 1;
        for (auto& x : prod) {
            mpz_class g, den = x.den();
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        for (std::int64_t e = 0; e < N; ++e) {
            auto& x = prod[static_cast<std::size_t>(e)];
            M[static_cast<std::size_t>(e)][j] = x.num() * (lcm / x.den());
        }
    }
    return mons.size() - bareiss_rank(std::move(M));
}

} // namespace

TEST_CASE("every reported relation annihilates the series (independent expansion)") {
    std::vector<QSeries> fs = {geom(24, 1), geom(24, 2)};
    auto rb = find_relations(fs, 3, 24);
    CHECK(!rb.basis.empty());
    for (auto& P : rb.basis) CHECK(relation_annihilates(P, fs, 24));
}

TEST_CASE("kernel dimension matches a fraction-free elimination oracle") {
    QField Q;
    std::mt19937 rng(77);
    for (int trial = 0; trial < 6; ++trial) {
        std::size_t n = 1 + trial % 3;
        int d = 1 + trial % 3;
        std::vector<QSeries> fs;
        for (std::size_t i = 0; i < n; ++i) {
            QPoly f;
            for (int k = 0; k < 5; ++k)
                f.c.push_back(Q.from_int(static_cast<long>(rng() % 7) - 3));
            p_trim(Q, f);
            fs.push_back(ts_from_poly(Q, f, 12));
        }
        auto rb = find_relations(fs, d, 12);
        CHECK(rb.basis.size() == bareiss_kernel_dim(fs, d, 12));
    }
    // and on the structured pair
    std::vector<QSeries> fs = {geom(20, 1), geom(20, 2)};
    CHECK(find_relations(fs, 2, 20).basis.size() == bareiss_kernel_dim(fs, 2, 20));
}

TEST_CASE("specialization residuals") {
    std::vector<QSeries> fs = {geom(32, 1), geom(32, 2)};
    auto P = find_relations(fs, 2, 32).basis[0];
    // f1(1/2) = 2, f2(1/2) = 4
    auto [ok, res] = specialize_check(P, std::vector<BigRational>{BigRational(2L), BigRational(4L)});
    CHECK(ok);
    CHECK(res.is_zero());
    auto [bad, res2] = specialize_check(P, std::vector<BigRational>{BigRational(2L), BigRational(5L)});
    CHECK_FALSE(bad);
    CHECK(res2 == BigRational(-1L));
    auto [okf, resf] = specialize_check(P, std::vector<double>{2.0, 4.0}, 1e-10);
    CHECK(okf);
    CHECK(resf == 0.0);
}

TEST_CASE("scaling a series rescales relations predictably") {
    QField Q;
    std::vector<QSeries> fs = {geom(24, 1), geom(24, 2)};
    std::vector<QSeries> gs = {ts_scale(Q, fs[0], Q.from_int(3)), fs[1]};
    auto P = find_relations(fs, 2, 24).basis[0];
    auto R = find_relations(gs, 2, 24).basis;
    REQUIRE(R.size() == 1);
    // g1 = 3 f1 and g2 = f1^2, so g1^2 = 9 g2
    CHECK(R[0].terms.at({0, 1}) == BigRational(-9L));
    CHECK_FALSE(relations_equal_up_to_scale(P, R[0]));
    CHECK(relations_equal_up_to_scale(P, P));
}

TEST_CASE("stability scan over increasing orders") {
    std::vector<QSeries> fs = {geom(32, 1), geom(32, 2)};
    auto rep = stability_scan(fs, 2, {8, 16, 32});
    CHECK(rep.stabilized);
    REQUIRE(rep.dims.size() == 3);
    CHECK(rep.dims[2].second == 1);
    CHECK(rep.dims[1].second == 1);
    REQUIRE(rep.stable.size() == 1);
    CHECK(relation_to_string(rep.stable[0]) == "X1^2 - X2");
    CHECK_THROWS_AS(stability_scan(fs, 2, {8}), parameter_error);
    CHECK_THROWS_AS(stability_scan(fs, 2, {16, 8}), parameter_error);
}

TEST_CASE("deterministic output") {
    std::vector<QSeries> fs = {geom(32, 1), geom(32, 2)};
    auto a = find_relations(fs, 3, 32);
    auto b = find_relations(fs, 3, 32);
    REQUIRE(a.basis.size() == b.basis.size());
    for (std::size_t i = 0; i < a.basis.size(); ++i)
        CHECK(relation_to_string(a.basis[i]) == relation_to_string(b.basis[i]));
}
