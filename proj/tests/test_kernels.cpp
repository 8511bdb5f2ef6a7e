#include <cmath>
#include <numbers>

#include "bettisig/errors.hpp"
#include "bettisig/kernels.hpp"
#include "bettisig/rng.hpp"
#include "doctest.h"

using namespace bettisig;
using namespace bettisig::kernels;

namespace {
std::vector<double> random_rows(std::size_t n, std::size_t d, std::uint64_t seed,
                                double scale = 1.0) {
    Rng rng({seed, 5});
    std::vector<double> v(n * d);
    for (auto& x : v) x = scale * rng.normal();
    return v;
}
}  // namespace

TEST_CASE("distance examples") {
    std::vector<double> s{1, 0, 0, 1, -1, 0};
    RowView sv{s, 3, 2};
    auto sph = spherical(sv);
    CHECK(sph(0, 1) == doctest::Approx(std::numbers::pi / 2));
    CHECK(sph(0, 2) == doctest::Approx(std::numbers::pi));

    std::vector<double> e{0, 0, 0, 2};
    CHECK(euclidean(RowView{e, 2, 2})(0, 1) == doctest::Approx(2.0));

    std::vector<double> p{0, 0, 0.5, 0};
    // d = arccosh(1 + 2 * 0.25 / (1 * 0.75)) = arccosh(5/3)
    CHECK(poincare(RowView{p, 2, 2})(0, 1) == doctest::Approx(std::acosh(5.0 / 3.0)));
}

TEST_CASE("serial and parallel kernels agree bitwise") {
    const std::size_t n = 70, d = 13;
    auto v = random_rows(n, d, 1);
    RowView rv{v, n, d};
    CHECK(gram(rv, Exec::serial) == gram(rv, Exec::parallel));
    CHECK(euclidean(rv, Exec::serial) == euclidean(rv, Exec::parallel));

    auto u = v;
    for (std::size_t i = 0; i < n; ++i) {
        double norm = 0;
        for (std::size_t k = 0; k < d; ++k) norm += u[i * d + k] * u[i * d + k];
        for (std::size_t k = 0; k < d; ++k) u[i * d + k] /= std::sqrt(norm);
    }
    RowView ru{u, n, d};
    CHECK(spherical(ru, Exec::serial) == spherical(ru, Exec::parallel));
    auto b = random_rows(n, d, 2, 0.05);
    RowView rb{b, n, d};
    CHECK(poincare(rb, Exec::serial) == poincare(rb, Exec::parallel));
}

TEST_CASE("spherical rejects non-unit rows beyond tolerance") {
    std::vector<double> bad{2, 0, 2, 0};
    CHECK_THROWS_AS(spherical(RowView{bad, 2, 2}), NumericalDomain);
    std::vector<double> near{1 + 1e-12, 0, 1, 0};
    CHECK(spherical(RowView{near, 2, 2})(0, 1) == doctest::Approx(0.0));
}

TEST_CASE("triangle inequality for all metrics") {
    const std::size_t n = 25, d = 4;
    auto v = random_rows(n, d, 3, 0.2);
    RowView rv{v, n, d};
    for (const auto& m : {euclidean(rv), poincare(rv)}) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    CHECK(m(i, k) <= m(i, j) + m(j, k) + 1e-12);
                }
    }
}
