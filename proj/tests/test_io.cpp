#include <cmath>
#include <sstream>

#include "bettisig/errors.hpp"
#include "bettisig/io.hpp"
#include "doctest.h"

using namespace bettisig;

TEST_CASE("matrix csv plain") {
    std::istringstream in("1,0.5,0.2\n0.5,1,0.3\n0.2,0.3,1\n");
    auto m = read_matrix_csv(in);
    CHECK(m.matrix.size() == 3);
    CHECK(m.matrix(0, 2) == 0.2);
    CHECK(m.diagonal == std::vector<double>{1, 1, 1});
}

TEST_CASE("matrix csv with header and label column") {
    std::istringstream in(",a,b\na,1,0.4\nb,0.4,1\n");
    auto m = read_matrix_csv(in);
    CHECK(m.matrix.size() == 2);
    CHECK(m.matrix(0, 1) == 0.4);
    CHECK(m.matrix.labels() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("small asymmetry is averaged, large asymmetry is rejected") {
    std::istringstream ok("0,1\n1.0000000000001,0\n");
    auto m = read_matrix_csv(ok);
    CHECK(m.matrix(0, 1) == doctest::Approx(1.0));
    CHECK(m.max_asymmetry > 0);
    std::istringstream bad("0,1\n1.1,0\n");
    CHECK_THROWS_AS(read_matrix_csv(bad), ParseError);
    std::istringstream ragged("0,1\n1\n");
    CHECK_THROWS_AS(read_matrix_csv(ragged), ParseError);
    std::istringstream junk("0,x\n1,0\n2,3\n");
    CHECK_THROWS_AS(read_matrix_csv(junk), ParseError);
}

TEST_CASE("matrix csv round trip") {
    SymmetricMatrix m(3);
    m.set(0, 1, 0.1);
    m.set(0, 2, -0.25);
    m.set(1, 2, 1.0 / 3.0);
    std::stringstream ss;
    write_matrix_csv(ss, m, 1.0);
    auto back = read_matrix_csv(ss);
    CHECK(back.matrix == m);
}

TEST_CASE("series csv") {
    std::istringstream in("x,y,z\n1,2,3\n2,4,1\n3,5,2\n");
    auto s = read_series_csv(in);
    CHECK(s.n_series() == 3);
    CHECK(s.length() == 3);
    CHECK(s(1, 2) == 5);
    CHECK(s.labels() == std::vector<std::string>{"x", "y", "z"});
    std::stringstream out;
    write_series_csv(out, s);
    CHECK(read_series_csv(out) == s);
    std::istringstream bad("1,2\n3\n");
    try {
        read_series_csv(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_matrix_file("/nonexistent/m.csv"), ParseError);
}
