#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "lssl/hippo.hpp"

using namespace lssl;

namespace {

double max_entry_diff(const DenseMatrix& a, const DenseMatrix& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::fabs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace

TEST_CASE("log_gamma against known values") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-12));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(3.14159265358979323846)).epsilon(1e-12));
  // stays accurate over the argument range used by jacobi_matrix
  CHECK(log_gamma(516.0) == doctest::Approx(std::lgamma(516.0)).epsilon(1e-12));
}

TEST_CASE("legs_matrix closed form") {
  HippoSystem s1 = legs_matrix(1);
  CHECK(s1.a(0, 0) == doctest::Approx(1.0));
  CHECK(s1.b[0] == doctest::Approx(1.0));

  HippoSystem s2 = legs_matrix(2);
  CHECK(s2.a(0, 0) == doctest::Approx(1.0));
  CHECK(s2.a(0, 1) == doctest::Approx(0.0));
  CHECK(s2.a(1, 0) == doctest::Approx(std::sqrt(3.0)));
  CHECK(s2.a(1, 1) == doctest::Approx(2.0));
  CHECK(s2.b[0] == doctest::Approx(1.0));
  CHECK(s2.b[1] == doctest::Approx(std::sqrt(3.0)));

  CHECK(legs_matrix(3).a(2, 0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  CHECK_THROWS_AS(legs_matrix(0), std::invalid_argument);
}

TEST_CASE("legt_matrix closed form") {
  HippoSystem s2 = legt_matrix(2);
  CHECK(s2.a(0, 0) == doctest::Approx(1.0));
  CHECK(s2.a(0, 1) == doctest::Approx(-std::sqrt(3.0)));
  CHECK(s2.a(1, 0) == doctest::Approx(std::sqrt(3.0)));
  CHECK(s2.a(1, 1) == doctest::Approx(3.0));

  HippoSystem s1 = legt_matrix(1);
  CHECK(s1.a(0, 0) == doctest::Approx(1.0));
  CHECK(s1.b[0] == doctest::Approx(1.0 / std::sqrt(2.0)));

  CHECK(legt_matrix(3).a(0, 2) == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("lagt_matrix closed form") {
  HippoSystem s = lagt_matrix(3, 1.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(s.a(i, j) == doctest::Approx(j <= i ? 1.0 : 0.0));

  HippoSystem s0 = lagt_matrix(2, 0.0);
  CHECK(s0.a(0, 0) == doctest::Approx(0.5));
  CHECK(s0.a(1, 1) == doctest::Approx(0.5));

  for (double b : s.b) CHECK(b == doctest::Approx(1.0));
  CHECK_THROWS_AS(lagt_matrix(2, -1.5), std::invalid_argument);
}

TEST_CASE("jacobi_matrix(0,0) equals legt_matrix") {
  for (std::size_t n : {1u, 4u, 16u, 32u}) {
    CHECK(max_entry_diff(jacobi_matrix(n, 0.0, 0.0).a, legt_matrix(n).a) < 1e-9);
  }
}

TEST_CASE("jacobi b at alpha=beta=0") {
  HippoSystem s = jacobi_matrix(5, 0.0, 0.0);
  for (std::size_t n = 0; n < 5; ++n)
    CHECK(s.b[n] ==
          doctest::Approx(std::sqrt((2.0 * static_cast<double>(n) + 1.0) / 2.0)).epsilon(1e-12));
}

TEST_CASE("jacobi quasiseparability") {
  CHECK(offdiag_rank(jacobi_matrix(32, 0.5, 1.5).a, 3));
  for (double a : {0.0, 0.5, 1.5})
    for (double b : {0.0, 0.5, 1.5}) CHECK(offdiag_rank(jacobi_matrix(24, a, b).a, 3));
  CHECK_THROWS_AS(jacobi_matrix(4, -1.5, 0.0), std::invalid_argument);
}

TEST_CASE("legs and lagt are 1-quasiseparable") {
  CHECK(offdiag_rank(legs_matrix(32).a, 1));
  CHECK(offdiag_rank(lagt_matrix(32, 0.0).a, 1));
}

TEST_CASE("structured_legs hand case N=2") {
  StructuredStateMatrix s = structured_legs(2);
  CHECK(s.p.diag[0] == doctest::Approx(1.0));
  CHECK(s.p.diag[1] == doctest::Approx(std::sqrt(3.0)));
  CHECK(s.d.diag[0] == doctest::Approx(0.0));
  CHECK(s.d.diag[1] == doctest::Approx(-1.0 / 3.0));
  CHECK(s.t.main[0] == doctest::Approx(1.0));
  CHECK(s.t.main[1] == doctest::Approx(1.0));
  CHECK(s.t.sub[0] == doctest::Approx(-1.0));

  DenseMatrix rec = structured_to_dense(s);
  CHECK(max_entry_diff(rec, legs_matrix(2).a) < 1e-12);
}

TEST_CASE("structured_lagt identity scalings") {
  StructuredStateMatrix s = structured_lagt(3, 0.0);
  for (double v : s.p.diag) CHECK(v == doctest::Approx(1.0));
  for (double v : s.d.diag) CHECK(v == doctest::Approx(-0.5));
  CHECK(max_entry_diff(structured_to_dense(s), lagt_matrix(3, 0.0).a) < 1e-12);
}

TEST_CASE("structured reconstructions match dense constructors") {
  for (std::size_t n = 1; n <= 64; ++n) {
    CHECK(max_entry_diff(structured_to_dense(structured_legs(n)), legs_matrix(n).a) < 1e-10);
    CHECK(max_entry_diff(structured_to_dense(structured_legt(n)), legt_matrix(n).a) < 1e-10);
    CHECK(max_entry_diff(structured_to_dense(structured_lagt(n, 1.0)), lagt_matrix(n, 1.0).a) <
          1e-10);
  }
}

TEST_CASE("constructors are bit-stable across calls") {
  HippoSystem a = legs_matrix(16), b = legs_matrix(16);
  CHECK(a.a.data() == b.a.data());
  HippoSystem c = legt_matrix(16), d = legt_matrix(16);
  CHECK(c.b == d.b);
}
