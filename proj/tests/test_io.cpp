#include <doctest.h>

#include <dunkl/io.hpp>
#include <sstream>

using namespace dunkl;

TEST_CASE("csv round trip is exact") {
  MultiplicityParam m(1.5);
  auto f = SampledFunction::sample(gauss_grid(64, 6.0, 1.5), m, [](double x) { return cplx(std::exp(-x * x), x / 3.0); });
  std::stringstream ss;
  write_csv(ss, f);
  auto g = read_csv(ss, m);
  CHECK(g.grid().same_nodes(f.grid()));
  CHECK(g.values() == f.values());
}

TEST_CASE("csv errors") {
  MultiplicityParam m(0.0);
  std::stringstream empty;
  CHECK_THROWS_AS(read_csv(empty, m), std::invalid_argument);
  std::stringstream header("x,y\n");
  CHECK_THROWS_AS(read_csv(header, m), std::invalid_argument);
  std::stringstream cols("node,weight,re,im\n-1,1,0\n1,1,0,0\n");
  CHECK_THROWS_AS(read_csv(cols, m), std::invalid_argument);
  std::stringstream num("node,weight,re,im\n-1,1,0,abc\n1,1,0,0\n");
  CHECK_THROWS_AS(read_csv(num, m), std::invalid_argument);
  std::stringstream asym("node,weight,re,im\n-1,1,0,0\n2,1,0,0\n");
  CHECK_THROWS_AS(read_csv(asym, m), std::invalid_argument);
  std::stringstream crlf("node,weight,re,im\r\n-1,1,2,0\r\n1,1,3,0\r\n");
  CHECK(read_csv(crlf, m)[1] == cplx(3.0, 0.0));
}

TEST_CASE("json round trip") {
  MultiplicityParam m(0.5);
  auto f = SampledFunction::sample(gauss_grid(64, 4.0), m, [](double x) { return cplx(x, -x * x); });
  auto g = from_json(to_json(f));
  CHECK(g.multiplicity() == m);
  CHECK(g.values() == f.values());
  CHECK_THROWS_AS(from_json("{\"k\": [0]}"), std::invalid_argument);
  CHECK_THROWS_AS(from_json("not json"), std::invalid_argument);
}
