#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "rieszarc/io.hpp"

using namespace rieszarc;
using test_helpers::random_arcset;
using test_helpers::random_poly;

TEST_CASE("format_double reproduces every double exactly") {
  Rng rng(71);
  std::vector<double> xs = {0.0,   1.0,       -1.0,  two_pi, 0.1,
                            1.0 / 3.0, 1e-300, -2.5e17, 6.02e23};
  for (int i = 0; i < 200; ++i)
    xs.push_back((rng.uniform01() - 0.5) * std::pow(10.0, 40.0 * (rng.uniform01() - 0.5)));
  for (double x : xs) {
    const std::string s = format_double(x);
    REQUIRE(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("file round trip and error paths") {
  const std::string path = "/tmp/rieszarc_io_test.txt";
  const std::string payload = "line one\nline two\n";
  write_file(path, payload);
  REQUIRE(read_file(path) == payload);
  REQUIRE_THROWS_AS(read_file("/tmp/rieszarc_no_such_file_417"), io_error);
  REQUIRE_THROWS_AS(write_file("/no_such_dir_417/out.txt", "x"), io_error);
  std::remove(path.c_str());
}

TEST_CASE("parse_json rejects malformed text") {
  REQUIRE(parse_json("{\"a\": 3}")["a"].get<int>() == 3);
  REQUIRE_THROWS_AS(parse_json("{\"a\": }"), io_error);
  REQUIRE_THROWS_AS(parse_json(""), io_error);
}

TEST_CASE("arc set files") {
  SECTION("round trip is bit exact") {
    const SAlphaSpec spec = SAlphaSpec::with_auto_c0(0.5, 0.2, 5);
    ArcSetFile f;
    f.set = build_S_alpha(spec);
    f.alpha = spec.alpha;
    f.eps = spec.eps;
    f.c0 = spec.c0;
    f.L = spec.L;
    f.tail_bound = spec.tail_bound();
    const ArcSetFile g = arcset_from_json(arcset_to_json(f));
    REQUIRE(g.set == f.set);
    REQUIRE(g.alpha == f.alpha);
    REQUIRE(g.eps == f.eps);
    REQUIRE(g.c0 == f.c0);
    REQUIRE(g.L == f.L);
    REQUIRE(g.tail_bound == f.tail_bound);
  }
  SECTION("empty and full sets survive") {
    ArcSetFile f;
    f.set = ArcSet::empty_set();
    REQUIRE(arcset_from_json(arcset_to_json(f)).set.is_empty());
    f.set = ArcSet::full_circle();
    REQUIRE(arcset_from_json(arcset_to_json(f)).set.is_full_circle());
  }
  SECTION("random sets survive") {
    Rng rng(73);
    for (int i = 0; i < 25; ++i) {
      ArcSetFile f;
      f.set = random_arcset(rng);
      REQUIRE(arcset_from_json(arcset_to_json(f)).set == f.set);
    }
  }
  SECTION("malformed input") {
    REQUIRE_THROWS_AS(arcset_from_json("{}"), io_error);
    REQUIRE_THROWS_AS(arcset_from_json("{\"arcs\": 3}"), io_error);
    REQUIRE_THROWS_AS(arcset_from_json("{\"arcs\": [[0.1, 0.2, 0.3]]}"),
                      io_error);
    // Structurally valid JSON but non-canonical arcs: overlapping pair.
    REQUIRE_THROWS_AS(arcset_from_json("{\"arcs\": [[0.0, 1.0], [0.5, 2.0]]}"),
                      invalid_input);
  }
}

TEST_CASE("trig poly files") {
  Rng rng(79);
  for (int i = 0; i < 20; ++i) {
    const TrigPoly q = random_poly(rng, 12, 300);
    const TrigPoly r = trig_poly_from_json(trig_poly_to_json(q));
    REQUIRE(r.terms().size() == q.terms().size());
    for (const auto& [k, c] : q.terms()) REQUIRE(r.coeff(k) == c);
  }
  REQUIRE(trig_poly_from_json("{\"terms\": []}").support_size() == 0);
  REQUIRE_THROWS_AS(trig_poly_from_json("{\"coeffs\": []}"), io_error);
  REQUIRE_THROWS_AS(trig_poly_from_json("{\"terms\": [[1, 0.5]]}"), io_error);
}

TEST_CASE("gram CSV") {
  const ArcSet half = ArcSet::from_raw({{0.0, 0.5 * two_pi}});
  const GramMatrix G = gram(progression(0, 1, 5), half);
  SECTION("round trip preserves every entry") {
    const GramMatrix H = gram_from_csv(gram_to_csv(G));
    REQUIRE(H.dim() == G.dim());
    REQUIRE(H.mu_s == 0.0);
    for (Eigen::Index r = 0; r < G.m.rows(); ++r)
      for (Eigen::Index c = 0; c < G.m.cols(); ++c)
        REQUIRE(H.m(r, c) == G.m(r, c));
    const ExtremalEigs a = extremal_eigs(G);
    const ExtremalEigs b = extremal_eigs(H);
    REQUIRE(b.lambda_min == Catch::Approx(a.lambda_min).margin(1e-14));
    REQUIRE(b.lambda_max == Catch::Approx(a.lambda_max).margin(1e-14));
  }
  SECTION("malformed input") {
    REQUIRE_THROWS_AS(gram_from_csv("1.0,0.0\n"), io_error);  // unquoted
    REQUIRE_THROWS_AS(gram_from_csv("\"1.0\"\n"), io_error);  // no im part
    REQUIRE_THROWS_AS(gram_from_csv("\"1.0,zz\"\n"), io_error);
    REQUIRE_THROWS_AS(gram_from_csv("\"1.0,0.0\",\"0.0,0.0\"\n"),
                      io_error);  // not square
    REQUIRE_THROWS_AS(gram_from_csv(""), invalid_input);
  }
}

TEST_CASE("bounds report JSON carries the numbers and the seed") {
  const RieszBounds b =
      riesz_bounds(progression(0, 2, 4), ArcSet::from_raw({{0.0, 0.5 * two_pi}}));
  const nlohmann::json j = parse_json(bounds_report_to_json(b, 917));
  REQUIRE(j["A"].get<double>() == b.A);
  REQUIRE(j["B"].get<double>() == b.B);
  REQUIRE(j["dim"].get<std::size_t>() == b.dim);
  REQUIRE(j["mu_S"].get<double>() == b.mu_S);
  REQUIRE(j["seed"].get<std::uint64_t>() == 917);
}

TEST_CASE("profile files") {
  Rng rng(83);
  for (int i = 0; i < 10; ++i) {
    const StepProfile p = nu_profile(random_arcset(rng), 4);
    const StepProfile q = profile_from_json(profile_to_json(p));
    REQUIRE(q.ell == p.ell);
    REQUIRE(q.breakpoints == p.breakpoints);
    REQUIRE(q.values == p.values);
  }
  REQUIRE_THROWS_AS(profile_from_json("{\"ell\": 2, \"values\": [1]}"),
                    io_error);
  REQUIRE_THROWS_AS(
      profile_from_json(
          "{\"ell\": 2, \"breakpoints\": [0.0, 1.0], \"values\": [1]}"),
      io_error);
}

TEST_CASE("assembly JSON records blocks, offsets, and the verdict") {
  const ArcSet half = ArcSet::from_raw({{0.0, 0.5 * two_pi}});
  const BlockSchedule sched = make_schedule(
      {FrequencySet::from_vector({0}), FrequencySet::from_vector({0})}, half);
  const Assembly a = assemble_lambda(sched, half, 10, SearchMode::linear);
  const nlohmann::json j = parse_json(assembly_to_json(sched, a));
  REQUIRE(j["blocks"].size() == 2);
  REQUIRE(j["translations"].get<std::vector<std::int64_t>>() ==
          a.translations);
  REQUIRE(j["bound"].get<double>() == a.bound);
  REQUIRE(j["target"].get<double>() == a.target);
  REQUIRE(j["mode"].get<std::string>() == "linear");
}

TEST_CASE("counting CSV") {
  std::vector<CountingRow> rows;
  for (int i = 1; i <= 6; ++i) {
    CountingRow r;
    r.x = 1.0 / i;
    r.N = 100 * i;
    r.rho = 0.5;
    r.count = 7 * i;
    r.ratio = static_cast<double>(r.count) /
              std::pow(static_cast<double>(r.N), 1.0 - r.rho);
    rows.push_back(r);
  }
  const std::vector<CountingRow> back = counting_from_csv(counting_to_csv(rows));
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(back[i].x == rows[i].x);
    REQUIRE(back[i].N == rows[i].N);
    REQUIRE(back[i].rho == rows[i].rho);
    REQUIRE(back[i].count == rows[i].count);
    REQUIRE(back[i].ratio == rows[i].ratio);
  }
  REQUIRE(counting_from_csv("x,N,rho,count,ratio\n").empty());
  REQUIRE_THROWS_AS(counting_from_csv("x,N,rho,count,ratio\n1,2,3,4\n"),
                    io_error);
  REQUIRE_THROWS_AS(counting_from_csv("x,N,rho,count,ratio\n1,2,3,4,zz\n"),
                    io_error);
}
