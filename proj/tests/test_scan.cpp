#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qng/family.hpp"
#include "qng/report.hpp"
#include "qng/scan.hpp"

using namespace qng;

TEST_CASE("predicate parsing") {
  CHECK(parse_predicate("1.2").name == "1.2");
  CHECK(parse_predicate("thm1.5").member_verdict == Verdict::EqualityCertified);
  CHECK(parse_predicate("sum-open-interval 5 6").member_verdict == Verdict::Strict);
  CHECK_THROWS_AS(parse_predicate("sum-open-interval 5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_predicate("nonsense"), std::invalid_argument);
}

TEST_CASE("open interval at order 5") {
  const ScanResult r = scan(5, GraphFilter::parse("connected"), parse_predicate("sum-open-interval 5 6"));
  CHECK(r.scanned == 21);
  CHECK(r.members.size() == 8);
  CHECK(r.violations.empty());
  std::size_t total = 0;
  for (auto c : r.counts) total += c;
  CHECK(total == r.scanned);
}

TEST_CASE("scans do not depend on thread count") {
  const GraphFilter f = GraphFilter::parse("connected");
  const ScanPredicate p = parse_predicate("1.3");
  const ScanResult one = scan(7, f, p, 1);
  const ScanResult four = scan(7, f, p, 4);
  CHECK(one.members == four.members);
  CHECK(one.counts == four.counts);
  CHECK(to_json(one).dump() == to_json(four).dump());
}

TEST_CASE("bipartite catalogue matches the order-6 scan and the fixture") {
  const ScanResult r = scan(6, GraphFilter::parse("connected,bipartite"), parse_predicate("problem1.2"));
  std::vector<std::string> catalogue;
  for (const NamedGraph& g : bipartite_extremal_catalogue()) catalogue.push_back(class_key(g.graph));
  std::sort(catalogue.begin(), catalogue.end());
  CHECK(r.members == catalogue);
  std::ifstream fixture(QNG_FIXTURE_DIR "/bipartite_extremal_6.g6");
  REQUIRE(fixture);
  std::vector<std::string> lines;
  for (const Graph& g : read_graph6_stream(fixture)) lines.push_back(class_key(g));
  std::sort(lines.begin(), lines.end());
  CHECK(lines == catalogue);
}

TEST_CASE("stream scans") {
  std::istringstream in("C~\nCr\n\nC]\n");
  const auto graphs = read_graph6_stream(in);
  REQUIRE(graphs.size() == 3);
  const ScanResult r = scan(graphs, GraphFilter::parse("all"), parse_predicate("1.3"));
  CHECK(r.scanned == 3);
  CHECK(r.members.size() == 1);
  std::istringstream bad("C~\n!!\n");
  CHECK_THROWS_AS(read_graph6_stream(bad), ParseError);
}

TEST_CASE("case-analysis censuses") {
  for (int n = 4; n <= 6; ++n) CHECK(census_between_degrees(n).empty());
  for (int n = 4; n <= 7; ++n) {
    const auto tight = census_degree_tight(n);
    REQUIRE(tight.size() == 1);
    CHECK(tight[0] == class_key(star_graph(n)));
  }
  for (int n : {6, 8}) {
    std::vector<std::string> expected{class_key(complete_graph(n / 2)),
                                      class_key(join(complete_graph(n / 2 - 2), empty_graph(2)))};
    std::sort(expected.begin(), expected.end());
    CHECK(census_q1_at_least(n / 2, n - 3) == expected);
  }
}

TEST_CASE("family expressions") {
  CHECK(parse_family("K6") == complete_graph(6));
  CHECK(parse_family("K3,3") == complete_bipartite(3, 3));
  CHECK(parse_family("P5") == path_graph(5));
  CHECK(parse_family("C6") == cycle_graph(6));
  CHECK(parse_family("star 6") == star_graph(6));
  CHECK(parse_family("H 2 1 1") == h_graph({2, 1, 1}));
  CHECK(parse_family("2K1") == empty_graph(2));
  CHECK(parse_family("join(2K1, K4)") == join(empty_graph(2), complete_graph(4)));
  CHECK(parse_family("join(union(K2,K3),K1)") ==
        join(disjoint_union(complete_graph(2), complete_graph(3)), complete_graph(1)));
  CHECK(parse_family("join(K3,3K1)") == join(complete_graph(3), empty_graph(3)));
  CHECK(parse_family("join(K3,3)") == complete_bipartite(3, 3));
  CHECK(parse_family("cp(K3,K2)") == cartesian_product(complete_graph(3), complete_graph(2)));
  CHECK(parse_family("comp(K4)") == empty_graph(4));
  CHECK(parse_family("join(2K2,3K1)") == join(copies(2, complete_graph(2)), empty_graph(3)));
  CHECK_THROWS_AS(parse_family("Q5"), FamilySyntaxError);
  CHECK_THROWS_AS(parse_family("join(K2"), FamilySyntaxError);
  CHECK_THROWS_AS(parse_family("K2 K3"), FamilySyntaxError);
  CHECK_THROWS_AS(parse_family("K40"), CapacityError);
}

TEST_CASE("report serialization") {
  const BoundReport r = check_thm13(cycle_graph(4));
  const auto j = to_json(r);
  CHECK(j["verdict"] == "equality-certified");
  CHECK(j["certified"] == true);
  CHECK(j["family"] == "C_4");
  CHECK(csv_header() == "graph6,bound,lhs,rhs,verdict,family");
  const std::string row = csv_row(r);
  CHECK(row.rfind(r.graph6 + ",", 0) == 0);
  CHECK(row.find(",equality-certified,C_4") != std::string::npos);
  CHECK(format_double(0.1) == "0.1");
  const auto s = spectrum_json(complete_bipartite(3, 3), MatrixKind::SignlessLaplacian, true);
  CHECK(s["roots"][0]["lower"] == "6");
  CHECK(s["roots"][1]["multiplicity"] == 4);
}
