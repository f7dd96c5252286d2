#include <gtest/gtest.h>

#include <string>

#include "abcgg/edge_list.hpp"
#include "abcgg/families.hpp"
#include "abcgg/report_io.hpp"
#include "abcgg/shapes.hpp"

using namespace abcgg;

namespace {

Error parse_error(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return Error(ErrorKind::ParseError, "");
}

}  // namespace

TEST(EdgeList, ParsesSmallDocuments) {
  EXPECT_EQ(parse_edge_list("p 2\n0 1\n"), shapes::path(2));
  EXPECT_EQ(parse_edge_list("p 3\n0 1\n1 2\n"), shapes::path(3));
  EXPECT_EQ(parse_edge_list("# comment\n\n  p 3\r\n1 2\n   # indented\n0\t1"), shapes::path(3));
  EXPECT_EQ(parse_edge_list("p 1\n").num_vertices(), 1u);
}

TEST(EdgeList, ReportsLineNumbers) {
  const Error range = parse_error("p 2\n0 2\n");
  EXPECT_EQ(range.kind(), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(range.line(), 2u);

  const Error dup = parse_error("p 3\n0 1\n# x\n1 0\n");
  EXPECT_EQ(dup.kind(), ErrorKind::DuplicateEdge);
  EXPECT_EQ(dup.line(), 4u);

  const Error loop = parse_error("p 3\n2 2\n");
  EXPECT_EQ(loop.kind(), ErrorKind::SelfLoop);
  EXPECT_EQ(loop.line(), 2u);

  EXPECT_EQ(parse_error("0 1\np 2\n").line(), 1u);
  EXPECT_EQ(parse_error("p 2\n0 x\n").kind(), ErrorKind::ParseError);
  EXPECT_EQ(parse_error("p 2\n0 1 1\n").line(), 2u);
  EXPECT_EQ(parse_error("p 2\np 2\n").line(), 2u);
  EXPECT_EQ(parse_error("p -1\n").kind(), ErrorKind::ParseError);
  EXPECT_EQ(parse_error("# nothing\n").kind(), ErrorKind::ParseError);
  EXPECT_NE(std::string(parse_error("p 2\n0 2\n").what()).find("line 2"), std::string::npos);
}

TEST(EdgeList, RoundTripsEveryFamily) {
  std::vector<FamilySpec> specs{FamilySpec::q_mn(4, 3), FamilySpec::spiro(7, 3, 4),
                                FamilySpec::polyphenylene(5, 1, 3), FamilySpec::triangulane(3),
                                FamilySpec::dendrimer(2)};
  for (Family f : kAllFamilies)
    if (is_chain_cactus(f)) specs.push_back(FamilySpec::of_order(f, 5));
  for (const auto& s : specs) {
    const Graph g = generate(s);
    const std::string text = serialize_edge_list(g);
    EXPECT_EQ(parse_edge_list(text), g) << describe(s);
    EXPECT_EQ(serialize_edge_list(parse_edge_list(text)), text);
  }
  EXPECT_EQ(serialize_edge_list(shapes::path(3)), "p 3\n0 1\n1 2\n");
}

TEST(Reports, JsonCarriesFullPrecision) {
  const auto r = verify_family(Family::ChainTriangular, IndexKind::AbcGG,
                               {FamilySpec::of_order(Family::ChainTriangular, 2)});
  const Json j = to_json(r);
  const double direct = j["entries"][0]["direct"].get<double>();
  EXPECT_EQ(direct, *r.entries[0].direct);
  EXPECT_EQ(j["entries"][0]["status"], "MATCH");
  EXPECT_EQ(j["entries"][0]["branch"]["parity"], "even");
  EXPECT_EQ(j["entries"][0]["params"]["n"], 2);
  EXPECT_EQ(j["summary"]["MATCH"], 1);
}

TEST(Reports, CsvSchema) {
  const auto r = verify_family(Family::Spiro, IndexKind::Abc, {FamilySpec::spiro(6, 1, 3)});
  const std::string csv = to_csv(r);
  std::istringstream in(csv);
  std::string header, row, census;
  std::getline(in, header);
  std::getline(in, row);
  std::getline(in, census);
  EXPECT_EQ(header, "kind,family,params,index,closed_form,direct,abs_diff,status,detail");
  EXPECT_EQ(row.rfind("index,spiro,q=6;h=1;k=3,abc,", 0), 0u) << row;
  EXPECT_NE(row.find(",MATCH,"), std::string::npos);
  EXPECT_EQ(census.rfind("census,spiro,q=6;h=1;k=3,,,,,MATCH,\"expected (4,4):1", 0), 0u) << census;
}

TEST(Reports, CsvNumbersUseTwelveDigits) {
  EXPECT_EQ(csv_number(3.265986323710904), "3.26598632371");
  EXPECT_EQ(csv_number(10.0), "10");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
  EXPECT_EQ(csv_field("plain"), "plain");
}

TEST(Reports, BoundReportJson) {
  const auto r = edge_deletion_bound(shapes::cycle(4), {0, 1}, IndexKind::Abc);
  const Json j = to_json(r);
  EXPECT_EQ(j["theorem"], "edge_deletion");
  EXPECT_EQ(j["direction"], "lower");
  EXPECT_EQ(j["holds"], true);
  EXPECT_EQ(j["bound_value"].get<double>(), r.bound_value);
}
