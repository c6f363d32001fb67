#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "blt/verify.hpp"

using namespace blt;
using namespace blt::verify;

namespace {
std::vector<std::string> sweep(Options opt) {
  std::vector<std::string> rows;
  run(opt, [&](const Row& r) { rows.push_back(csv_row(r)); });
  return rows;
}
}  // namespace

TEST(Verify, InstanceCounts) {
  EXPECT_EQ(instances(2).size(), 1u);
  EXPECT_EQ(instances(3).size(), 1u + 7u);
  EXPECT_EQ(instances(4).size(), 1u + 7u + 63u);
  EXPECT_THROW(instances(7), Error);
}

TEST(Verify, TinySweepPassesAtEveryLevel) {
  Options opt;
  opt.max_n = 3;
  Summary s = run(opt, [](const Row& r) {
    EXPECT_TRUE(r.pass) << csv_row(r);
    EXPECT_TRUE(r.kappa_P.has_value());
  });
  EXPECT_EQ(s.rows, 8u);
  EXPECT_EQ(s.fail, 0u);
  EXPECT_EQ(s.group_skipped, 0u);
}

TEST(Verify, RowsAreOrderedAndThreadIndependent) {
  Options opt;
  opt.max_n = 4;
  opt.level = Level::space;
  opt.threads = 1;
  auto serial = sweep(opt);
  opt.threads = 4;
  auto parallel = sweep(opt);
  EXPECT_EQ(serial, parallel);
  ASSERT_EQ(serial.size(), 71u);
  EXPECT_EQ(serial.front().substr(0, 4), "2:1,");
}

TEST(Verify, GroupColumnsBlankOutsideGuard) {
  Options opt;
  opt.max_n = 4;
  opt.level = Level::group;
  std::size_t blank = 0;
  auto s = run(opt, [&](const Row& r) {
    if (!r.kappa_P) ++blank;
    else EXPECT_LE(r.n + r.m, 6u);
  });
  EXPECT_EQ(s.group_skipped, blank);
  EXPECT_GT(blank, 0u);
  EXPECT_EQ(s.fail, 0u);
}

TEST(Verify, CsvShape) {
  Row r;
  r.n = 2;
  r.mask = 1;
  r.m = 1;
  r.q = r.p = 3;
  r.kappa_G = r.lambda_G = r.delta_G = 1;
  EXPECT_EQ(csv_row(r), "2:1,2,1,3,3,1,1,1,,,,,,,,PASS");
  EXPECT_EQ(std::string(kCsvHeader).substr(0, 9), "graph_id,");
}

TEST(Verify, Counterexample) {
  auto rep = counterexample(2, 2, 3);
  EXPECT_TRUE(rep.fully_connected);
  EXPECT_EQ(rep.kappa, 3u);
  EXPECT_LE(rep.lambda, 2u);
  EXPECT_TRUE(rep.separation());
  ASSERT_TRUE(rep.kappa_P && rep.lambda_P);
  EXPECT_LT(*rep.lambda_P, *rep.kappa_P);
}

TEST(Verify, ParseLevel) {
  EXPECT_EQ(parse_level("map"), Level::map);
  EXPECT_THROW(parse_level("nope"), Error);
}
