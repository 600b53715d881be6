#include <gtest/gtest.h>

#include <sstream>

#include "permcycle/oeis.hpp"

using namespace permcycle;

TEST(BFile, ParsesCommentsAndBlankLines) {
  std::istringstream in("# A test\n\n0 1\n1 1   # trailing\n2 2\n3 123456789012345678901234567890\n");
  const BFile f = parse_bfile(in);
  EXPECT_EQ(f.values.size(), 4u);
  EXPECT_EQ(f.values.at(3), BigInt("123456789012345678901234567890"));
}

TEST(BFile, Errors) {
  std::istringstream empty("# nothing here\n");
  EXPECT_THROW(parse_bfile(empty), BFileError);
  std::istringstream bad("0 1\n1 x\n");
  EXPECT_THROW(parse_bfile(bad), BFileError);
  EXPECT_THROW(read_bfile("/nonexistent/b000000.txt"), BFileError);
}

TEST(BFile, ShiftSearch) {
  std::istringstream in("0 1\n1 1\n2 2\n3 3\n4 6\n5 10\n6 19\n");
  const BFile f = parse_bfile(in);
  const std::vector<std::int64_t> local{1, 1, 2, 3, 6, 10};
  EXPECT_EQ(matching_shift(f, local, 1), -1);
  EXPECT_EQ(matching_shift(f, std::vector<std::int64_t>{2, 3, 6}, 1), 1);
  EXPECT_FALSE(matching_shift(f, std::vector<std::int64_t>{1, 2, 4}, 1));
  // Entries missing from the file cannot match.
  EXPECT_FALSE(matching_shift(f, std::vector<std::int64_t>{1, 1, 2, 3, 6, 10, 19, 33}, 1));
}
