#include <gtest/gtest.h>

#include <sstream>

#include <stacklab/table.hpp>

using namespace stacklab;

namespace {

std::string emit(const Table& t, TableFormat f) {
  std::ostringstream os;
  emit_table(t, f, os);
  return os.str();
}

Table sample() {
  Table t{{"n", "count", "note"}, {}};
  t.add({1, "1", nullptr});
  t.add({12, "955999", "a,b"});
  return t;
}

}  // namespace

TEST(Table, Json) {
  EXPECT_EQ(emit(sample(), TableFormat::Json),
            "[{\"n\":1,\"count\":\"1\",\"note\":null},{\"n\":12,\"count\":\"955999\",\"note\":\"a,b\"}]\n");
}

TEST(Table, Csv) { EXPECT_EQ(emit(sample(), TableFormat::Csv), "n,count,note\n1,1,\n12,955999,\"a,b\"\n"); }

TEST(Table, Plain) {
  EXPECT_EQ(emit(sample(), TableFormat::Plain), " n   count  note\n 1       1      \n12  955999   a,b\n");
}

TEST(Table, EmptyRowSetPrintsHeaderOnly) {
  const Table t{{"n", "count"}, {}};
  EXPECT_EQ(emit(t, TableFormat::Csv), "n,count\n");
  EXPECT_EQ(emit(t, TableFormat::Plain), "n  count\n");
  EXPECT_EQ(emit(t, TableFormat::Json), "[]\n");
}

TEST(Table, RejectsBadInput) {
  Table t{{"a", "b"}, {}};
  EXPECT_THROW(t.add({1}), std::invalid_argument);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
  EXPECT_EQ(parse_format("csv"), TableFormat::Csv);
}
