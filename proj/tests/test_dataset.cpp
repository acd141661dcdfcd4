#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "frbcs/dataset.hpp"

using namespace frbcs;

namespace {

struct TempCsv {
  std::filesystem::path path;
  explicit TempCsv(const std::string& content) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("frbcs_test_" + std::to_string(counter++) + ".csv");
    std::ofstream out(path);
    out << content;
  }
  ~TempCsv() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("load_csv parses attributes and dense labels") {
  TempCsv f("1.0,2.0,a\n3.0,4.0,b\n5.0,6.0,a\n");
  auto ds = load_csv(f.path.string());
  CHECK(ds.size() == 3);
  CHECK(ds.dimensionality() == 2);
  CHECK(ds.class_count() == 2);
  CHECK(ds.labels == std::vector<int>{0, 1, 0});
  CHECK(ds.class_names == std::vector<std::string>{"a", "b"});
}

TEST_CASE("rows with missing values are dropped and counted") {
  TempCsv f("1.0,2.0,a\n?,4.0,b\n5.0,,a\n7.0,8.0,b\n");
  auto ds = load_csv(f.path.string());
  CHECK(ds.size() == 2);
  CHECK(ds.dropped_rows == 2);
}

TEST_CASE("a file with only missing rows is an empty dataset") {
  TempCsv f("?,2.0,a\n1.0,?,b\n");
  CHECK_THROWS_AS(load_csv(f.path.string()), EmptyDataset);
}

TEST_CASE("malformed rows name the line number") {
  TempCsv f("1.0,2.0,a\n1.0,zzz,b\n");
  try {
    load_csv(f.path.string());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
}

TEST_CASE("label column position does not change the dataset") {
  TempCsv last("1.0,2.0,a\n3.0,4.0,b\n");
  TempCsv first("a,1.0,2.0\nb,3.0,4.0\n");
  auto ds_last = load_csv(last.path.string());
  auto ds_first = load_csv(first.path.string(), {false, 0});
  CHECK(ds_last.patterns == ds_first.patterns);
  CHECK(ds_last.labels == ds_first.labels);
  CHECK(ds_last.class_names == ds_first.class_names);
}

TEST_CASE("header row supplies attribute names") {
  TempCsv f("width,height,label\n1.0,2.0,a\n3.0,4.0,b\n");
  auto ds = load_csv(f.path.string(), {true, -1});
  CHECK(ds.size() == 2);
  CHECK(ds.attribute_names == std::vector<std::string>{"width", "height"});
}

TEST_CASE("normalization fits on train and clamps test") {
  Dataset train;
  train.patterns = {{2.0}, {10.0}};
  train.labels = {0, 0};
  train.class_names = {"a"};
  train.attribute_names = {"x"};
  Dataset test = train;
  test.patterns = {{6.0}, {12.0}, {0.0}};
  test.labels = {0, 0, 0};

  auto [ntrain, ntest] = normalize(train, test);
  CHECK(ntrain.patterns[0][0] == 0.0);
  CHECK(ntrain.patterns[1][0] == 1.0);
  CHECK(ntest.patterns[0][0] == doctest::Approx(0.5));
  CHECK(ntest.patterns[1][0] == 1.0);  // clamped
  CHECK(ntest.patterns[2][0] == 0.0);  // clamped
}

TEST_CASE("constant attributes map to 0.5") {
  Dataset train;
  train.patterns = {{3.0}, {3.0}};
  train.labels = {0, 0};
  train.class_names = {"a"};
  train.attribute_names = {"x"};
  auto model = NormalizationModel::fit(train);
  auto out = model.transform(train);
  CHECK(out.patterns[0][0] == 0.5);
  CHECK(out.patterns[1][0] == 0.5);
}

TEST_CASE("fitted transform is independent of test values") {
  Dataset train;
  train.patterns = {{1.0, 5.0}, {4.0, 9.0}};
  train.labels = {0, 1};
  train.class_names = {"a", "b"};
  train.attribute_names = {"x", "y"};
  auto model = NormalizationModel::fit(train);

  Dataset test1 = train, test2 = train;
  test1.patterns = {{2.0, 6.0}};
  test2.patterns = {{-100.0, 1e6}};
  test1.labels = test2.labels = {0};
  auto out1 = model.transform(test1);
  // Perturbing test rows cannot change the transform applied to other rows.
  auto out2 = model.transform(test2);
  CHECK(out1.patterns[0][0] == doctest::Approx((2.0 - 1.0) / 3.0));
  CHECK(out2.patterns[0][0] == 0.0);
  CHECK(out2.patterns[0][1] == 1.0);
}
