#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "latentfs/dataset.hpp"
#include "latentfs/errors.hpp"

using latentfs::class_stats;
using latentfs::Error;
using latentfs::FeatureMatrix;
using latentfs::load_csv;
using latentfs::save_csv;

namespace {

std::filesystem::path write_temp(const std::string &name, const std::string &body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

std::string error_name(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.name();
  }
  return "";
}

}  // namespace

TEST_CASE("load_csv parses a small table") {
  auto path = write_temp("lfs_basic.csv",
                         "a,b,label\n"
                         "1.0,2.0,x\n"
                         "3.0,4.0,y\n"
                         "5.0,6.0,x\n");
  FeatureMatrix fm = load_csv(path.string(), "label");
  CHECK(fm.num_samples() == 3);
  CHECK(fm.num_features() == 2);
  CHECK(fm.num_classes == 2);
  CHECK(fm.feature_names == std::vector<std::string>{"a", "b"});
  // Labels are re-encoded 1..K in order of first appearance.
  CHECK(fm.labels == std::vector<int>{1, 2, 1});
  CHECK(fm.values(1, 0) == 3.0);
  CHECK(fm.values(2, 1) == 6.0);
}

TEST_CASE("label column may sit anywhere") {
  auto path = write_temp("lfs_mid.csv",
                         "a,label,b\n"
                         "1, c1 ,2\n"
                         "3,c2,4\n");
  FeatureMatrix fm = load_csv(path.string(), "label");
  CHECK(fm.feature_names == std::vector<std::string>{"a", "b"});
  CHECK(fm.labels == std::vector<int>{1, 2});
  CHECK(fm.values(0, 1) == 2.0);
}

TEST_CASE("whitespace and CRLF are tolerated") {
  auto path = write_temp("lfs_crlf.csv",
                         "a , b ,label\r\n"
                         " 1 ,2,x\r\n"
                         "3, 4 ,y\r\n");
  FeatureMatrix fm = load_csv(path.string(), "label");
  CHECK(fm.feature_names == std::vector<std::string>{"a", "b"});
  CHECK(fm.values(0, 0) == 1.0);
  CHECK(fm.values(1, 1) == 4.0);
}

TEST_CASE("loader rejects malformed input") {
  CHECK(error_name([] { load_csv("/nonexistent/nope.csv", "label"); }) == "IoError");

  auto missing = write_temp("lfs_missing.csv", "a,b\n1,2\n");
  CHECK(error_name([&] { load_csv(missing.string(), "label"); }) == "MissingColumn");

  auto empty = write_temp("lfs_empty.csv", "");
  CHECK(error_name([&] { load_csv(empty.string(), "label"); }) == "EmptyDataset");

  auto headers_only = write_temp("lfs_header.csv", "a,label\n");
  CHECK(error_name([&] { load_csv(headers_only.string(), "label"); }) == "EmptyDataset");

  auto no_features = write_temp("lfs_nofeat.csv", "label\nx\ny\n");
  CHECK(error_name([&] { load_csv(no_features.string(), "label"); }) == "EmptyDataset");

  auto one_class = write_temp("lfs_oneclass.csv", "a,label\n1,x\n2,x\n");
  CHECK(error_name([&] { load_csv(one_class.string(), "label"); }) == "SingleClass");

  auto bad_cell = write_temp("lfs_badcell.csv", "a,label\nfoo,x\n2,y\n");
  CHECK(error_name([&] { load_csv(bad_cell.string(), "label"); }) == "ParseError");

  auto ragged = write_temp("lfs_ragged.csv", "a,b,label\n1,2,x\n3,y\n");
  CHECK(error_name([&] { load_csv(ragged.string(), "label"); }) == "ParseError");

  auto quoted = write_temp("lfs_quoted.csv", "a,label\n\"1\",x\n2,y\n");
  CHECK(error_name([&] { load_csv(quoted.string(), "label"); }) == "ParseError");

  auto inf_cell = write_temp("lfs_inf.csv", "a,label\ninf,x\n2,y\n");
  CHECK(error_name([&] { load_csv(inf_cell.string(), "label"); }) == "ParseError");

  auto empty_label = write_temp("lfs_nolabel.csv", "a,label\n1,\n2,y\n");
  CHECK(error_name([&] { load_csv(empty_label.string(), "label"); }) == "ParseError");
}

TEST_CASE("parse errors carry 1-based coordinates") {
  auto path = write_temp("lfs_coords.csv", "a,b,label\n1,2,x\n1,bad,y\n");
  try {
    load_csv(path.string(), "label");
    FAIL("expected ParseError");
  } catch (const Error &e) {
    CHECK(e.name() == "ParseError");
    const std::string what = e.what();
    CHECK(what.find("row 3") != std::string::npos);
    CHECK(what.find("column 2") != std::string::npos);
  }
}

TEST_CASE("save_csv round-trips through load_csv") {
  FeatureMatrix fm;
  fm.values = latentfs::Matrix(2, 2);
  fm.values(0, 0) = 0.1;
  fm.values(0, 1) = -3.75;
  fm.values(1, 0) = 1.0 / 3.0;
  fm.values(1, 1) = 12345.678901234567;
  fm.labels = {1, 2};
  fm.feature_names = {"u", "v"};
  fm.num_classes = 2;

  auto path = std::filesystem::temp_directory_path() / "lfs_roundtrip.csv";
  save_csv(fm, path.string());
  FeatureMatrix back = load_csv(path.string(), "label");
  CHECK(back.num_samples() == 2);
  CHECK(back.feature_names == fm.feature_names);
  CHECK(back.labels == fm.labels);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) CHECK(back.values(i, j) == fm.values(i, j));
}

TEST_CASE("class_stats computes population moments per class") {
  FeatureMatrix fm;
  fm.values = latentfs::Matrix(4, 1);
  fm.values(0, 0) = 0.0;
  fm.values(1, 0) = 2.0;
  fm.values(2, 0) = 1.0;
  fm.values(3, 0) = 3.0;
  fm.labels = {1, 1, 2, 2};
  fm.feature_names = {"a"};
  fm.num_classes = 2;

  auto stats = class_stats(fm);
  CHECK(stats.mu(0, 0) == 1.0);
  CHECK(stats.mu(1, 0) == 2.0);
  CHECK(stats.sigma(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(stats.sigma(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(stats.sigma_sq_sum[0] == doctest::Approx(2.0).epsilon(1e-15));
}
