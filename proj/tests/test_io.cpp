#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "spm/disjointness.hpp"
#include "spm/io.hpp"
#include "spm/sudoku.hpp"

using namespace spm;

TEST_CASE("mask hex encoding") {
  CHECK(mask_to_hex(2, 0xfu) == "f");
  CHECK(mask_to_hex(3, 0x1bu) == "01b");
  CHECK(mask_to_hex(4, 0x1u) == "0001");
  CHECK(mask_to_hex(5, 0x1ffffffu) == "1ffffff");
}

TEST_CASE("graph-class file round trip") {
  const auto reps = enumerate_class_reps(3, 6);
  std::stringstream buffer;
  write_graph_class_file(buffer, 3, 6, reps);

  std::string header;
  std::getline(buffer, header);
  CHECK(header == "n=3 k=6 count=6");
  std::string first_mask;
  std::getline(buffer, first_mask);
  CHECK(first_mask.size() == 3);

  buffer.clear();
  buffer.seekg(0);
  const GraphClassFile file = read_graph_class_file(buffer);
  CHECK(file.n == 3);
  CHECK(file.k == 6);
  REQUIRE(file.reps.size() == reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(file.reps[i] == reps[i]);
  }
}

TEST_CASE("graph-class file rejects malformed input") {
  std::stringstream no_header("garbage\n");
  CHECK_THROWS_AS(read_graph_class_file(no_header), validation_error);

  std::stringstream bad_mask("n=2 k=1 count=1\nzz\n");
  CHECK_THROWS_AS(read_graph_class_file(bad_mask), validation_error);

  std::stringstream wrong_popcount("n=2 k=2 count=1\n1\n");
  CHECK_THROWS_AS(read_graph_class_file(wrong_popcount), validation_error);

  std::stringstream truncated("n=2 k=1 count=3\n1\n");
  CHECK_THROWS_AS(read_graph_class_file(truncated), validation_error);
}

TEST_CASE("sudoku file round trip") {
  const SudokuMatrix p = random_sudoku(3, 99);
  std::stringstream buffer;
  write_sudoku(buffer, p);
  CHECK(read_sudoku(buffer) == p);

  std::stringstream ragged("1 2 3 4\n3 4 1 2\n2 1 4\n4 3 2 1\n");
  CHECK_THROWS_AS(read_sudoku(ragged), validation_error);
  std::stringstream not_square("1 2 3\n");
  CHECK_THROWS_AS(read_sudoku(not_square), validation_error);
}

TEST_CASE("family file round trip") {
  const auto family = sample_disjoint_family(2, 5);
  std::stringstream buffer;
  write_family(buffer, family);

  std::string header;
  std::getline(buffer, header);
  CHECK(header == "n=2 count=4");
  buffer.clear();
  buffer.seekg(0);
  const auto loaded = read_family(buffer);
  REQUIRE(loaded.size() == family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    CHECK(loaded[i] == family[i]);
  }

  std::stringstream bad_code("n=2 count=1\n0 4 1 2\n");
  CHECK_THROWS_AS(read_family(bad_code), validation_error);
}

TEST_CASE("clique list format") {
  const DisjointnessGraph g = build_disjointness_graph(2);
  std::stringstream buffer;
  write_clique_list(buffer, list_cliques(g, 4));
  std::string line;
  int lines = 0;
  while (std::getline(buffer, line)) {
    ++lines;
    std::istringstream row(line);
    int value = 0;
    int fields = 0;
    int prev = -1;
    while (row >> value) {
      CHECK(value > prev);
      prev = value;
      ++fields;
    }
    CHECK(fields == 4);
  }
  CHECK(lines == 12);
}

TEST_CASE("count report JSON shape") {
  const std::string text = count_report_to_json(count_report(2));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["n"] == 2);
  CHECK(j["per_k"].size() == 5);
  CHECK(j["per_k"][1]["theta"] == "4/1");
  CHECK(j["per_k"][4]["theta"] == "1/4");
  CHECK(j["per_k"][0]["q"] == "256");
  CHECK(j["per_k"][2]["q"] == "160");
  CHECK(j["ordered_disjoint_pairs"] == "112");
  CHECK(j["unordered_disjoint_pairs"] == "56");
  CHECK(j["dual_path_check"] == "ok");
}
