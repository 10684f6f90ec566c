#pragma once

// Paper tables stored as (row, col, value) CSV.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

struct Cell {
  std::string row, col, value;
};

inline std::vector<Cell> load_fixture(const std::string& name) {
  std::ifstream f(std::string(LRC_FIXTURES) + "/" + name + ".csv");
  if (!f) throw std::runtime_error("missing fixture " + name);
  std::vector<Cell> cells;
  std::string line;
  std::getline(f, line);
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    Cell c;
    std::getline(ss, c.row, ',');
    std::getline(ss, c.col, ',');
    std::getline(ss, c.value, ',');
    cells.push_back(c);
  }
  return cells;
}

inline std::string fixture_path(const std::string& file) { return std::string(LRC_FIXTURES) + "/" + file; }
