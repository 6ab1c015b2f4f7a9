#pragma once

#include <string>
#include <vector>

#include "json_io.hpp"

namespace sf::cli {

// "a d/dx + b d/dy" for a vector field in the given ring.
std::string field_text(const std::vector<RatFn>& v, const Ring& r);

// One row of a regenerated table.
struct TableRow {
  Json json;
  std::string text;
  bool ok = true;
};

// Flat coordinates of the natural Saito structure and d_{t^n} * d_{t^n}.
TableRow flat_row(const std::string& group);
TableRow covering_row(const CoveringMap& pi, int index);
TableRow lines_row(const std::string& group);

struct Table {
  std::string file;   // stem under the output directory
  std::string title;
  std::vector<TableRow> rows;
  bool ok() const;
};

// Builds every table, fanning the rows out to the worker pool.
std::vector<Table> build_tables();

// Writes <file>.txt and <file>.json for each table.
void write_tables(const std::vector<Table>& tables, const std::string& dir);

}  // namespace sf::cli
