#include "qg/table_io.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace qg {

  std::string table_to_json(CayleyTable const& t) {
    nlohmann::ordered_json j;
    j["n"]    = t.order();
    j["rows"] = t.rows();
    return j.dump();
  }

  CayleyTable table_from_json(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ShapeError(std::string("invalid table JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
      throw ShapeError("table JSON must be an object with a \"rows\" array");
    }
    std::vector<std::vector<Int>> rows;
    try {
      rows = j["rows"].get<std::vector<std::vector<Int>>>();
    } catch (nlohmann::json::exception const& e) {
      throw ShapeError(std::string("table rows must be integer arrays: ")
                       + e.what());
    }
    if (j.contains("n")) {
      if (!j["n"].is_number_integer()
          || j["n"].get<Int>() != static_cast<Int>(rows.size())) {
        throw ShapeError("\"n\" does not match the number of rows");
      }
    }
    return CayleyTable::from_rows(rows);
  }

  std::string table_to_csv(CayleyTable const& t) {
    std::ostringstream out;
    for (Element x = 0; x < t.order(); ++x) {
      for (Element y = 0; y < t.order(); ++y) {
        if (y != 0) {
          out << ',';
        }
        out << t(x, y);
      }
      out << '\n';
    }
    return out.str();
  }

  CayleyTable table_from_csv(std::string_view text) {
    std::vector<std::vector<Int>> rows;
    std::istringstream            in{std::string(text)};
    std::string                   line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      if (line.empty()) {
        continue;
      }
      std::vector<Int>   row;
      std::istringstream cells(line);
      std::string        cell;
      while (std::getline(cells, cell, ',')) {
        try {
          std::size_t used = 0;
          row.push_back(std::stoll(cell, &used));
          if (cell.find_first_not_of(" \t", used) != std::string::npos) {
            throw std::invalid_argument(cell);
          }
        } catch (std::logic_error const&) {
          throw ShapeError("invalid CSV cell \"" + cell + "\"");
        }
      }
      rows.push_back(std::move(row));
    }
    return CayleyTable::from_rows(rows);
  }

  std::string format_table(CayleyTable const& t, bool one_based) {
    std::size_t const n      = t.order();
    Element const     offset = one_based ? 1 : 0;
    int const width = static_cast<int>(std::to_string(n - 1 + offset).size());

    std::ostringstream out;
    out << std::setw(width) << "." << " |";
    for (Element y = 0; y < n; ++y) {
      out << ' ' << std::setw(width) << y + offset;
    }
    out << '\n' << std::string(static_cast<std::size_t>(width) + 2, '-')
        << std::string(n * (static_cast<std::size_t>(width) + 1), '-') << '\n';
    for (Element x = 0; x < n; ++x) {
      out << std::setw(width) << x + offset << " |";
      for (Element y = 0; y < n; ++y) {
        out << ' ' << std::setw(width) << t(x, y) + offset;
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace qg
