#include "agriont/csv.hpp"

namespace agriont {

CsvReader::CsvReader(std::istream& in) : in_(in) {
  std::size_t startLine = 0;
  if (readRecord(header_, startLine)) {
    for (std::size_t i = 0; i < header_.size(); ++i)
      columns_.emplace(header_[i], i);
    headerRead_ = true;
  }
}

bool CsvReader::hasColumn(const std::string& name) const {
  return columns_.count(name) != 0;
}

bool CsvReader::next(CsvRow& row) {
  row.fields.clear();
  return readRecord(row.fields, row.line);
}

std::string CsvReader::field(const CsvRow& row,
                             const std::string& name) const {
  auto it = columns_.find(name);
  if (it == columns_.end() || it->second >= row.fields.size()) return "";
  return row.fields[it->second];
}

bool CsvReader::readRecord(std::vector<std::string>& fields,
                           std::size_t& startLine) {
  std::string line;
  // Skip blank lines.
  do {
    if (!std::getline(in_, line)) return false;
    ++line_;
  } while (line.empty() || line == "\r");
  startLine = line_;

  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::string field;
  bool quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i >= line.size()) {
      if (quoted) {
        // Quoted field continues on the next physical line.
        if (!std::getline(in_, line)) break;
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        field += '\n';
        i = 0;
        continue;
      }
      break;
    }
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
    ++i;
  }
  fields.push_back(field);
  return true;
}

std::string csvEscape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace agriont
