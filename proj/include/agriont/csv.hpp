#ifndef AGRIONT_CSV_HPP
#define AGRIONT_CSV_HPP

#include <istream>
#include <map>
#include <string>
#include <vector>

namespace agriont {

struct CsvRow {
  std::size_t line = 0;  // 1-based line of the row start
  std::vector<std::string> fields;
};

/// Minimal RFC-4180 reader: comma separated, double-quote escaping,
/// quoted fields may span lines.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in);

  const std::vector<std::string>& header() const { return header_; }
  bool hasColumn(const std::string& name) const;

  /// Reads the next data row; false at end of input. Empty lines skipped.
  bool next(CsvRow& row);

  /// Field by header name, empty string when the column is absent or the
  /// row is short.
  std::string field(const CsvRow& row, const std::string& name) const;

 private:
  bool readRecord(std::vector<std::string>& fields, std::size_t& startLine);

  std::istream& in_;
  std::vector<std::string> header_;
  std::map<std::string, std::size_t> columns_;
  std::size_t line_ = 0;
  bool headerRead_ = false;
};

std::string csvEscape(const std::string& field);

}  // namespace agriont

#endif
