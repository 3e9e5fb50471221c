#ifndef KDVGAL_REPORT_HPP
#define KDVGAL_REPORT_HPP

#include <string>
#include <vector>

#include "kdvgal/rational.hpp"
#include "kdvgal/ypoly.hpp"

namespace kdvgal {

struct CheckRecord {
  std::string identity;
  std::string location;
  int g = -1;  // -1 when the record is not attached to a genus
  std::vector<int> ks;
  std::string lhs;
  std::string rhs;
  bool ok = false;
};

struct VerificationReport {
  std::string identity;
  int gmax = 0;
  int nmax = 0;
  int kmax = 0;
  int qmax = 0;
  std::string window;  // exactness window, human readable
  std::vector<CheckRecord> records;
  double seconds = 0;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  const CheckRecord* first_failure() const;

  void check(const std::string& id, const std::string& location, int g, const std::vector<int>& ks,
             const Rational& lhs, const Rational& rhs);
  void check(const std::string& id, const std::string& location, int g, const std::vector<int>& ks,
             const YPoly& lhs, const YPoly& rhs);
  void merge(const VerificationReport& other);
};

std::string ks_label(const std::vector<int>& ks);

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_output_format(const std::string& name);

// Deterministic rendering of a batch of reports: every record, then one
// summary line per report (table), a single JSON document, or CSV rows.
// Wall time is left out so identical runs give identical bytes.
std::string format_reports(const std::vector<VerificationReport>& reports, OutputFormat format);

}  // namespace kdvgal

#endif
