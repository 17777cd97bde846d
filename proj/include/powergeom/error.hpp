#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace powergeom {

enum class errc {
  non_finite,
  index_out_of_range,
  division_by_near_zero,
  domain_error,
  zero_resistance,
  dangling_branch,
  degenerate_metric,
  bad_domain,
  denominator_zero,
  schema_mismatch,
  parse_error,
  io_error,
};

constexpr std::string_view to_string(errc code) {
  switch (code) {
    case errc::non_finite: return "NonFinite";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::division_by_near_zero: return "DivisionByNearZero";
    case errc::domain_error: return "DomainError";
    case errc::zero_resistance: return "ZeroResistance";
    case errc::dangling_branch: return "DanglingBranch";
    case errc::degenerate_metric: return "DegenerateMetric";
    case errc::bad_domain: return "BadDomain";
    case errc::denominator_zero: return "DenominatorZero";
    case errc::schema_mismatch: return "SchemaMismatch";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace powergeom
