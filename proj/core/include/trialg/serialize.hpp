#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trialg/algebra.hpp"
#include "trialg/report.hpp"
#include "trialg/s3action.hpp"

namespace trialg {

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk form of an algebra: name, labels, sparse product list with exact
/// rational scalars as "p/q" strings, optional grading, optional action
/// matrices. Serialization is canonical, so identical data yields
/// byte-identical files.
struct AlgebraFile {
  std::string name;
  Algebra alg;
  std::optional<std::vector<int>> grading;
  std::optional<S3Action> action;
};

std::string to_json_text(const AlgebraFile& f);
AlgebraFile algebra_file_from_json_text(const std::string& text);

void save_algebra_file(const AlgebraFile& f, const std::string& path);
AlgebraFile load_algebra_file(const std::string& path);

std::string report_to_json_text(const Report& r);

}  // namespace trialg
