#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alterlda {

enum class ErrorKind {
  MalformedXml,
  MissingBody,
  DuplicateDocId,
  EmptyDictionary,
  DimensionMismatch,
  EmptyCorpus,
  IndexOutOfRange,
  VocabularyMismatch,
  UnknownMetadataKey,
  NoAlteredDocuments,
  EmptyInput,
  SingleClass,
  InvalidArgument,
  FormatError,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this type; `kind()` names the
/// category and `module()` the component that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string_view module, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

}  // namespace alterlda
