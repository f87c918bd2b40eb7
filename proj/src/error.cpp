#include "alterlda/error.hpp"

namespace alterlda {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedXml: return "MalformedXml";
    case ErrorKind::MissingBody: return "MissingBody";
    case ErrorKind::DuplicateDocId: return "DuplicateDocId";
    case ErrorKind::EmptyDictionary: return "EmptyDictionary";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::VocabularyMismatch: return "VocabularyMismatch";
    case ErrorKind::UnknownMetadataKey: return "UnknownMetadataKey";
    case ErrorKind::NoAlteredDocuments: return "NoAlteredDocuments";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::SingleClass: return "SingleClass";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string_view module, const std::string& message)
    : std::runtime_error(std::string(module) + ": " + std::string(to_string(kind)) + ": " +
                         message),
      kind_(kind),
      module_(module) {}

}  // namespace alterlda
