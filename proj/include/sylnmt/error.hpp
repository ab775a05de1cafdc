#pragma once

#include <stdexcept>
#include <string>

namespace sylnmt {

// Every failure the toolkit can raise carries one of these kinds so callers
// (and the CLI) can branch on the category without parsing messages.
enum class ErrorKind {
  // corpus
  FileMissing,
  NotUtf8,
  MalformedRow,
  EmptyCorpus,
  CorpusTooSmall,
  // textproc
  CapTooSmall,
  MaxLenTooSmall,
  InvalidId,
  // numcore
  EmptyTensor,
  EmptyMask,
  NonFiniteValue,
  // layers
  DimMismatch,
  EmptySequence,
  IdOutOfRange,
  MissingTape,
  // models
  InvalidConfig,
  MissingTarget,
  EmptyInput,
  // training
  ShapeMismatch,
  EmptyTrainSet,
  EmptyDataset,
  // metrics
  LengthMismatch,
  EmptyCounts,
  // iohub
  BadMagic,
  UnsupportedVersion,
  TruncatedFile,
  ChecksumMismatch,
  IoFailure,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace sylnmt
