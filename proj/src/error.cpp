#include "sylnmt/error.hpp"

namespace sylnmt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FileMissing: return "FileMissing";
    case ErrorKind::NotUtf8: return "NotUtf8";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::CorpusTooSmall: return "CorpusTooSmall";
    case ErrorKind::CapTooSmall: return "CapTooSmall";
    case ErrorKind::MaxLenTooSmall: return "MaxLenTooSmall";
    case ErrorKind::InvalidId: return "InvalidId";
    case ErrorKind::EmptyTensor: return "EmptyTensor";
    case ErrorKind::EmptyMask: return "EmptyMask";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::EmptySequence: return "EmptySequence";
    case ErrorKind::IdOutOfRange: return "IdOutOfRange";
    case ErrorKind::MissingTape: return "MissingTape";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::MissingTarget: return "MissingTarget";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::EmptyTrainSet: return "EmptyTrainSet";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyCounts: return "EmptyCounts";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorKind::TruncatedFile: return "TruncatedFile";
    case ErrorKind::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace sylnmt
