#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scope {

/// Error categories surfaced across the engine. The CLI prints these as
/// machine-parseable single-line categories; tests match on them.
enum class Errc {
  MissingKey,
  MalformedDocument,
  NonEnumerableValue,
  HeterogeneousRecords,
  UnknownOp,
  ArityError,
  UnresolvedRef,
  ShapeMismatch,
  LimitExceeded,
  EvalError,
  MissingField,
  MissingBlock,
  UnterminatedBlock,
  AgentOutputUnparseable,
  SchemaDrift,
  PatienceExhausted,
  ProviderError,
  ReplayMiss,
  UnknownModel,
  MalformedDataset,
  DuplicateId,
  UsageError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);
  /// `tag` qualifies the category, e.g. PatienceExhausted(filter).
  Error(Errc code, const std::string& tag, const std::string& message);

  Errc code() const noexcept { return code_; }
  const std::string& tag() const noexcept { return tag_; }

  /// "PatienceExhausted(filter)" or plain "MissingKey".
  std::string category() const;

private:
  Errc code_;
  std::string tag_;
};

[[noreturn]] void raise(Errc code, const std::string& message);
[[noreturn]] void raise(Errc code, const std::string& tag, const std::string& message);

}  // namespace scope
