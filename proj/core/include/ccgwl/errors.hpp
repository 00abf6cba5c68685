#pragma once

#include <stdexcept>
#include <string>

namespace ccgwl {

// Invalid configuration (empty inventories, bad hyperparameters, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ill-typed term construction or application.
struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A term whose type cannot be grounded against a scene.
struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word meaning that violates the single-property contract.
struct MalformedEntryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Categories combine but the semantic types do not.
struct CompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No complete derivation spans the utterance.
struct NoParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A token with no lexicon entry; carries the offending token so the
// learner can route it to lexical induction.
class UnknownWordError : public std::runtime_error {
 public:
  explicit UnknownWordError(std::string token)
      : std::runtime_error("unknown word: " + token), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

}  // namespace ccgwl
