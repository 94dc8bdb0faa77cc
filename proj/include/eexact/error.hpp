#pragma once
#include <stdexcept>
#include <string>

namespace eexact {

// Every failure the library can signal deliberately. CLI maps these to exit codes:
// malformed/inconsistent input -> 2, exhausted searches -> 3.
enum class ErrorKind {
  BadInput,             // unparsable or schema-violating document
  IllDefined,           // matrix does not define a morphism between the given modules
  DimensionMismatch,    // matrix/vector shapes disagree
  AmbientMismatch,      // submodule used with the wrong ambient module
  RingMismatch,         // mixed Z and Z/n operands, or op needs ring Z
  ForeignElement,       // element coords outside the module
  NotComposable,        // target != source in a would-be composition
  NotAComplex,          // consecutive composite nonzero
  NotSingular,          // essential_extension_of on a module with free part
  SearchExhausted,      // complement/witness search ran out of candidates
  GenerationExhausted,  // rejection sampling could not hit the trial quota
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::BadInput: return "bad_input";
    case ErrorKind::IllDefined: return "ill_defined";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::AmbientMismatch: return "ambient_mismatch";
    case ErrorKind::RingMismatch: return "ring_mismatch";
    case ErrorKind::ForeignElement: return "foreign_element";
    case ErrorKind::NotComposable: return "not_composable";
    case ErrorKind::NotAComplex: return "not_a_complex";
    case ErrorKind::NotSingular: return "not_singular";
    case ErrorKind::SearchExhausted: return "search_exhausted";
    case ErrorKind::GenerationExhausted: return "generation_exhausted";
  }
  return "unknown";
}

}  // namespace eexact
