#ifndef LATGRAPH_ERROR_HPP
#define LATGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace latgraph {

// Contract violations carry a machine-readable kind so the CLI can map them
// to stable exit codes / JSON error objects.
enum class ErrorKind {
  SelfLoop,
  Disconnected,
  BadRotation,
  BadInput,
  NotSphere,
  NotTorus,
  NotBipartite,
  NotOrientation,
  CirculationMismatch,
  NotAHeight,
  NotMaximal,
  NotMinimal,
  ExcludedClass,
  TooLarge,
  NoFactor,
  NotAFactor,
  NotAlternating,
  NotSimplyConnected,
  NotSpanningTree,
  NotPivotal,
  NotPivotal4,
  NotPerfectMatching,
  NotGraded,
  NotIncident,
  NotOuterHamiltonian,
  BadParams,
  ParseError,
  SchemaError,
  Internal,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BadRotation: return "BadRotation";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::NotSphere: return "NotSphere";
    case ErrorKind::NotTorus: return "NotTorus";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::NotOrientation: return "NotOrientation";
    case ErrorKind::CirculationMismatch: return "CirculationMismatch";
    case ErrorKind::NotAHeight: return "NotAHeight";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::ExcludedClass: return "ExcludedClass";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoFactor: return "NoFactor";
    case ErrorKind::NotAFactor: return "NotAFactor";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorKind::NotSpanningTree: return "NotSpanningTree";
    case ErrorKind::NotPivotal: return "NotPivotal";
    case ErrorKind::NotPivotal4: return "NotPivotal4";
    case ErrorKind::NotPerfectMatching: return "NotPerfectMatching";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotIncident: return "NotIncident";
    case ErrorKind::NotOuterHamiltonian: return "NotOuterHamiltonian";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace latgraph

#endif  // LATGRAPH_ERROR_HPP
