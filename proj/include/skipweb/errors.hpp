#pragma once

#include <stdexcept>
#include <string>

namespace skipweb {

enum class Errc {
  InvalidItem,
  CrossingSegments,
  UniverseMismatch,
  DuplicateKey,
  DuplicatePoint,
  DuplicateString,
  DuplicateItem,
  ItemNotFound,
  PointOutsideBounds,
  OutsideRoot,
  SymbolOutsideAlphabet,
  DegenerateInput,
  OnBoundary,
  MemoryTooSmall,
  WrongUniverse,
  DanglingHyperlink,
  UnresolvableHyperlink,
  ConfigError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidItem: return "InvalidItem";
    case Errc::CrossingSegments: return "CrossingSegments";
    case Errc::UniverseMismatch: return "UniverseMismatch";
    case Errc::DuplicateKey: return "DuplicateKey";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::DuplicateString: return "DuplicateString";
    case Errc::DuplicateItem: return "DuplicateItem";
    case Errc::ItemNotFound: return "ItemNotFound";
    case Errc::PointOutsideBounds: return "PointOutsideBounds";
    case Errc::OutsideRoot: return "OutsideRoot";
    case Errc::SymbolOutsideAlphabet: return "SymbolOutsideAlphabet";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::OnBoundary: return "OnBoundary";
    case Errc::MemoryTooSmall: return "MemoryTooSmall";
    case Errc::WrongUniverse: return "WrongUniverse";
    case Errc::DanglingHyperlink: return "DanglingHyperlink";
    case Errc::UnresolvableHyperlink: return "UnresolvableHyperlink";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace skipweb
