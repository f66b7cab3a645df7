#pragma once

#include <stdexcept>
#include <string>

namespace charlab {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Group construction.
class InvalidPermutation : public Error { public: using Error::Error; };
class OrderExceeded : public Error { public: using Error::Error; };
class NotAssociative : public Error { public: using Error::Error; };
class NoIdentity : public Error { public: using Error::Error; };
class NoInverse : public Error { public: using Error::Error; };

// Subgroup machinery. NotSubgroup is raised when an element set that is
// required to be a subgroup fails closure; on well-formed character tables
// this cannot happen, so it doubles as the corruption detector.
class NotSubgroup : public Error { public: using Error::Error; };
class NeitherNormal : public Error { public: using Error::Error; };
class NotNormal : public Error { public: using Error::Error; };
class LatticeTooLarge : public Error { public: using Error::Error; };

// Search engines.
class SearchBudgetExceeded : public Error { public: using Error::Error; };
class CapExceeded : public Error { public: using Error::Error; };

// Cyclotomic arithmetic.
class MixedOrder : public Error { public: using Error::Error; };

// Character table engine.
class SplitFailed : public Error { public: using Error::Error; };
class LiftInconsistent : public Error { public: using Error::Error; };

// Character properties / verifiers.
class AbelianInput : public Error { public: using Error::Error; };
class InternalInconsistency : public Error { public: using Error::Error; };
class NotPGroup : public Error { public: using Error::Error; };
class MatchFailed : public Error { public: using Error::Error; };

// Catalog and file I/O.
class BadRecipe : public Error { public: using Error::Error; };

class ParseError : public Error {
  public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

}  // namespace charlab
