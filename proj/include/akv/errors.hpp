#ifndef AKV_ERRORS_HPP
#define AKV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace akv {

// Base class for all diagnosable failures in the workbench.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- numerical layer ---
struct NotHermitian : Error {
  explicit NotHermitian(const std::string& what) : Error(what) {}
};
struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& what) : Error(what) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// --- formal ring layer ---
struct NotAUnit : Error {
  explicit NotAUnit(const std::string& what) : Error(what) {}
};
struct NotAPerfectSquare : Error {
  explicit NotAPerfectSquare(const std::string& what) : Error(what) {}
};

// --- bundle calculus layer ---
struct NotAzumaya : Error {
  explicit NotAzumaya(const std::string& what) : Error(what) {}
};
struct NonIntegralRank : Error {
  explicit NonIntegralRank(const std::string& what) : Error(what) {}
};
struct NotTangent : Error {
  explicit NotTangent(const std::string& what) : Error(what) {}
};
struct RankMismatch : Error {
  explicit RankMismatch(const std::string& what) : Error(what) {}
};

// --- script layer ---
struct SyntaxError : Error {
  int line, col;
  SyntaxError(const std::string& what, int line_, int col_)
      : Error(what + " at line " + std::to_string(line_) + ", column " +
              std::to_string(col_)),
        line(line_), col(col_) {}
};
struct ResolveError : Error {
  int line, col;
  ResolveError(const std::string& what, int line_, int col_)
      : Error(what + " at line " + std::to_string(line_) + ", column " +
              std::to_string(col_)),
        line(line_), col(col_) {}
};
struct UseBeforeDeclare : ResolveError {
  UseBeforeDeclare(const std::string& name, int line_, int col_)
      : ResolveError("name '" + name + "' used before declaration", line_, col_) {}
};

}  // namespace akv

#endif
