#ifndef RACAH_ERROR_HPP
#define RACAH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace racah {

/// Base class for all domain errors. `code()` is a stable machine-readable
/// tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Two polynomials (or a polynomial and a tag) disagree about group sets.
struct GroupMismatch : Error {
  explicit GroupMismatch(const std::string& m) : Error("GroupMismatch", m) {}
};

/// A polynomial was expected to be a weight eigenvector but is not.
struct NotWeightVector : Error {
  explicit NotWeightVector(const std::string& m)
      : Error("NotWeightVector", m) {}
};

/// Integer rows fail the interlacing inequalities (or the top row is not the
/// requested weight).
struct NotAPattern : Error {
  explicit NotAPattern(const std::string& m) : Error("NotAPattern", m) {}
};

/// A highest weight outside the supported cone [m1 >= m2 >= m3 = 0].
struct InvalidWeight : Error {
  explicit InvalidWeight(const std::string& m) : Error("InvalidWeight", m) {}
};

/// A multiplicity label violates the degree equations of its weight triple.
struct IncompatibleLabels : Error {
  explicit IncompatibleLabels(const std::string& m)
      : Error("IncompatibleLabels", m) {}
};

/// A computation would exceed the configured size bound.
struct ScaleExceeded : Error {
  explicit ScaleExceeded(const std::string& m) : Error("ScaleExceeded", m) {}
};

}  // namespace racah

#endif
