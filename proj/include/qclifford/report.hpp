#pragma once

// Verification records. Suites state identities as symbolic equations; a
// CheckList decides their status, optionally after specializing both sides
// at a point.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qclifford/coeff.hpp"
#include "qclifford/exterior.hpp"

namespace qcl {

inline constexpr const char* kVersion = "0.1.0";

enum class Status { pass, fail, expected_fail };

std::string to_string(Status s);

struct Check {
  std::string id;
  std::string statement;
  Status status = Status::pass;
  std::optional<std::string> witness;
  friend bool operator==(const Check&, const Check&) = default;
};

/// lhs = rhs, stated symbolically.
struct Equation {
  std::string id;
  std::string statement;
  Multivector lhs;
  Multivector rhs;
};

/// Whether an identity is claimed to hold or is an expected counterexample.
enum class Expect { holds, fails };

class CheckList {
 public:
  explicit CheckList(std::optional<Point> point = std::nullopt) : point_(std::move(point)) {}

  const std::optional<Point>& point() const { return point_; }
  const std::vector<Check>& checks() const { return checks_; }

  void equal(const Equation& eq, Expect expect = Expect::holds);
  void equal(const std::string& id, const std::string& statement, const Multivector& lhs, const Multivector& rhs,
             Expect expect = Expect::holds);
  void equal(const std::string& id, const std::string& statement, const RatFunc& lhs, const RatFunc& rhs,
             Expect expect = Expect::holds);
  /// A structural fact computed by the caller (a rank, a dimension).
  void require(const std::string& id, const std::string& statement, bool ok, std::string witness,
               Expect expect = Expect::holds);
  /// A value extraction: always a pass, witness is the (specialized) value.
  void value(const std::string& id, const std::string& statement, const RatFunc& v);
  void value(const std::string& id, const std::string& statement, const Multivector& v);
  void info(const std::string& id, const std::string& statement, std::string witness);
  /// Runs `body`; a kernel error becomes a failed check carrying its message.
  void guarded(const std::string& id, const std::string& statement, const std::function<void()>& body);

  Multivector specialize(const Multivector& v) const;
  RatFunc specialize(const RatFunc& v) const;

 private:
  void add(Check c);
  void settle(const std::string& id, const std::string& statement, bool equal, std::string witness, Expect expect);

  std::optional<Point> point_;
  std::vector<Check> checks_;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int expected_fail = 0;
};

struct Report {
  std::string suite;
  int n = 0;
  int eps = -1;
  std::optional<std::string> point;
  std::vector<Check> checks;
  std::string version = kVersion;
  double seconds = 0;  // text output only

  Summary summary() const;
  std::string to_json() const;
  /// Inverse of to_json; throws ParseError on malformed input.
  static Report from_json(const std::string& text);
  std::string to_text() const;
};

}  // namespace qcl
