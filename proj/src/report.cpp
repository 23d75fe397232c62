#include "qclifford/report.hpp"

#include <cstdio>
#include <set>

#include <json.hpp>

#include "qclifford/errors.hpp"

namespace qcl {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::expected_fail: return "expected-fail";
  }
  return "fail";
}

namespace {

Status status_from(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "expected-fail") return Status::expected_fail;
  throw ParseError("unknown status '" + s + "'", 0);
}

}  // namespace

RatFunc CheckList::specialize(const RatFunc& v) const { return point_ ? point_->specialize(v) : v; }

Multivector CheckList::specialize(const Multivector& v) const {
  if (!point_) return v;
  return map_coefficients(v, [this](const RatFunc& c) { return point_->specialize(c); });
}

void CheckList::add(Check c) {
  for (const auto& existing : checks_)
    if (existing.id == c.id) throw InvalidArgument("duplicate check id " + c.id);
  checks_.push_back(std::move(c));
}

void CheckList::settle(const std::string& id, const std::string& statement, bool equal, std::string witness,
                       Expect expect) {
  Check c{id, statement, Status::pass, std::nullopt};
  if (expect == Expect::holds) {
    if (!equal) {
      c.status = Status::fail;
      c.witness = std::move(witness);
    }
  } else if (equal) {
    c.status = Status::fail;
    c.witness = "expected a counterexample, identity holds";
  } else {
    c.status = Status::expected_fail;
    c.witness = std::move(witness);
  }
  add(std::move(c));
}

void CheckList::equal(const Equation& eq, Expect expect) { equal(eq.id, eq.statement, eq.lhs, eq.rhs, expect); }

void CheckList::equal(const std::string& id, const std::string& statement, const Multivector& lhs,
                      const Multivector& rhs, Expect expect) {
  guarded(id, statement, [&] {
    Multivector diff = specialize(lhs) - specialize(rhs);
    settle(id, statement, diff.is_zero(), "lhs - rhs = " + diff.to_string(), expect);
  });
}

void CheckList::equal(const std::string& id, const std::string& statement, const RatFunc& lhs, const RatFunc& rhs,
                      Expect expect) {
  guarded(id, statement, [&] {
    RatFunc diff = specialize(lhs) - specialize(rhs);
    settle(id, statement, diff.is_zero(), "lhs - rhs = " + diff.to_string(), expect);
  });
}

void CheckList::require(const std::string& id, const std::string& statement, bool ok, std::string witness,
                        Expect expect) {
  settle(id, statement, ok, witness, expect);
  if (ok && expect == Expect::holds) checks_.back().witness = std::move(witness);
}

void CheckList::value(const std::string& id, const std::string& statement, const RatFunc& v) {
  guarded(id, statement, [&] { add({id, statement, Status::pass, specialize(v).to_string()}); });
}

void CheckList::value(const std::string& id, const std::string& statement, const Multivector& v) {
  guarded(id, statement, [&] { add({id, statement, Status::pass, specialize(v).to_string()}); });
}

void CheckList::info(const std::string& id, const std::string& statement, std::string witness) {
  add({id, statement, Status::pass, std::move(witness)});
}

void CheckList::guarded(const std::string& id, const std::string& statement, const std::function<void()>& body) {
  std::size_t before = checks_.size();
  std::optional<std::string> failure;
  try {
    body();
  } catch (const GuardFailure& g) {
    failure = g.guard();
  } catch (const Error& e) {
    failure = e.what();
  }
  if (!failure) return;
  checks_.resize(before);
  add({id, statement, Status::fail, *failure});
}

Summary Report::summary() const {
  Summary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::expected_fail: ++s.expected_fail; break;
    }
  }
  return s;
}

std::string Report::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["suite"] = suite;
  j["parameters"] = {{"n", n}, {"eps", eps}, {"point", point ? ordered_json(*point) : ordered_json(nullptr)}};
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["status"] = to_string(c.status);
    e["witness"] = c.witness ? ordered_json(*c.witness) : ordered_json(nullptr);
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  Summary s = summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"expected_fail", s.expected_fail}};
  j["version"] = version;
  return j.dump(2) + "\n";
}

Report Report::from_json(const std::string& text) {
  using nlohmann::ordered_json;
  Report r;
  try {
    ordered_json j = ordered_json::parse(text);
    r.suite = j.at("suite").get<std::string>();
    const auto& p = j.at("parameters");
    r.n = p.at("n").get<int>();
    r.eps = p.at("eps").get<int>();
    if (!p.at("point").is_null()) r.point = p.at("point").get<std::string>();
    for (const auto& e : j.at("checks")) {
      Check c{e.at("id").get<std::string>(), e.at("statement").get<std::string>(),
              status_from(e.at("status").get<std::string>()), std::nullopt};
      if (e.contains("witness") && !e.at("witness").is_null()) c.witness = e.at("witness").get<std::string>();
      r.checks.push_back(std::move(c));
    }
    r.version = j.at("version").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
  return r;
}

std::string Report::to_text() const {
  std::string out = "suite " + suite + "  n=" + std::to_string(n) + "  eps=" + std::to_string(eps) +
                    "  point=" + (point ? *point : "symbolic") + "\n";
  for (const auto& c : checks) {
    std::string tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "XFAIL";
    tag.resize(6, ' ');
    out += tag + c.id + "  " + c.statement;
    if (c.witness) out += "\n      -> " + *c.witness;
    out += "\n";
  }
  Summary s = summary();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", seconds);
  out += "summary: " + std::to_string(s.pass) + " pass, " + std::to_string(s.fail) + " fail, " +
         std::to_string(s.expected_fail) + " expected-fail (" + timing + ")\n";
  return out;
}

}  // namespace qcl
