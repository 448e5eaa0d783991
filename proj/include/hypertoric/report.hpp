#pragma once

#include <string>
#include <vector>

namespace htx {

/** Outcome of a verification pass: a title, a verdict, and detail lines.
 *  Failures never throw; they accumulate so a whole suite can be reported. */
struct Report {
  std::string title;
  bool ok = true;
  std::vector<std::string> lines;

  explicit Report(std::string t = "") : title(std::move(t)) {}

  void note(const std::string& msg) { lines.push_back("  " + msg); }
  void fail(const std::string& msg) {
    ok = false;
    lines.push_back("FAIL " + msg);
  }
  void check(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
  void merge(const Report& r) {
    ok = ok && r.ok;
    for (auto& l : r.lines) lines.push_back(l);
  }
};

}  // namespace htx
