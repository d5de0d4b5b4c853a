#pragma once

// The acceptance criteria as data, shared by the acceptance runner and the
// CLI's regress-all.

#include <functional>
#include <string>
#include <vector>

namespace confdesign::acceptance {

struct Item {
  std::string name;
  bool ok = false;
  std::string got, expected;
};

struct Outcome {
  int id = 0;
  std::string title;
  std::vector<Item> items;
  std::string error;  // exception text, if any
  double seconds = 0;

  bool pass() const;
  /// "label: got X, expected Y" lines for failing items.
  std::string diff() const;
};

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<Item>(unsigned threads)> run;
};

const std::vector<Criterion>& criteria();
Outcome run(const Criterion& c, unsigned threads);

}  // namespace confdesign::acceptance
