#include "ldend/report.hpp"

#include <algorithm>

namespace ldend {

void CheckReport::merge(const CheckReport& other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  std::stable_sort(failures.begin(), failures.end(),
                   [](const Failure& a, const Failure& b) { return a.indices < b.indices; });
  evaluated += other.evaluated;
}

}  // namespace ldend
