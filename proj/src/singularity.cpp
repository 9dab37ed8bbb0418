#include "pqv/singularity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pqv/errors.hpp"

namespace pqv {

CyclicSingularityType::CyclicSingularityType(int m, std::vector<int> weights) : m_(m), weights_(std::move(weights)) {
  if (m_ < 2) throw UsageError("singularity order must be at least 2");
  if (weights_.size() < 2) throw UsageError("singularity dimension must be at least 2");
  for (int a : weights_) {
    if (a < 1 || a >= m_) throw UsageError("singularity weight " + std::to_string(a) + " outside [1, m)");
    if (std::gcd(a, m_) != 1)
      throw UsageError("singularity weight " + std::to_string(a) + " not coprime to " + std::to_string(m_));
  }
}

std::string CyclicSingularityType::str() const {
  std::string s = "1/" + std::to_string(m_) + "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(weights_[i]);
  }
  return s + ")";
}

std::string to_string(ReidTaiClass c) {
  switch (c) {
    case ReidTaiClass::terminal:
      return "terminal";
    case ReidTaiClass::canonical_not_terminal:
      return "canonical";
    case ReidTaiClass::noncanonical:
      return "noncanonical";
  }
  return "?";
}

Rational age(const CyclicSingularityType& sing, int j) {
  const int m = sing.order();
  if (j < 1 || j >= m) throw UsageError("age: group element index " + std::to_string(j) + " outside [1, m)");
  std::int64_t s = 0;
  for (int a : sing.weights()) s += (static_cast<std::int64_t>(j) * a) % m;
  return make_rational(s, m);
}

ReidTaiClass reid_tai_class(const CyclicSingularityType& sing) {
  Rational least = age(sing, 1);
  for (int j = 2; j < sing.order(); ++j) least = std::min(least, age(sing, j));
  if (least < 1) return ReidTaiClass::noncanonical;
  if (least == 1) return ReidTaiClass::canonical_not_terminal;
  return ReidTaiClass::terminal;
}

CyclicSingularityType canonical_form(const CyclicSingularityType& sing) {
  const int m = sing.order();
  std::vector<int> best;
  for (int u = 1; u < m; ++u) {
    if (std::gcd(u, m) != 1) continue;
    std::vector<int> w;
    w.reserve(sing.dimension());
    for (int a : sing.weights()) w.push_back(static_cast<int>((static_cast<std::int64_t>(u) * a) % m));
    std::sort(w.begin(), w.end());
    if (best.empty() || w < best) best = std::move(w);
  }
  return CyclicSingularityType(m, std::move(best));
}

CyclicSingularityType parse_singularity(const std::string& text) {
  std::vector<int> nums;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      nums.push_back(std::stoi(item, &used));
      if (used != item.size()) throw UsageError("");
    } catch (const std::exception&) {
      throw UsageError("malformed singularity '" + text + "': expected m,a1,...,an");
    }
  }
  if (nums.size() < 3) throw UsageError("malformed singularity '" + text + "': expected m,a1,...,an");
  return CyclicSingularityType(nums.front(), std::vector<int>(nums.begin() + 1, nums.end()));
}

}  // namespace pqv
