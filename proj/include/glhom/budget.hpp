#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace glhom {

// Chain spaces grow like dim^(n+1); every complex constructor checks the
// requested space dimension against a budget and aborts with the offending
// degree instead of exhausting memory.
class SizeBudgetExceeded : public std::runtime_error {
 public:
  SizeBudgetExceeded(int degree, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("size budget exceeded in degree " +
                           std::to_string(degree) + ": needs " +
                           std::to_string(required) + " > budget " +
                           std::to_string(budget)),
        degree_(degree),
        required_(required),
        budget_(budget) {}

  int degree() const { return degree_; }
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  int degree_;
  std::uint64_t required_;
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultSizeBudget = 2'000'000;
inline constexpr int kDefaultDegreeCap = 3;

inline void check_budget(int degree, std::uint64_t required,
                         std::uint64_t budget) {
  if (required > budget) throw SizeBudgetExceeded(degree, required, budget);
}

}  // namespace glhom
