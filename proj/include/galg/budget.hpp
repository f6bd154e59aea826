#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

namespace galg {

/// Limits honoured by every Groebner computation on the current thread.
struct Budget {
  double max_seconds = 0;          // 0 = unlimited
  std::size_t max_basis_size = 0;  // 0 = unlimited
};

/// Installs a budget for the lifetime of the scope; nested scopes replace the outer one.
class BudgetScope {
 public:
  explicit BudgetScope(Budget b);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  struct State;
  std::optional<Budget> saved_budget_;
  std::chrono::steady_clock::time_point saved_start_;
};

/// Throws ResourceLimit when the active deadline has passed.
void check_deadline();
/// Throws ResourceLimit when `size` exceeds the active basis-size cap.
void check_basis_size(std::size_t size);

/// When active, every basis produced by the engine is re-verified by the
/// independent S-polynomial checker; failures throw InternalError.
class AuditScope {
 public:
  AuditScope();
  ~AuditScope();
  AuditScope(const AuditScope&) = delete;
  AuditScope& operator=(const AuditScope&) = delete;

  static bool active();
  static std::size_t bases_checked();
  static std::size_t spairs_checked();
  static void record(std::size_t spairs);

 private:
  bool saved_;
};

}  // namespace galg
