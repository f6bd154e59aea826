#include "galg/budget.hpp"

#include <string>

#include "galg/errors.hpp"

namespace galg {

namespace {

thread_local std::optional<Budget> current_budget;
thread_local std::chrono::steady_clock::time_point current_start;
thread_local bool audit_active = false;
thread_local std::size_t audit_bases = 0;
thread_local std::size_t audit_spairs = 0;

}  // namespace

BudgetScope::BudgetScope(Budget b) : saved_budget_(current_budget), saved_start_(current_start) {
  current_budget = b;
  current_start = std::chrono::steady_clock::now();
}

BudgetScope::~BudgetScope() {
  current_budget = saved_budget_;
  current_start = saved_start_;
}

void check_deadline() {
  if (!current_budget || current_budget->max_seconds <= 0) return;
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - current_start;
  if (elapsed.count() > current_budget->max_seconds)
    throw ResourceLimit("time limit of " + std::to_string(current_budget->max_seconds) + " s exceeded");
}

void check_basis_size(std::size_t size) {
  if (!current_budget || current_budget->max_basis_size == 0) return;
  if (size > current_budget->max_basis_size)
    throw ResourceLimit("Groebner basis exceeded " + std::to_string(current_budget->max_basis_size) + " elements");
}

AuditScope::AuditScope() : saved_(audit_active) { audit_active = true; }
AuditScope::~AuditScope() { audit_active = saved_; }
bool AuditScope::active() { return audit_active; }
std::size_t AuditScope::bases_checked() { return audit_bases; }
std::size_t AuditScope::spairs_checked() { return audit_spairs; }
void AuditScope::record(std::size_t spairs) {
  ++audit_bases;
  audit_spairs += spairs;
}

}  // namespace galg
