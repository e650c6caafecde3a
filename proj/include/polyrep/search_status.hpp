#pragma once

namespace polyrep {

// Shared verdict for budgeted exhaustive searches. Exhausted is a proof
// of nonexistence; BudgetExceeded is not.
enum class SearchStatus { Found, Exhausted, BudgetExceeded };

}  // namespace polyrep
