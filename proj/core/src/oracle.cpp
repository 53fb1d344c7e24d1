#include "bern/oracle.hpp"

#include <gmpxx.h>

#include <mutex>
#include <string>

#include "bern/error.hpp"

namespace bern {
namespace {

void check_ceiling(std::uint64_t n) {
  if (n > kOracleCeiling) {
    throw OracleLimitError("recurrence oracle is limited to n <= " + std::to_string(kOracleCeiling) +
                           " (requested " + std::to_string(n) +
                           "); use the zeta engine for larger indices");
  }
}

// row <- row of C(k+1, .) given the row of C(k, .).
void advance_pascal_row(std::vector<mpz_class>& row) {
  row.push_back(1);
  for (std::size_t j = row.size() - 2; j > 0; --j) row[j] += row[j - 1];
}

}  // namespace

BernoulliTable::BernoulliTable(std::uint64_t max_index) {
  check_ceiling(max_index);
  values_.emplace_back(1);
  extend_to(max_index);
}

void BernoulliTable::extend_to(std::uint64_t max_index) {
  check_ceiling(max_index);
  if (max_index <= this->max_index()) return;

  // Pascal row for m+1, rebuilt from the start; cheap next to the rationals.
  std::vector<mpz_class> row{1};
  for (std::uint64_t k = 0; k < values_.size(); ++k) advance_pascal_row(row);

  for (std::uint64_t m = values_.size(); m <= max_index; ++m) {
    advance_pascal_row(row);  // now C(m+1, .)
    if (m >= 3 && m % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    mpq_class acc = 0;
    for (std::uint64_t j = 0; j < m; ++j) {
      if (j >= 3 && j % 2 == 1) continue;
      acc += mpq_class(row[j]) * values_[j].value();
    }
    acc /= mpq_class(row[m]);  // C(m+1, m) = m+1
    values_.emplace_back(mpq_class(-acc));
  }
}

bool BernoulliTable::self_check() const {
  std::vector<mpz_class> row{1};
  advance_pascal_row(row);  // C(1, .)
  for (std::uint64_t m = 0; m <= max_index(); ++m) {
    if (m > 0) advance_pascal_row(row);
    mpq_class sum = 0;
    for (std::uint64_t j = 0; j <= m; ++j) sum += mpq_class(row[j]) * values_[j].value();
    if (m > 0 && sum != 0) return false;
    if (m == 0 && sum != 1) return false;  // C(1,0) B_0 = 1; the recurrence starts at m = 1
  }
  return true;
}

ExactRational bernoulli_recurrence(std::uint64_t n) {
  check_ceiling(n);
  static std::mutex mutex;
  static BernoulliTable table(1);
  std::lock_guard lock(mutex);
  table.extend_to(n);
  return table[n];
}

}  // namespace bern
