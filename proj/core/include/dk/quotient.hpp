#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dk/series.hpp"

namespace dk {

// Two-sided homogeneous presentation: the quotient of the free algebra by the
// ideal generated by the relations. Every relation must be homogeneous of
// positive weight so the ideal is graded and each degree is a finite
// linear-algebra problem.
struct Presentation {
  AlphabetPtr alph;
  std::vector<Series> relations;
  // Stable identity used for caching and compatibility checks; equal keys must
  // mean equal presentations.
  std::string key;
};

// Default refusal threshold for the total number of basis words.
inline constexpr long long kDefaultMonomialCap = 10'000'000;

// Per-degree elimination tables for one presentation, built through maxdeg.
// Reduction returns canonical representatives, so equality mod the ideal is
// equality of reduced forms.
class QuotientTable {
 public:
  QuotientTable(Presentation pres, int maxdeg,
                long long monomial_cap = kDefaultMonomialCap,
                const std::string& cache_dir = "");

  const Presentation& presentation() const { return pres_; }
  const AlphabetPtr& alphabet() const { return pres_.alph; }
  int maxdeg() const { return maxdeg_; }

  // Dimension of the degree-d component of the quotient.
  long long dim(int d) const;
  // Rank of the degree-d component of the ideal.
  long long rank(int d) const;

  // Canonical representative of s mod the ideal. s may have any truncation
  // order <= maxdeg(); the result keeps s's order.
  Series reduce(const Series& s) const;
  bool equal_mod(const Series& a, const Series& b) const;

  struct Failure {
    int degree = -1;   // lowest degree where the reduced difference is nonzero
    Series residual;   // that degree's reduced part; zero series when equal
  };
  Failure first_failure(const Series& a, const Series& b) const;

 private:
  struct DegreeTable {
    std::vector<Monomial> monos;            // in monomial order
    std::map<Monomial, int> index;
    // pivot column -> row; rows are sorted by descending column, the first
    // entry is the pivot with coefficient 1, and no later entry's column is a
    // pivot of an earlier-inserted... (entries may hit other pivots; the
    // reducer cascades).
    std::map<int, std::vector<std::pair<int, Rat>>, std::greater<int>> rows;
  };

  void build_degree(int d);
  std::vector<std::pair<int, Rat>> reduce_row(
      const DegreeTable& t, std::map<int, Rat, std::greater<int>>&& work) const;
  bool load_cache(const std::string& path);
  void save_cache(const std::string& path) const;

  Presentation pres_;
  int maxdeg_ = 0;
  std::vector<DegreeTable> tables_;
};

using QuotientPtr = std::shared_ptr<const QuotientTable>;

// Process-level memo: returns a table for the presentation with at least the
// requested maxdeg, building (and optionally file-caching) on miss.
QuotientPtr shared_table(const Presentation& pres, int maxdeg,
                         long long monomial_cap = kDefaultMonomialCap,
                         const std::string& cache_dir = "");

}  // namespace dk
