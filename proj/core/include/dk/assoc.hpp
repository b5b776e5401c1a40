#pragma once

#include <string>
#include <vector>

#include "dk/families.hpp"
#include "dk/hopf.hpp"
#include "dk/quotient.hpp"

namespace dk {

// Which reading of the eight-term cyclotomic relation's permuted slot lists to
// use: Literal follows the printed negated-index list (slot a receives the
// label (-a) mod N), Shifted the cyclic alternative (slot a receives
// (a+1) mod N). They agree at N = 2.
enum class OctagonReading { Literal, Shifted };

struct CheckOptions {
  long long monomial_cap = kDefaultMonomialCap;
  std::string cache_dir;
  OctagonReading octagon = OctagonReading::Literal;
};

// Candidate associator data. phi lives over free(x,y); psi (cyclotomic) over
// free(u,w0..w{N-1}) where u is the 0i-slot and wa the a-labeled 12-slot;
// aplus/aminus (elliptic) over free(a,b). All blocks share one truncation
// order.
struct Candidate {
  enum class Kind { Drinfeld, Cyclotomic, Elliptic };

  Kind kind = Kind::Drinfeld;
  int N = 1;
  Rat lambda;
  Series phi;
  Series psi;
  Series aplus, aminus;

  int maxdeg() const { return phi.maxdeg(); }
};

AlphabetPtr phi_alphabet();
AlphabetPtr psi_alphabet(int N);
AlphabetPtr ab_alphabet();

Candidate trivial_drinfeld(int maxdeg);
Candidate trivial_cyclotomic(int N, int maxdeg);
Candidate trivial_elliptic(int maxdeg);

struct EquationResult {
  std::string name;
  bool pass = false;
  int degree = 0;          // first failing degree, or the checked depth on pass
  int residual_terms = 0;  // support of the first failing homogeneous residual
};

struct CheckReport {
  std::vector<EquationResult> results;
  std::vector<std::string> notes;  // appended verbatim after the result lines
  bool pass() const;
  std::string str() const;  // one line per equation, report format
};

// Pentagon/hexagon/duality/unit/group-likeness of (lambda, phi).
CheckReport check_drinfeld(const Candidate& c, const CheckOptions& opt = {});
// Mixed pentagon and the eight-term relation for (lambda, phi, psi); includes
// the underlying genus-zero checks (phi_* lines).
CheckReport check_cyclotomic(const Candidate& c, const CheckOptions& opt = {});
// The two signed three-term products and the commutator identity for
// (lambda, phi, aplus, aminus); includes the genus-zero checks.
CheckReport check_elliptic(const Candidate& c, const CheckOptions& opt = {});

struct SolveReport {
  Candidate candidate;
  // One note per degree with free parameters: which basis coordinates were
  // left free and set to zero.
  std::vector<std::string> notes;
};

// Degree-by-degree construction of an associator with the given coupling:
// at each degree the pentagon, hexagon, and duality residuals are affine in
// the unknown Lie component, and the exact linear system is solved with free
// coordinates pinned to zero. Throws if some degree is inconsistent.
SolveReport solve_drinfeld(const Rat& lambda, int maxdeg, const CheckOptions& opt = {});

// Power x^(13,2,5)-style evaluation helper: phi as a series in the first two
// strand generators of t(3), reduced.
Series phi_in_t3(const Series& phi, const CheckOptions& opt = {});

}  // namespace dk
