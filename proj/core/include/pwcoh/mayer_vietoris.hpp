#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwcoh/cohomology.hpp"
#include "pwcoh/piecewise.hpp"
#include "pwcoh/simplicial.hpp"

namespace pwcoh {

// A two-piece cover of a complex together with the four cohomology engines
// the long exact sequence relates: the whole complex, the two pieces, and
// their overlap. Engines cache truncation data, so setups are move-only.
class MVSetup {
 public:
  MVSetup(CoverDecomposition decomposition, LieAlgebra fiber);
  MVSetup(const SimplicialComplex& k0, const SimplicialComplex& k1,
          LieAlgebra fiber);

  MVSetup(const MVSetup&) = delete;
  MVSetup& operator=(const MVSetup&) = delete;
  MVSetup(MVSetup&&) = default;

  const CoverDecomposition& cover() const { return cover_; }
  const LieAlgebra& fiber() const { return fiber_; }

  CohomologyEngine& whole() { return whole_; }
  CohomologyEngine& piece0() { return piece0_; }
  CohomologyEngine& piece1() { return piece1_; }
  CohomologyEngine& overlap() { return overlap_; }

 private:
  CoverDecomposition cover_;
  LieAlgebra fiber_;
  CohomologyEngine whole_;
  CohomologyEngine piece0_;
  CohomologyEngine piece1_;
  CohomologyEngine overlap_;
};

// Restriction of a form on the whole complex to the two pieces.
std::pair<PiecewiseForm, PiecewiseForm> lambda_map(const PiecewiseForm& w,
                                                   const MVSetup& s);

// Difference of the restrictions to the overlap, second piece minus first.
PiecewiseForm mu_map(const PiecewiseForm& xi, const PiecewiseForm& eta,
                     const MVSetup& s);

// Cochain-level right inverse of mu: extend -gamma/2 over the first piece and
// +gamma/2 over the second. mu of the returned pair reproduces gamma exactly.
std::pair<PiecewiseForm, PiecewiseForm> mu_preimage(
    const PiecewiseForm& gamma, const MVSetup& s,
    FacetOrder order = FacetOrder::kAscending);

// Glues forms on the two pieces that agree exactly on the overlap into one
// form on the whole complex. Throws, naming an offending simplex, otherwise.
PiecewiseForm glue(const PiecewiseForm& xi, const PiecewiseForm& eta,
                   const MVSetup& s);

// Connecting map on cochains: for closed gamma on the overlap, glue the
// differentials of a mu-preimage. The result is closed of degree one higher,
// and its class does not depend on the choice of preimage.
PiecewiseForm connecting_hom(const PiecewiseForm& gamma, const MVSetup& s,
                             FacetOrder order = FacetOrder::kAscending);

struct MVOptions {
  int n_start = 1;
  int window = 2;
  int ceiling = 6;
  // Facet sweep order used by the extension-based fallback of the connecting
  // map; the primary path solves for preimages coordinate-wise instead.
  FacetOrder order = FacetOrder::kAscending;
};

// Structural checks of the cochain-level maps at one degree.
struct CochainChecks {
  int degree = 0;
  bool lambda_injective = false;
  bool composite_zero = false;  // mu after lambda vanishes
  bool middle_exact = false;    // rank of lambda equals dim ker mu
  bool lambda_commutes = false;
  bool mu_commutes = false;

  bool ok() const {
    return lambda_injective && composite_zero && middle_exact &&
           lambda_commutes && mu_commutes;
  }
};

// Exactness verdict at one node of the long sequence.
struct NodeVerdict {
  int degree = 0;
  std::string node;
  std::string incoming;
  std::string outgoing;
  int incoming_rank = 0;
  int kernel_dim = 0;  // of the outgoing map
  bool composite_zero = false;
  bool exact = false;
};

// A concrete cohomology class exhibiting a failure of exactness: a kernel
// element of the outgoing map that is not hit by the incoming one (or an
// incoming image that the outgoing map fails to kill).
struct MVWitness {
  std::string node;
  int degree = 0;
  std::vector<PiecewiseForm> forms;  // two entries for the middle node
};

struct LESReport {
  bool verified = false;
  std::string message;
  int truncation = -1;  // common coefficient truncation for all four spaces

  StabilizationReport stab_whole;
  StabilizationReport stab_piece0;
  StabilizationReport stab_piece1;
  StabilizationReport stab_overlap;

  // Betti numbers at the common truncation, padded to a common length.
  std::vector<int> betti_whole;
  std::vector<int> betti_piece0;
  std::vector<int> betti_piece1;
  std::vector<int> betti_overlap;

  std::vector<CochainChecks> cochain;

  // Induced maps per degree p: lambda_star[p] sends classes of the whole
  // complex to the direct sum over the pieces, mu_star[p] sends the sum to
  // the overlap, delta_star[p] sends overlap classes up one degree.
  std::vector<RationalMatrix> lambda_star;
  std::vector<RationalMatrix> mu_star;
  std::vector<RationalMatrix> delta_star;

  std::vector<NodeVerdict> verdicts;
  std::optional<MVWitness> witness;
};

// Stabilizes all four spaces, assembles the induced maps at a common
// truncation, and checks exactness at every node of the sequence. Refuses
// with guidance in the message when stabilization or the connecting map
// cannot be completed within the configured truncation budget.
LESReport verify_les_exactness(MVSetup& s, const MVOptions& options = {});

}  // namespace pwcoh
