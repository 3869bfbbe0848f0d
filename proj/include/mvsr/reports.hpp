#pragma once

#include <cstdint>
#include <optional>

#include "mvsr/gamma.hpp"
#include "mvsr/grothendieck.hpp"
#include "mvsr/json_io.hpp"
#include "mvsr/report.hpp"
#include "mvsr/tensor.hpp"

namespace mvsr {

Json axiom_report_json(const AxiomReport& r);

/// Law check of any algebra kind; `valid` is false on a law violation.
struct VerifyOutcome {
  Json report;
  bool valid = true;
};
VerifyOutcome verify_report(const Algebra& a);

/// Discloses the n_max truncation and the comparison with n_max - 1.
Json k0_report(const K0Result& r);

/// Retract oracle and matrix criterion side by side; `agree` in the
/// witnesses object records whether they coincide.
Json projective_report(const FiniteSemimodule& m, std::optional<std::size_t> bound = {});

Json tensor_report(const TensorProduct& t, const UniversalProperty& up);

Json gamma_report(const GammaReport& r);

/// Homs sorted lexicographically by image tuple.
Json homset_report(const FiniteSemimodule& m, const FiniteSemimodule& n,
                   const HomSemilattice& hs);

/// Idempotent n x n matrices in row-major lexicographic order.
Json idempotents_report(const SemiringPtr& s, std::size_t n);

}  // namespace mvsr
