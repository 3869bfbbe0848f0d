#pragma once

#include <string>
#include <vector>

#include "mvsr/table.hpp"

namespace mvsr {

struct LawOutcome {
  std::string law;
  bool passed = true;
  /// Elements of the first counterexample found in canonical order.
  std::vector<Elem> witness;
};

/// Named law verdicts of an exhaustive check.
struct AxiomReport {
  std::vector<LawOutcome> laws;

  [[nodiscard]] bool valid() const noexcept;
  [[nodiscard]] const LawOutcome* find(const std::string& law) const noexcept;
  void add(std::string law, bool passed, std::vector<Elem> witness = {});
  /// Appends the outcomes of another report, prefixing their names.
  void merge(const AxiomReport& other, const std::string& prefix = {});
};

}  // namespace mvsr
