#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mvsr {

/// Carrier elements are dense indices 0..size-1.
using Elem = std::uint32_t;

/// Row-major rectangular table of element indices.
class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols);
  Table(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  /// Builds a table from nested rows; rows must have equal length.
  static Table from_rows(const std::vector<std::vector<Elem>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] Elem operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  Elem& operator()(std::size_t r, std::size_t c) noexcept {
    return data_[r * cols_ + c];
  }
  [[nodiscard]] std::span<const Elem> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] const std::vector<Elem>& data() const noexcept { return data_; }
  [[nodiscard]] std::vector<std::vector<Elem>> to_rows() const;

  /// True iff every entry is < bound.
  [[nodiscard]] bool entries_below(std::size_t bound) const noexcept;

  bool operator==(const Table&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Validates a rows x cols table with entries < bound; throws MalformedTable.
void require_table(const Table& t, std::size_t rows, std::size_t cols,
                   std::size_t bound, const std::string& what);

/// Set partition given as a class id per element, classes numbered in order of
/// first appearance.
using Partition = std::vector<Elem>;

/// Renumbers class ids in order of first appearance.
Partition canonical_partition(std::span<const Elem> class_of);

}  // namespace mvsr
