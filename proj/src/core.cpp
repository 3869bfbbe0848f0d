#include <atomic>
#include <map>
#include <sstream>
#include <utility>

#include "mvsr/error.hpp"
#include "mvsr/limits.hpp"
#include "mvsr/rational.hpp"
#include "mvsr/report.hpp"
#include "mvsr/rng.hpp"
#include "mvsr/table.hpp"

namespace mvsr {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NegationOfTop: return "NegationOfTop";
    case ErrorKind::ChainTooShort: return "ChainTooShort";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::EnumGuard: return "EnumGuard";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::TooManyVariables: return "TooManyVariables";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::NotFreeBasis: return "NotFreeBasis";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ScalarMismatch: return "ScalarMismatch";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::IllDefinedAction: return "IllDefinedAction";
    case ErrorKind::NotOnto: return "NotOnto";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

// ---------------------------------------------------------------------------
// limits

namespace {
std::atomic<std::uint64_t> g_max_carrier{Limits{}.max_carrier};
std::atomic<std::uint64_t> g_max_enum{Limits{}.max_enum};
thread_local Limits g_snapshot;
}  // namespace

const Limits& limits() noexcept {
  g_snapshot.max_carrier = g_max_carrier.load(std::memory_order_relaxed);
  g_snapshot.max_enum = g_max_enum.load(std::memory_order_relaxed);
  return g_snapshot;
}

void set_limits(const Limits& l) noexcept {
  g_max_carrier.store(l.max_carrier, std::memory_order_relaxed);
  g_max_enum.store(l.max_enum, std::memory_order_relaxed);
}

ScopedLimits::ScopedLimits(const Limits& l) noexcept : saved_(limits()) {
  set_limits(l);
}

ScopedLimits::~ScopedLimits() { set_limits(saved_); }

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t cap) noexcept {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > cap / base) return cap + 1;
    acc *= base;
    if (acc > cap) return cap + 1;
  }
  return acc;
}

void guard_carrier(std::uint64_t n, std::string_view what) {
  const auto bound = limits().max_carrier;
  if (n > bound) {
    std::ostringstream os;
    os << what << " needs " << n << " elements, max_carrier is " << bound;
    fail(ErrorKind::SizeGuard, os.str());
  }
}

void guard_enum(std::uint64_t n, std::string_view what) {
  const auto bound = limits().max_enum;
  if (n > bound) {
    std::ostringstream os;
    os << what << " needs " << n << " candidates, max_enum is " << bound;
    fail(ErrorKind::EnumGuard, os.str());
  }
}

// ---------------------------------------------------------------------------
// tables

Table::Table(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Table::Table(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    fail(ErrorKind::MalformedTable, "table data does not match its shape");
}

Table Table::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Elem> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c)
      fail(ErrorKind::MalformedTable, "ragged table rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Table(r, c, std::move(data));
}

std::vector<std::vector<Elem>> Table::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  return out;
}

bool Table::entries_below(std::size_t bound) const noexcept {
  for (Elem e : data_)
    if (e >= bound) return false;
  return true;
}

void require_table(const Table& t, std::size_t rows, std::size_t cols,
                   std::size_t bound, const std::string& what) {
  if (t.rows() != rows || t.cols() != cols) {
    std::ostringstream os;
    os << what << " has shape " << t.rows() << "x" << t.cols() << ", expected "
       << rows << "x" << cols;
    fail(ErrorKind::MalformedTable, os.str());
  }
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (t(r, c) >= bound) {
        std::ostringstream os;
        os << what << " entry (" << r << "," << c << ") = " << t(r, c)
           << " is not below " << bound;
        fail(ErrorKind::MalformedTable, os.str());
      }
}

Partition canonical_partition(std::span<const Elem> class_of) {
  std::map<Elem, Elem> renumber;
  Partition out;
  out.reserve(class_of.size());
  for (Elem c : class_of) {
    auto [it, inserted] =
        renumber.try_emplace(c, static_cast<Elem>(renumber.size()));
    out.push_back(it->second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// reports

bool AxiomReport::valid() const noexcept {
  for (const auto& l : laws)
    if (!l.passed) return false;
  return true;
}

const LawOutcome* AxiomReport::find(const std::string& law) const noexcept {
  for (const auto& l : laws)
    if (l.law == law) return &l;
  return nullptr;
}

void AxiomReport::add(std::string law, bool passed, std::vector<Elem> witness) {
  laws.push_back({std::move(law), passed, std::move(witness)});
}

void AxiomReport::merge(const AxiomReport& other, const std::string& prefix) {
  for (const auto& l : other.laws)
    laws.push_back({prefix + l.law, l.passed, l.witness});
}

// ---------------------------------------------------------------------------
// rationals

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> BigInt {
    if (s.empty()) fail(ErrorKind::ParseError, "empty integer in '" + text + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
      fail(ErrorKind::ParseError, "bad integer in '" + text + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9')
        fail(ErrorKind::ParseError, "bad integer in '" + text + "'");
    BigInt v(s.substr(i));
    return s[0] == '-' ? BigInt(-v) : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

// ---------------------------------------------------------------------------
// rng

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<std::int64_t>(draw % span);
}

bool SeededRng::one_in(std::uint64_t n) {
  return uniform(0, static_cast<std::int64_t>(n) - 1) == 0;
}

}  // namespace mvsr
