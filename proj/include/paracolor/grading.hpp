#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace paracolor {

// Element of (Z_2)^n written as a bit word. Letter k of the printed word
// is bit k, so for n=2 the sector order 00, 10, 01, 11 is index order.
struct GradeWord {
  uint32_t n = 0;
  uint32_t bits = 0;

  static GradeWord zero(uint32_t arity) { return {arity, 0}; }
  static GradeWord parse(std::string_view text);

  GradeWord operator+(GradeWord other) const;
  bool operator==(const GradeWord& o) const {
    return n == o.n && bits == o.bits;
  }
  bool operator!=(const GradeWord& o) const { return !(*this == o); }
  bool operator<(const GradeWord& o) const {
    return n != o.n ? n < o.n : bits < o.bits;
  }

  bool is_zero() const { return bits == 0; }
  size_t index() const { return bits; }
  std::string str() const;
};

enum class StatisticsClass { ColorLieAlgebra, ColorLieSuperalgebra };

const char* statistics_class_name(StatisticsClass c);

// Symmetric Z_2-valued pairing on (Z_2)^n that is additive in each slot.
// The additivity makes the pairing a bilinear form on the group, so it is
// determined by its values on the letter generators.
class BilinearForm {
 public:
  // table is row-major over sector index order, size 4^n. Validates
  // symmetry, additivity in the second slot, and a zero first row.
  static BilinearForm make(uint32_t arity, const std::vector<uint8_t>& table);
  // Presets over n=2: "LA", "LS", "CLA", "CLS".
  static BilinearForm preset(std::string_view name);
  static const std::vector<std::string>& preset_names();

  uint32_t arity() const { return n_; }
  int value(GradeWord a, GradeWord b) const;
  // (-1)^{<a,b>}
  int koszul(GradeWord a, GradeWord b) const;
  // Superalgebra when some sector pairs oddly with itself.
  StatisticsClass classify() const;

  std::string serialize() const;
  static BilinearForm deserialize(std::string_view text);

  bool operator==(const BilinearForm& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }

 private:
  BilinearForm(uint32_t arity, std::vector<uint8_t> table)
      : n_(arity), table_(std::move(table)) {}
  uint32_t n_ = 0;
  std::vector<uint8_t> table_;
};

}  // namespace paracolor
