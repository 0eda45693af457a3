#include "paracolor/grading.hpp"

#include <sstream>

#include "paracolor/errors.hpp"

namespace paracolor {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::LeibnizViolation: return "LeibnizViolation";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InhomogeneousMatrix: return "InhomogeneousMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::GradeMismatch: return "GradeMismatch";
    case ErrorKind::NonLinearEnergy: return "NonLinearEnergy";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::UnknownPair: return "UnknownPair";
    case ErrorKind::LevelNotFound: return "LevelNotFound";
    case ErrorKind::DegenerateLevel: return "DegenerateLevel";
    case ErrorKind::NoSignDifference: return "NoSignDifference";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotProjector: return "NotProjector";
    case ErrorKind::NotEigenstate: return "NotEigenstate";
    case ErrorKind::SupportError: return "SupportError";
    case ErrorKind::PatternViolation: return "PatternViolation";
    case ErrorKind::CollisionAtLambda: return "CollisionAtLambda";
    case ErrorKind::TrialsOutOfRange: return "TrialsOutOfRange";
    case ErrorKind::Internal: return "Internal";
  }
  return "Error";
}

const char* statistics_class_name(StatisticsClass c) {
  return c == StatisticsClass::ColorLieAlgebra ? "ColorLieAlgebra"
                                               : "ColorLieSuperalgebra";
}

GradeWord GradeWord::parse(std::string_view text) {
  ensure(!text.empty() && text.size() <= 16, ErrorKind::ParseError,
         "grade word must have 1..16 letters");
  GradeWord w{static_cast<uint32_t>(text.size()), 0};
  for (size_t k = 0; k < text.size(); ++k) {
    ensure(text[k] == '0' || text[k] == '1', ErrorKind::ParseError,
           "grade word letters must be 0 or 1");
    if (text[k] == '1') w.bits |= 1u << k;
  }
  return w;
}

GradeWord GradeWord::operator+(GradeWord other) const {
  ensure(n == other.n, ErrorKind::ArityMismatch,
         "grade words of arity " + std::to_string(n) + " and " +
             std::to_string(other.n));
  return {n, bits ^ other.bits};
}

std::string GradeWord::str() const {
  std::string s(n, '0');
  for (uint32_t k = 0; k < n; ++k)
    if (bits & (1u << k)) s[k] = '1';
  return s;
}

BilinearForm BilinearForm::make(uint32_t arity,
                                const std::vector<uint8_t>& table) {
  ensure(arity >= 1 && arity <= 16, ErrorKind::ArityMismatch,
         "arity must be 1..16");
  const size_t m = size_t{1} << arity;
  ensure(table.size() == m * m, ErrorKind::ArityMismatch,
         "table must have " + std::to_string(m * m) + " entries");
  for (uint8_t bit : table)
    ensure(bit <= 1, ErrorKind::ParseError, "table entries must be 0 or 1");
  auto at = [&](size_t a, size_t b) { return table[a * m + b]; };
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b)
      ensure(at(a, b) == at(b, a), ErrorKind::NotSymmetric,
             "sectors " + GradeWord{arity, static_cast<uint32_t>(a)}.str() +
                 ", " + GradeWord{arity, static_cast<uint32_t>(b)}.str());
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      for (size_t c = 0; c < m; ++c)
        ensure(at(a, b ^ c) == (at(a, b) ^ at(a, c)),
               ErrorKind::LeibnizViolation,
               "sectors " + GradeWord{arity, static_cast<uint32_t>(a)}.str() +
                   ", " + GradeWord{arity, static_cast<uint32_t>(b)}.str() +
                   ", " + GradeWord{arity, static_cast<uint32_t>(c)}.str());
  for (size_t a = 0; a < m; ++a)
    ensure(at(0, a) == 0, ErrorKind::LeibnizViolation,
           "zero sector must pair trivially");
  return BilinearForm(arity, table);
}

namespace {

// Sector order 00, 10, 01, 11.
constexpr uint8_t kLA[16] = {0, 0, 0, 0,   //
                             0, 0, 0, 0,   //
                             0, 0, 0, 0,   //
                             0, 0, 0, 0};
constexpr uint8_t kLS[16] = {0, 0, 0, 0,   //
                             0, 1, 1, 0,   //
                             0, 1, 1, 0,   //
                             0, 0, 0, 0};
constexpr uint8_t kCLA[16] = {0, 0, 0, 0,  //
                              0, 0, 1, 1,  //
                              0, 1, 0, 1,  //
                              0, 1, 1, 0};
constexpr uint8_t kCLS[16] = {0, 0, 0, 0,  //
                              0, 1, 0, 1,  //
                              0, 0, 1, 1,  //
                              0, 1, 1, 0};

}  // namespace

BilinearForm BilinearForm::preset(std::string_view name) {
  const uint8_t* raw = nullptr;
  if (name == "LA") raw = kLA;
  else if (name == "LS") raw = kLS;
  else if (name == "CLA") raw = kCLA;
  else if (name == "CLS") raw = kCLS;
  ensure(raw != nullptr, ErrorKind::UnknownPreset,
         "no preset named '" + std::string(name) + "'");
  return make(2, std::vector<uint8_t>(raw, raw + 16));
}

const std::vector<std::string>& BilinearForm::preset_names() {
  static const std::vector<std::string> names = {"LA", "LS", "CLA", "CLS"};
  return names;
}

int BilinearForm::value(GradeWord a, GradeWord b) const {
  ensure(a.n == n_ && b.n == n_, ErrorKind::ArityMismatch,
         "grade word arity does not match form arity");
  const size_t m = size_t{1} << n_;
  return table_[a.index() * m + b.index()];
}

int BilinearForm::koszul(GradeWord a, GradeWord b) const {
  return value(a, b) ? -1 : 1;
}

StatisticsClass BilinearForm::classify() const {
  const size_t m = size_t{1} << n_;
  for (size_t a = 0; a < m; ++a)
    if (table_[a * m + a]) return StatisticsClass::ColorLieSuperalgebra;
  return StatisticsClass::ColorLieAlgebra;
}

std::string BilinearForm::serialize() const {
  std::ostringstream out;
  out << "n=" << n_ << '\n';
  const size_t m = size_t{1} << n_;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      out << GradeWord{n_, static_cast<uint32_t>(a)}.str() << ' '
          << GradeWord{n_, static_cast<uint32_t>(b)}.str() << ' '
          << int(table_[a * m + b]) << '\n';
  return out.str();
}

BilinearForm BilinearForm::deserialize(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  ensure(static_cast<bool>(std::getline(in, header)) &&
             header.rfind("n=", 0) == 0,
         ErrorKind::ParseError, "expected 'n=<arity>' header");
  int arity = 0;
  try {
    arity = std::stoi(header.substr(2));
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad arity '" + header + "'");
  }
  ensure(arity >= 1 && arity <= 16, ErrorKind::ParseError,
         "arity out of range");
  const size_t m = size_t{1} << arity;
  std::vector<uint8_t> table(m * m, 0);
  std::vector<uint8_t> seen(m * m, 0);
  std::string wa, wb;
  int bit = 0;
  while (in >> wa >> wb >> bit) {
    const GradeWord a = GradeWord::parse(wa);
    const GradeWord b = GradeWord::parse(wb);
    ensure(a.n == static_cast<uint32_t>(arity) && b.n == a.n,
           ErrorKind::ParseError, "grade word arity mismatch in table");
    ensure(bit == 0 || bit == 1, ErrorKind::ParseError,
           "table entries must be 0 or 1");
    table[a.index() * m + b.index()] = static_cast<uint8_t>(bit);
    seen[a.index() * m + b.index()] = 1;
  }
  for (uint8_t s : seen)
    ensure(s == 1, ErrorKind::ParseError, "incomplete form table");
  return make(static_cast<uint32_t>(arity), table);
}

}  // namespace paracolor
