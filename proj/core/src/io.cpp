#include "permlab/io.hpp"

#include <stdexcept>

namespace permlab {

std::string phase_stats_json(const PhaseStats& stats) {
  std::string out = "{\"M\":" + std::to_string(stats.max_steps) +
                    ",\"L\":" + std::to_string(stats.length) +
                    ",\"B\":" + std::to_string(stats.blocks) + ",\"suffix\":{";
  bool first = true;
  for (const auto& [offset, value] : stats.suffix) {
    if (!first) out += ',';
    first = false;
    out += "\"" + std::to_string(offset) + "\":" + std::to_string(value);
  }
  return out + "}}";
}

std::string decimal_string(const mpq_class& value, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be >= 0");
  const bool negative = sgn(value) < 0;
  mpz_class num = abs(value.get_num());
  const mpz_class& den = value.get_den();

  mpz_class pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;

  // Round half away from zero: floor((|num| * 10^d * 2 + den) / (2 den)).
  mpz_class scaled = (num * pow10 * 2 + den) / (2 * den);

  mpz_class whole = scaled / pow10;
  mpz_class frac = scaled % pow10;

  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(static_cast<size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

std::string rational_string(const mpq_class& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

}  // namespace permlab
