#include "ontoprob/basis.hpp"

#include <stdexcept>

namespace ontoprob {

std::size_t tfu_with_digit(std::size_t cell, int n, PropositionId prop, Tfu value) {
  std::size_t place = 1;
  for (int i = n - 1; i > prop; --i) place *= 3;
  Tfu old = tfu_digit(cell, n, prop);
  return cell + (static_cast<std::size_t>(value) - static_cast<std::size_t>(old)) * place;
}

std::string classical_label(std::uint32_t cell, int n) {
  std::string s(n, 'T');
  for (int k = 0; k < n; ++k) s[k] = classical_truth(cell, n, k) ? 'T' : 'F';
  return s;
}

std::string tfu_label(std::size_t cell, int n) {
  std::string s(n, 'T');
  for (int k = 0; k < n; ++k) s[k] = tfu_char(tfu_digit(cell, n, k));
  return s;
}

std::uint32_t classical_cell(const std::string& label, int n) {
  if (static_cast<int>(label.size()) != n)
    throw std::invalid_argument("outcome label '" + label + "' does not have length " + std::to_string(n));
  std::uint32_t cell = 0;
  for (char c : label) {
    std::uint32_t digit;
    if (c == 'T') digit = 0;
    else if (c == 'F') digit = 1;
    else throw std::invalid_argument("outcome label '" + label + "' has a character other than T/F");
    cell = cell * 2 + digit;
  }
  return cell;
}

std::size_t tfu_cell(const std::string& label, int n) {
  if (static_cast<int>(label.size()) != n)
    throw std::invalid_argument("outcome label '" + label + "' does not have length " + std::to_string(n));
  std::size_t cell = 0;
  for (char c : label) {
    std::size_t digit;
    if (c == 'T') digit = 0;
    else if (c == 'F') digit = 1;
    else if (c == 'U') digit = 2;
    else throw std::invalid_argument("outcome label '" + label + "' has a character other than T/F/U");
    cell = cell * 3 + digit;
  }
  return cell;
}

}  // namespace ontoprob
