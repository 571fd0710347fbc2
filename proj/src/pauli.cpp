#include "activol/pauli.hpp"

#include <algorithm>
#include <stdexcept>

namespace activol {

PauliOp PauliOp::parse(const std::string &text) {
  PauliOp p;
  size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    p.sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '_') c = 'I';
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw std::invalid_argument("bad Pauli character '" + std::string(1, text[i]) + "' in " + text);
    }
    p.ops.push_back(c);
  }
  if (p.ops.empty()) throw std::invalid_argument("empty Pauli string");
  return p;
}

size_t PauliOp::weight() const {
  return ops.size() - count('I');
}

size_t PauliOp::count(char c) const {
  return static_cast<size_t>(std::count(ops.begin(), ops.end(), c));
}

}  // namespace activol
