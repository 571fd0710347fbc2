#pragma once

#include <string>
#include <vector>

namespace activol {

// A signed Pauli string such as "XZY" or "-ZIZ". Qubit 0 is the leftmost
// character.
struct PauliOp {
  std::string ops;  // over {I, X, Y, Z}
  int sign = 1;     // +1 or -1

  static PauliOp parse(const std::string &text);
  static PauliOp identity(size_t n) { return {std::string(n, 'I'), 1}; }

  size_t size() const { return ops.size(); }
  size_t weight() const;
  bool is_identity() const { return weight() == 0; }
  size_t count(char p) const;
  std::string str() const { return (sign < 0 ? "-" : "") + ops; }
};

}  // namespace activol
