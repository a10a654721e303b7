#pragma once

#include "hitchin/multipoly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hitchin {

struct ParseError : std::runtime_error {
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                           ": " + msg),
        line(line_),
        col(col_) {}
  int line, col;
};

// Embedded affine variety: declared variables and generator polynomials.
struct AffineVariety {
  std::vector<std::string> vars;
  std::vector<MultiPoly> generators;
  std::vector<int> zeroGenerators;  // indices of generators that normalised to 0
};

// Grammar: "vars" ident ("," ident)* ";" followed by semicolon-separated
// polynomial expressions over + - * ^ ( ) and integer/rational literals.
AffineVariety parse_system(const std::string& text);

// Order-n jets of an affine variety: variables y_{i,k} (i-major, named
// "<var>_<k>") and equations g_{l,k} = coefficient of t^k in
// f_l(sum_k y_{1,k} t^k, ...) mod t^{n+1}.
struct JetScheme {
  int order = 0;
  int baseVars = 0;
  std::vector<std::string> baseNames;
  std::vector<std::string> vars;                 // N (n+1) jet variables
  std::vector<MultiPoly> equations;              // indexed like eqIndex
  std::vector<std::pair<int, int>> eqIndex;      // (l, k) per equation
};

JetScheme jet_equations(const AffineVariety& V, int n);

// True when the k <= n-1 slice of jn equals jnm1 under the variable
// inclusion. Throws std::invalid_argument when the schemes do not come from
// the same variety or the orders are not consecutive.
bool truncation_check(const JetScheme& jn, const JetScheme& jnm1);

}  // namespace hitchin
