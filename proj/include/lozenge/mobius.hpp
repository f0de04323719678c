#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "lozenge/circle.hpp"
#include "lozenge/numeric.hpp"

namespace lozenge {

// Signed 1-based generator indices: +1 is the first generator, -1 its inverse.
using Word = std::vector<int>;

Word reduce_word(const Word& w);
Word inverse_word(const Word& w);
// Letters a,b,c,... for generators, upper case for inverses; "1" for the empty word.
std::string format_word(const Word& w);
// Throws UnknownGenerator for letters beyond `rank` and InvalidArgument for other
// characters. An empty string or "1" is the identity.
Word parse_word(std::string_view text, int rank);
// Canonical letter order a < A < b < B < ...
int letter_rank(int letter);

// An element of PSL(2,R) acting on the boundary of the upper half-plane,
// together with the reduced word that produced it.
class MobiusElement {
 public:
  using Matrix = std::array<double, 4>;  // row-major a, b, c, d

  MobiusElement() = default;  // identity, empty word

  // Scales to determinant one and normalizes the sign so the first
  // non-negligible entry is positive. Throws ValidationError if det <= 0.
  static MobiusElement from_matrix(const Matrix& m, Word word = {});

  const Matrix& matrix() const { return m_; }
  double a() const { return m_[0]; }
  double b() const { return m_[1]; }
  double c() const { return m_[2]; }
  double d() const { return m_[3]; }
  const Word& word() const { return word_; }

  double trace() const { return m_[0] + m_[3]; }
  double determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  MobiusElement inverse() const;

  // Boundary action on the real line (returns +inf for the pole).
  double apply(double x) const;
  CirclePoint apply(CirclePoint p) const;

 private:
  Matrix m_{1.0, 0.0, 0.0, 1.0};
  Word word_;
};

MobiusElement compose(const MobiusElement& g, const MobiusElement& h);
inline MobiusElement operator*(const MobiusElement& g, const MobiusElement& h) { return compose(g, h); }

// Entrywise max-norm distance up to the sign ambiguity g == -g.
double projective_distance(const MobiusElement& g, const MobiusElement& h);

enum class Kind { Identity, Hyperbolic, Parabolic, Elliptic };
const char* kind_name(Kind k);

struct Classification {
  Kind kind = Kind::Identity;
  bool marginal = false;  // |trace| within eps of 2 but not exactly 2
};

Classification classify(const MobiusElement& g, const Tolerance& tol = {});
bool is_hyperbolic(const MobiusElement& g, const Tolerance& tol = {});

struct AxisEndpoints {
  CirclePoint attracting;
  CirclePoint repelling;
};

// Fixed points of a hyperbolic element; throws NotHyperbolic otherwise.
AxisEndpoints axis_endpoints(const MobiusElement& g, const Tolerance& tol = {});

}  // namespace lozenge
