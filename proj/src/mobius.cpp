#include "lozenge/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lozenge/errors.hpp"

namespace lozenge {

Word reduce_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int letter : w) {
    char base = letter > 0 ? 'a' : 'A';
    s.push_back(static_cast<char>(base + std::abs(letter) - 1));
  }
  return s;
}

Word parse_word(std::string_view text, int rank) {
  Word w;
  if (text.empty() || text == "1") return w;
  for (char ch : text) {
    int index = 0;
    int sign = 1;
    if (ch >= 'a' && ch <= 'z') {
      index = ch - 'a' + 1;
    } else if (ch >= 'A' && ch <= 'Z') {
      index = ch - 'A' + 1;
      sign = -1;
    } else {
      fail(ErrorCode::InvalidArgument, std::string("invalid character '") + ch + "' in word");
    }
    if (index > rank)
      fail(ErrorCode::UnknownGenerator,
           std::string("unknown generator '") + ch + "' (group has " + std::to_string(rank) + " generators)");
    w.push_back(sign * index);
  }
  return reduce_word(w);
}

int letter_rank(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

namespace {

MobiusElement::Matrix normalized(MobiusElement::Matrix m) {
  double det = m[0] * m[3] - m[1] * m[2];
  if (!(det > 0.0) || !std::isfinite(det))
    fail(ErrorCode::ValidationError, "matrix determinant must be positive, got " + std::to_string(det));
  double scale = 1.0 / std::sqrt(det);
  double largest = 0.0;
  for (double& x : m) {
    x *= scale;
    largest = std::max(largest, std::abs(x));
  }
  for (double x : m) {
    if (std::abs(x) > 1e-12 * largest) {
      if (x < 0.0)
        for (double& y : m) y = -y;
      break;
    }
  }
  for (double& x : m)
    if (x == 0.0) x = 0.0;  // no negative zeros in output
  return m;
}

}  // namespace

MobiusElement MobiusElement::from_matrix(const Matrix& m, Word word) {
  MobiusElement g;
  g.m_ = normalized(m);
  g.word_ = reduce_word(word);
  return g;
}

MobiusElement MobiusElement::inverse() const {
  return from_matrix({m_[3], -m_[1], -m_[2], m_[0]}, inverse_word(word_));
}

double MobiusElement::apply(double x) const {
  if (std::isinf(x)) return m_[2] == 0.0 ? x : m_[0] / m_[2];
  double den = m_[2] * x + m_[3];
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  return (m_[0] * x + m_[1]) / den;
}

CirclePoint MobiusElement::apply(CirclePoint p) const {
  // act linearly on a unit representative (cos alpha, sin alpha), alpha = -pi t
  double alpha = -std::numbers::pi * p.angle();
  double vp = std::cos(alpha);
  double vq = std::sin(alpha);
  return CirclePoint::from_vector(m_[0] * vp + m_[1] * vq, m_[2] * vp + m_[3] * vq);
}

MobiusElement compose(const MobiusElement& g, const MobiusElement& h) {
  const auto& x = g.matrix();
  const auto& y = h.matrix();
  Word w = g.word();
  w.insert(w.end(), h.word().begin(), h.word().end());
  return MobiusElement::from_matrix({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                                     x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]},
                                    std::move(w));
}

double projective_distance(const MobiusElement& g, const MobiusElement& h) {
  double same = 0.0;
  double flipped = 0.0;
  for (int i = 0; i < 4; ++i) {
    same = std::max(same, std::abs(g.matrix()[i] - h.matrix()[i]));
    flipped = std::max(flipped, std::abs(g.matrix()[i] + h.matrix()[i]));
  }
  return std::min(same, flipped);
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Identity: return "Identity";
    case Kind::Hyperbolic: return "Hyperbolic";
    case Kind::Parabolic: return "Parabolic";
    case Kind::Elliptic: return "Elliptic";
  }
  return "?";
}

Classification classify(const MobiusElement& g, const Tolerance& tol) {
  if (projective_distance(g, MobiusElement{}) < tol.eps) return {Kind::Identity, false};
  double t = std::abs(g.trace());
  if (tol.clearly_greater(t, 2.0)) return {Kind::Hyperbolic, false};
  if (tol.clearly_less(t, 2.0)) return {Kind::Elliptic, false};
  return {Kind::Parabolic, std::abs(t - 2.0) > 1e-12};
}

bool is_hyperbolic(const MobiusElement& g, const Tolerance& tol) {
  return classify(g, tol).kind == Kind::Hyperbolic;
}

AxisEndpoints axis_endpoints(const MobiusElement& g, const Tolerance& tol) {
  auto cls = classify(g, tol);
  if (cls.kind != Kind::Hyperbolic)
    fail(ErrorCode::NotHyperbolic, format_word(g.word()) + " is " + kind_name(cls.kind) + ", not hyperbolic");
  double tr = g.trace();
  double disc = std::sqrt(tr * tr - 4.0);
  double big = 0.5 * (tr + std::copysign(disc, tr));  // |big| > 1
  double small = 1.0 / big;
  auto eigenvector = [&](double lambda) {
    double p1 = g.b(), q1 = lambda - g.a();
    double p2 = lambda - g.d(), q2 = g.c();
    if (std::hypot(p1, q1) >= std::hypot(p2, q2)) return CirclePoint::from_vector(p1, q1);
    return CirclePoint::from_vector(p2, q2);
  };
  // The eigendirection with the larger |eigenvalue| is the attracting boundary point.
  return {eigenvector(big), eigenvector(small)};
}

}  // namespace lozenge
