// Copyright 2026 The ballcap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ballcap/polynomial.h"

#include <cctype>
#include <cmath>
#include <sstream>

#include "ballcap/errors.h"

namespace ballcap {

namespace {

Complex PowInt(Complex z, int n) {
  Complex result = 1.0;
  for (int i = 0; i < n; ++i) result *= z;
  return result;
}

class TermParser {
 public:
  TermParser(const std::string& text, int d) : text_(text), d_(d) {}

  Polynomial Run() {
    Polynomial p(d_);
    SkipSpace();
    if (AtEnd()) throw DomainError("empty polynomial");
    bool first = true;
    while (!AtEnd()) {
      double sign = 1.0;
      if (Peek() == '+' || Peek() == '-') {
        sign = Peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        SkipSpace();
      } else if (!first) {
        Fail("expected '+' or '-'");
      }
      first = false;
      Complex c = sign;
      MultiIndex alpha(d_, 0);
      ParseFactor(c, alpha);
      SkipSpace();
      while (!AtEnd() && Peek() == '*') {
        ++pos_;
        SkipSpace();
        ParseFactor(c, alpha);
        SkipSpace();
      }
      p.AddTerm(alpha, c);
    }
    return p;
  }

 private:
  void ParseFactor(Complex& c, MultiIndex& alpha) {
    if (AtEnd()) Fail("unexpected end");
    const char ch = Peek();
    if (ch == 'z') {
      ++pos_;
      const int k = ParseInt();
      if (k < 1 || k > d_) Fail("variable index out of range");
      int power = 1;
      SkipSpace();
      if (!AtEnd() && Peek() == '^') {
        ++pos_;
        SkipSpace();
        power = ParseInt();
      }
      alpha[k - 1] += power;
    } else if (ch == 'i') {
      ++pos_;
      c *= Complex(0.0, 1.0);
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t used = 0;
      const double v = std::stod(text_.substr(pos_), &used);
      pos_ += used;
      c *= v;
    } else {
      Fail(std::string("unexpected character '") + ch + "'");
    }
  }

  int ParseInt() {
    const std::size_t start = pos_;
    while (!AtEnd() && std::isdigit(static_cast<unsigned char>(Peek()))) ++pos_;
    if (start == pos_) Fail("expected an integer");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) ++pos_;
  }
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }
  [[noreturn]] void Fail(const std::string& what) const {
    throw DomainError("polynomial '" + text_ + "' at offset " + std::to_string(pos_) +
                      ": " + what);
  }

  const std::string& text_;
  int d_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::Constant(int d, Complex c) {
  Polynomial p(d);
  p.AddTerm(MultiIndex(d, 0), c);
  return p;
}

Polynomial Polynomial::Coordinate(int d, int k, Complex c) {
  Polynomial p(d);
  MultiIndex alpha(d, 0);
  alpha.at(k) = 1;
  p.AddTerm(alpha, c);
  return p;
}

Polynomial Polynomial::Parse(const std::string& text, int d) {
  return TermParser(text, d).Run();
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& [alpha, c] : terms_) {
    if (c == Complex(0.0)) continue;
    int n = 0;
    for (int a : alpha) n += a;
    deg = std::max(deg, n);
  }
  return deg;
}

void Polynomial::AddTerm(const MultiIndex& alpha, Complex c) {
  if (static_cast<int>(alpha.size()) != dimension_) {
    throw DimensionMismatch("multi-index length does not match polynomial dimension");
  }
  for (int a : alpha) {
    if (a < 0) throw DomainError("negative exponent in polynomial term");
  }
  terms_[alpha] += c;
}

Complex Polynomial::Evaluate(const std::vector<Complex>& z) const {
  if (static_cast<int>(z.size()) != dimension_) {
    throw DimensionMismatch("polynomial evaluated at a point of the wrong dimension");
  }
  Complex sum = 0.0;
  for (const auto& [alpha, c] : terms_) {
    Complex v = c;
    for (int i = 0; i < dimension_; ++i) v *= PowInt(z[i], alpha[i]);
    sum += v;
  }
  return sum;
}

std::vector<Complex> Polynomial::Gradient(const std::vector<Complex>& z) const {
  if (static_cast<int>(z.size()) != dimension_) {
    throw DimensionMismatch("polynomial gradient at a point of the wrong dimension");
  }
  std::vector<Complex> g(dimension_, 0.0);
  for (const auto& [alpha, c] : terms_) {
    for (int k = 0; k < dimension_; ++k) {
      if (alpha[k] == 0) continue;
      Complex v = c * static_cast<double>(alpha[k]);
      for (int i = 0; i < dimension_; ++i) {
        v *= PowInt(z[i], i == k ? alpha[i] - 1 : alpha[i]);
      }
      g[k] += v;
    }
  }
  return g;
}

Polynomial Polynomial::Dilated(double r) const {
  Polynomial p(dimension_);
  for (const auto& [alpha, c] : terms_) {
    int n = 0;
    for (int a : alpha) n += a;
    p.AddTerm(alpha, c * std::pow(r, n));
  }
  return p;
}

std::string Polynomial::ToString() const {
  std::ostringstream out;
  out.precision(17);
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "*i)";
    for (int i = 0; i < dimension_; ++i) {
      if (alpha[i] == 1) out << "*z" << i + 1;
      if (alpha[i] > 1) out << "*z" << i + 1 << "^" << alpha[i];
    }
  }
  return first ? "0" : out.str();
}

double MonomialNormSquared(const KernelSpec& spec, const MultiIndex& alpha) {
  int n = 0;
  for (int a : alpha) n += a;
  const double a_n = spec.coefficients()(n);
  if (!(a_n > 0.0)) {
    throw UndefinedCoefficient("monomial of degree " + std::to_string(n) +
                               " is not in the space: a_" + std::to_string(n) + " = 0");
  }
  return 1.0 / (MultinomialWeight(alpha) * a_n);
}

double NormSquared(const KernelSpec& spec, const Polynomial& g) {
  double s = 0.0;
  for (const auto& [alpha, c] : g.terms()) {
    if (c == Complex(0.0)) continue;
    s += std::norm(c) * MonomialNormSquared(spec, alpha);
  }
  return s;
}

}  // namespace ballcap
