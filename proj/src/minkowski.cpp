#include "kappa/minkowski.hpp"

#include <stdexcept>

namespace kappa {

Metric::Metric(std::vector<int> signature) : signature_(std::move(signature)) {
  for (int s : signature_)
    if (s != 1 && s != -1) throw std::invalid_argument("metric signature entries must be +1 or -1");
}

Metric Metric::standard(std::size_t n) {
  std::vector<int> sig(n, -1);
  if (n > 0) sig[0] = 1;
  return Metric(std::move(sig));
}

Metric Metric::parse(const std::string& text) {
  std::vector<int> sig;
  for (char c : text) {
    if (c == '+') {
      sig.push_back(1);
    } else if (c == '-') {
      sig.push_back(-1);
    } else {
      throw std::invalid_argument("metric signature must contain only '+' and '-': \"" + text + "\"");
    }
  }
  if (sig.empty()) throw std::invalid_argument("metric signature is empty");
  return Metric(std::move(sig));
}

std::string Metric::to_string() const {
  std::string s;
  for (int v : signature_) s += v > 0 ? '+' : '-';
  return s;
}

MinkowskiAlgebra::MinkowskiAlgebra(Metric metric) : metric_(std::move(metric)) {
  const std::size_t n = metric_.dimension();
  if (n < 2) throw AlgebraError("kappa-Minkowski space needs n >= 2");
  PresentationData data;
  data.name = "M_kappa(n=" + std::to_string(n) + "," + metric_.to_string() + ")";
  for (std::size_t mu = 0; mu < n; ++mu) data.generators.push_back("x" + std::to_string(mu));
  data.heavy.assign(n, false);
  const Scalar il = Scalar::lambda(1, GaussianRational::i());
  // x^k x^0 = x^0 x^k - (i/kappa) x^k ; spatial generators commute.
  for (std::size_t k = 1; k < n; ++k) {
    auto s = static_cast<Symbol>(k);
    data.swap_rules[{s, 0}] = Terms{{Word{s}, -il}};
  }
  for (std::size_t mu = 0; mu < n; ++mu) {
    auto s = static_cast<Symbol>(mu);
    data.counit.emplace_back();
    data.antipode.push_back(Terms{{Word{s}, Scalar(-1)}});
    data.star.push_back(Terms{{Word{s}, Scalar::one()}});
    TensorTerms cop;
    cop.emplace(std::vector<Word>{Word{}, Word{s}}, Scalar::one());
    cop.emplace(std::vector<Word>{Word{s}, Word{}}, Scalar::one());
    data.coproduct.push_back(std::move(cop));
  }
  presentation_ = std::make_shared<const Presentation>(std::move(data));
}

Element MinkowskiAlgebra::x(std::size_t mu) const {
  if (mu >= dimension()) throw AlgebraError("index " + std::to_string(mu) + " out of range for n=" + std::to_string(dimension()));
  return Element::generator(presentation_, static_cast<Symbol>(mu));
}

Element MinkowskiAlgebra::x_lower(std::size_t mu) const { return x(mu) * Scalar(metric_.diag(mu)); }

Element MinkowskiAlgebra::x_squared() const {
  Element r = zero();
  for (std::size_t mu = 0; mu < dimension(); ++mu) r += x_lower(mu) * x(mu);
  return r;
}

Element MinkowskiAlgebra::phi() const {
  const auto n = static_cast<long>(dimension());
  return x_squared() + x(0) * Scalar::lambda(1, GaussianRational(0, n - 1));
}

Element MinkowskiAlgebra::x_munu(std::size_t mu, std::size_t nu) const {
  const Scalar il = Scalar::lambda(1, GaussianRational::i());
  return x(mu) * x(nu) + (x(0) * Scalar(metric_.g(mu, nu)) - x(nu) * Scalar(metric_.g(0, mu))) * il;
}

std::vector<Relation> MinkowskiAlgebra::relations() const {
  std::vector<Relation> out;
  const Scalar il = Scalar::lambda(1, GaussianRational::i());
  for (std::size_t mu = 0; mu < dimension(); ++mu)
    for (std::size_t nu = mu + 1; nu < dimension(); ++nu) {
      auto a = static_cast<Symbol>(mu);
      auto b = static_cast<Symbol>(nu);
      RawTerms raw{{Word{a, b}, Scalar::one()}, {Word{b, a}, Scalar(-1)}};
      if (mu == 0) raw.emplace_back(Word{b}, -il);
      out.push_back({"[x" + std::to_string(mu) + ",x" + std::to_string(nu) + "]", std::move(raw)});
    }
  return out;
}

}  // namespace kappa
