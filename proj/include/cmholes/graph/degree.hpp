#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cmholes/error.hpp"

namespace cmholes {

using VertexId = std::int32_t;
using HalfEdgeId = std::int32_t;

// Largest support accepted for explicit laws; keeps coefficient expansions
// and the truncated ODE system exact to tolerance.
inline constexpr int kMaxExplicitSupport = 512;

// Tail mass below which the Poisson law is cut.
inline constexpr double kPoissonTailMass = 1e-12;

class DegreeDistribution {
 public:
  enum class Kind { regular, poisson, explicit_pmf };

  static DegreeDistribution regular(int d) {
    if (d < 1) throw DomainViolation("regular degree must be positive");
    DegreeDistribution dist;
    dist.kind_ = Kind::regular;
    dist.d_ = d;
    dist.pmf_.assign(static_cast<std::size_t>(d) + 1, 0.0);
    dist.pmf_[d] = 1.0;
    return dist;
  }

  // Truncated at the smallest K with P(X > K) < tail_mass, then renormalized.
  static DegreeDistribution poisson(double c, double tail_mass = kPoissonTailMass) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainViolation("poisson mean must be positive");
    // Terms are generated well past the mean so the suffix sums below are
    // accurate; the suffix sum is taken directly instead of 1 - cdf.
    std::vector<double> terms;
    double term = std::exp(-c);
    const double log_c = std::log(c);
    for (int i = 0;; ++i) {
      if (i > 0) term = std::exp(i * log_c - c - std::lgamma(i + 1.0));
      terms.push_back(term);
      if (i > c && term < 1e-300) break;
      if (i > 100000) throw DomainViolation("poisson mean too large");
    }
    std::vector<double> suffix(terms.size() + 1, 0.0);
    for (std::size_t i = terms.size(); i-- > 0;) suffix[i] = suffix[i + 1] + terms[i];
    std::size_t cut = 0;
    while (suffix[cut + 1] >= tail_mass) ++cut;
    DegreeDistribution dist;
    dist.kind_ = Kind::poisson;
    dist.c_ = c;
    dist.pmf_.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(cut) + 1);
    dist.normalize();
    return dist;
  }

  static DegreeDistribution from_pmf(std::vector<double> pmf) {
    if (pmf.empty()) throw DomainViolation("empty pmf");
    for (double p : pmf)
      if (!(p >= 0.0) || !std::isfinite(p)) throw DomainViolation("pmf entries must be nonnegative");
    while (pmf.size() > 1 && pmf.back() == 0.0) pmf.pop_back();
    if (static_cast<int>(pmf.size()) - 1 > kMaxExplicitSupport)
      throw DomainViolation("explicit pmf support exceeds " + std::to_string(kMaxExplicitSupport));
    DegreeDistribution dist;
    dist.kind_ = Kind::explicit_pmf;
    dist.pmf_ = std::move(pmf);
    if (!(std::accumulate(dist.pmf_.begin(), dist.pmf_.end(), 0.0) > 0.0))
      throw DomainViolation("pmf has zero mass");
    dist.normalize();
    return dist;
  }

  // Empirical law of a degree list.
  static DegreeDistribution empirical(const std::vector<int>& degrees) {
    if (degrees.empty()) throw DomainViolation("empty degree list");
    int max_d = 0;
    for (int d : degrees) {
      if (d < 0) throw DomainViolation("negative degree");
      max_d = std::max(max_d, d);
    }
    std::vector<double> pmf(static_cast<std::size_t>(max_d) + 1, 0.0);
    for (int d : degrees) pmf[d] += 1.0;
    return from_pmf(std::move(pmf));
  }

  Kind kind() const { return kind_; }
  int regular_degree() const { return d_; }
  double poisson_mean() const { return c_; }
  const std::vector<double>& pmf() const { return pmf_; }
  int max_degree() const { return static_cast<int>(pmf_.size()) - 1; }

  double probability(int i) const {
    return i >= 0 && i < static_cast<int>(pmf_.size()) ? pmf_[i] : 0.0;
  }

  double mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < pmf_.size(); ++i) m += static_cast<double>(i) * pmf_[i];
    return m;
  }

  double second_moment() const {
    double m = 0.0;
    for (std::size_t i = 0; i < pmf_.size(); ++i) m += static_cast<double>(i * i) * pmf_[i];
    return m;
  }

  // sum i(i-1) pi_i / sum i pi_i, i.e. hat f'(1).
  double criticality() const {
    double num = 0.0;
    for (std::size_t i = 2; i < pmf_.size(); ++i) num += static_cast<double>(i * (i - 1)) * pmf_[i];
    const double m = mean();
    return m > 0.0 ? num / m : 0.0;
  }

  bool supercritical() const { return criticality() > 1.0; }

  // "regular:3", "poisson:2", "explicit:0.2,0.3,0.5"
  std::string describe() const {
    switch (kind_) {
      case Kind::regular: return "regular:" + std::to_string(d_);
      case Kind::poisson: {
        std::ostringstream os;
        os.precision(17);
        os << "poisson:" << c_;
        return os.str();
      }
      case Kind::explicit_pmf: {
        std::ostringstream os;
        os.precision(17);
        os << "explicit:";
        for (std::size_t i = 0; i < pmf_.size(); ++i) os << (i ? "," : "") << pmf_[i];
        return os.str();
      }
    }
    return {};
  }

 private:
  void normalize() {
    const double total = std::accumulate(pmf_.begin(), pmf_.end(), 0.0);
    for (double& p : pmf_) p /= total;
  }

  Kind kind_ = Kind::explicit_pmf;
  int d_ = 0;
  double c_ = 0.0;
  std::vector<double> pmf_;
};

struct DegreeSequence {
  std::vector<int> degrees;
  std::int64_t total_half_edges = 0;

  std::size_t size() const { return degrees.size(); }

  // Computes the total and, if it is odd, bumps the last degree by one.
  static DegreeSequence from_degrees(std::vector<int> degrees) {
    DegreeSequence seq;
    seq.degrees = std::move(degrees);
    for (int d : seq.degrees) {
      if (d < 0) throw DomainViolation("negative degree");
      seq.total_half_edges += d;
    }
    if (seq.total_half_edges % 2 != 0) {
      ++seq.degrees.back();
      ++seq.total_half_edges;
    }
    if (seq.total_half_edges > std::numeric_limits<HalfEdgeId>::max())
      throw DomainViolation("too many half-edges");
    return seq;
  }

  int max_degree() const {
    int m = 0;
    for (int d : degrees) m = std::max(m, d);
    return m;
  }

  // Diagnostic for the bounded-maximum-degree hypothesis: every degree is at
  // most ceil(N^(1/gamma)).
  bool max_degree_within(double gamma) const {
    if (degrees.empty()) return true;
    const double bound = std::ceil(std::pow(static_cast<double>(degrees.size()), 1.0 / gamma));
    return static_cast<double>(max_degree()) <= bound;
  }
};

template <class URBG>
DegreeSequence sample_degree_sequence(const DegreeDistribution& dist, std::size_t n, URBG& rng) {
  if (n == 0) throw DomainViolation("N must be positive");
  std::vector<int> degrees(n);
  if (dist.kind() == DegreeDistribution::Kind::regular) {
    std::fill(degrees.begin(), degrees.end(), dist.regular_degree());
  } else {
    const auto& pmf = dist.pmf();
    std::vector<double> cdf(pmf.size());
    std::partial_sum(pmf.begin(), pmf.end(), cdf.begin());
    cdf.back() = 1.0;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (auto& d : degrees) {
      const double u = unif(rng);
      d = static_cast<int>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      if (d >= static_cast<int>(cdf.size())) d = static_cast<int>(cdf.size()) - 1;
    }
  }
  return DegreeSequence::from_degrees(std::move(degrees));
}

// One integer per line.
inline DegreeSequence read_degree_sequence(std::istream& in) {
  std::vector<int> degrees;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(line.substr(first), &used);
    } catch (const std::exception&) {
      throw ConfigError("degree file line " + std::to_string(line_no) + ": not an integer");
    }
    if (line.find_first_not_of(" \t\r", first + used) != std::string::npos)
      throw ConfigError("degree file line " + std::to_string(line_no) + ": trailing characters");
    if (d < 0) throw ConfigError("degree file line " + std::to_string(line_no) + ": negative degree");
    degrees.push_back(d);
  }
  if (degrees.empty()) throw ConfigError("degree file is empty");
  return DegreeSequence::from_degrees(std::move(degrees));
}

inline void write_degree_sequence(std::ostream& out, const DegreeSequence& seq) {
  for (int d : seq.degrees) out << d << '\n';
}

}  // namespace cmholes
