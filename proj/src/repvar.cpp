#include "repvar.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "manifold.hpp"

namespace hsikit {

std::vector<std::pair<Word, int>> TwistedRepProblem::all_constraints() const {
  std::vector<std::pair<Word, int>> cs;
  for (const Word& r : presentation.relators) cs.emplace_back(r, +1);
  for (const auto& [w, s] : twisted_relators) {
    if (s != 1 && s != -1) throw std::invalid_argument("twisted target must be +-I");
    cs.emplace_back(w, s);
  }
  return cs;
}

bool TwistedRepProblem::contradictory() const {
  auto cs = all_constraints();
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i].second == cs[j].second) continue;
      if (cs[i].first == cs[j].first || cs[i].first == cs[j].first.inverse()) return true;
    }
  return false;
}

std::vector<Word> signature_battery(int n_generators) {
  std::vector<Word> ws;
  for (int i = 0; i < n_generators; ++i) ws.push_back(Word::generator(i));
  for (int i = 0; i < n_generators; ++i)
    for (int j = i; j < n_generators; ++j)
      ws.push_back(Word::generator(i) * Word::generator(j));
  return ws;
}

namespace {

SU2Element evaluate(const Word& w, const std::vector<SU2Element>& rep) {
  SU2Element p = SU2Element::identity();
  for (const Letter& l : w.letters()) {
    const SU2Element& g = rep.at(static_cast<size_t>(l.gen));
    p = p * (l.exp == 1 ? g : g.inverse());
  }
  return p;
}

}  // namespace

std::vector<double> signature_of(const std::vector<SU2Element>& rep, int n_generators) {
  std::vector<double> sig;
  for (const Word& w : signature_battery(n_generators))
    sig.push_back(orbit_signature(evaluate(w, rep)));
  return sig;
}

RepKind classify(const std::vector<SU2Element>& rep, double tol) {
  bool central = true;
  for (const SU2Element& g : rep) {
    double d = std::min(g.distance(SU2Element::identity()),
                        g.distance(SU2Element::minus_identity()));
    if (d > tol) {
      central = false;
      break;
    }
  }
  if (central) return RepKind::Central;
  for (size_t i = 0; i < rep.size(); ++i)
    for (size_t j = i + 1; j < rep.size(); ++j)
      if ((rep[i] * rep[j]).distance(rep[j] * rep[i]) > tol) return RepKind::Irreducible;
  return RepKind::Abelian;
}

OrbitType orbit_type_of(RepKind kind) {
  switch (kind) {
    case RepKind::Central: return OrbitType::Point;
    case RepKind::Abelian: return OrbitType::Sphere;
    default: return OrbitType::SO3;
  }
}

double residual_of(const TwistedRepProblem& prob, const std::vector<SU2Element>& rep) {
  double worst = 0;
  for (const auto& [w, s] : prob.all_constraints()) {
    SU2Element target = s == 1 ? SU2Element::identity() : SU2Element::minus_identity();
    worst = std::max(worst, evaluate(w, rep).distance(target));
  }
  return worst;
}

namespace {

// raw (non-normalizing) quaternion algebra for the solver
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;
  Quat conj() const { return {w, -x, -y, -z}; }
  friend Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
};

Quat basis(int b) {
  Quat q{0, 0, 0, 0};
  if (b == 0) q.w = 1;
  if (b == 1) q.x = 1;
  if (b == 2) q.y = 1;
  if (b == 3) q.z = 1;
  return q;
}

struct LMSystem {
  std::vector<std::pair<Word, int>> constraints;
  int n;  // generators

  int n_residuals() const { return static_cast<int>(constraints.size()) * 4 + n; }

  Quat letter_value(const Letter& l, const Eigen::VectorXd& x) const {
    Quat q{x[4 * l.gen], x[4 * l.gen + 1], x[4 * l.gen + 2], x[4 * l.gen + 3]};
    return l.exp == 1 ? q : q.conj();
  }

  void eval(const Eigen::VectorXd& x, Eigen::VectorXd& r, Eigen::MatrixXd* jac) const {
    r.setZero(n_residuals());
    if (jac) jac->setZero(n_residuals(), 4 * n);
    int row = 0;
    for (const auto& [w, s] : constraints) {
      const auto& ls = w.letters();
      size_t k = ls.size();
      std::vector<Quat> prefix(k + 1), suffix(k + 1);
      prefix[0] = Quat{};
      for (size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * letter_value(ls[i], x);
      suffix[k] = Quat{};
      for (size_t i = k; i-- > 0;) suffix[i] = letter_value(ls[i], x) * suffix[i + 1];
      Quat p = prefix[k];
      r[row + 0] = p.w - s;
      r[row + 1] = p.x;
      r[row + 2] = p.y;
      r[row + 3] = p.z;
      if (jac) {
        for (size_t i = 0; i < k; ++i) {
          for (int b = 0; b < 4; ++b) {
            Quat e = ls[i].exp == 1 ? basis(b) : basis(b).conj();
            Quat d = prefix[i] * e * suffix[i + 1];
            int col = 4 * ls[i].gen + b;
            (*jac)(row + 0, col) += d.w;
            (*jac)(row + 1, col) += d.x;
            (*jac)(row + 2, col) += d.y;
            (*jac)(row + 3, col) += d.z;
          }
        }
      }
      row += 4;
    }
    for (int g = 0; g < n; ++g) {
      double nn = x.segment<4>(4 * g).squaredNorm();
      r[row] = nn - 1.0;
      if (jac)
        for (int b = 0; b < 4; ++b) (*jac)(row, 4 * g + b) = 2.0 * x[4 * g + b];
      ++row;
    }
  }
};

}  // namespace

std::vector<RepOrbit> solve_numeric(const TwistedRepProblem& prob, int restarts,
                                    double tol, std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  prob.presentation.validate();
  LMSystem sys{prob.all_constraints(), prob.presentation.n_generators};
  int n = sys.n;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;

  std::vector<RepOrbit> orbits;
  bool any_converged = false;

  auto consider = [&](std::vector<SU2Element> rep) {
    double res = residual_of(prob, rep);
    if (res >= tol) return;
    any_converged = true;
    std::vector<double> sig = signature_of(rep, n);
    for (RepOrbit& o : orbits) {
      double d = 0;
      for (size_t i = 0; i < sig.size(); ++i)
        d = std::max(d, std::abs(sig[i] - o.signature[i]));
      if (d < 1e-6) {
        if (res < o.residual) {
          o.representative = rep;
          o.residual = res;
        }
        return;
      }
    }
    RepOrbit o;
    o.representative = std::move(rep);
    o.residual = res;
    o.signature = std::move(sig);
    o.kind = classify(o.representative);
    o.orbit_type = orbit_type_of(o.kind);
    orbits.push_back(std::move(o));
  };

  // central representations have tiny attraction basins, so probe every sign
  // pattern directly when that is cheap
  if (n <= 10) {
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      std::vector<SU2Element> rep;
      for (int g = 0; g < n; ++g)
        rep.push_back((mask >> g) & 1 ? SU2Element::minus_identity()
                                      : SU2Element::identity());
      consider(std::move(rep));
    }
  }

  Eigen::VectorXd x(4 * n), r(sys.n_residuals()), rtrial(sys.n_residuals());
  Eigen::MatrixXd jac(sys.n_residuals(), 4 * n);

  for (int attempt = 0; attempt < restarts; ++attempt) {
    for (int g = 0; g < n; ++g) {
      Eigen::Vector4d v;
      for (int b = 0; b < 4; ++b) v[b] = gauss(rng);
      x.segment<4>(4 * g) = v.normalized();
    }
    double lambda = 1e-3;
    sys.eval(x, r, &jac);
    double cost = r.squaredNorm();
    for (int iter = 0; iter < 120; ++iter) {
      Eigen::MatrixXd h = jac.transpose() * jac;
      h.diagonal().array() += lambda;
      Eigen::VectorXd step = h.ldlt().solve(-jac.transpose() * r);
      Eigen::VectorXd xt = x + step;
      sys.eval(xt, rtrial, nullptr);
      double ct = rtrial.squaredNorm();
      if (ct < cost) {
        x = xt;
        cost = ct;
        lambda = std::max(lambda * 0.3, 1e-14);
        sys.eval(x, r, &jac);
        if (cost < 1e-26) break;
      } else {
        lambda *= 5.0;
        if (lambda > 1e12) break;
      }
    }
    std::vector<SU2Element> rep;
    rep.reserve(static_cast<size_t>(n));
    bool ok = true;
    for (int g = 0; g < n; ++g) {
      Eigen::Vector4d v = x.segment<4>(4 * g);
      if (v.norm() < 1e-6) {
        ok = false;
        break;
      }
      rep.emplace_back(v[0], v[1], v[2], v[3]);
    }
    if (!ok) continue;
    consider(std::move(rep));
  }
  if (!any_converged)
    throw NoConvergence("no restart reached the residual tolerance");
  return orbits;
}

TwistedRepProblem lens_problem(long long p, long long q, int c0, int c1) {
  if (p < 1 || std::gcd(p, q) != 1) throw InvalidParams("lens: need p >= 1, gcd(p,q) = 1");
  TwistedRepProblem prob;
  prob.presentation.n_generators = 2;  // A = 0, B = 1
  int eps = (c0 % 2) ? -1 : 1;
  int epsp = (c1 % 2) ? -1 : 1;
  prob.twisted_relators.emplace_back(Word::generator(1), eps);
  prob.twisted_relators.emplace_back(Word::power(0, p) * Word::power(1, -q), epsp);
  return prob;
}

LensVariety enumerate_lens(long long p, long long q, int c0, int c1) {
  if (p < 1 || std::gcd(p, q) != 1) throw InvalidParams("lens: need p >= 1, gcd(p,q) = 1");
  int eps = (c0 % 2) ? -1 : 1;
  int epsp = (c1 % 2) ? -1 : 1;
  // B = eps*I forces A^p = eta*I with eta = eps' * eps^q
  int eta = epsp * ((q % 2 != 0 && eps == -1) ? -1 : 1);
  LensVariety out;
  const double pi = std::acos(-1.0);
  for (long long k = (eta == 1 ? 0 : 1); k <= p; k += 2) {
    double phi = pi * static_cast<double>(k) / static_cast<double>(p);
    LensComponent comp;
    comp.is_point = (k == 0 || k == p);
    comp.trace_a = 2.0 * std::cos(phi);
    comp.b_sign = eps;
    comp.representative = {SU2Element(std::cos(phi), std::sin(phi), 0, 0),
                           eps == 1 ? SU2Element::identity() : SU2Element::minus_identity()};
    out.perturbed_count += comp.is_point ? 1 : 2;
    out.components.push_back(std::move(comp));
  }
  if (out.perturbed_count != p)
    throw InternalError("lens enumeration: perturbed generator count != p");
  return out;
}

namespace {

// strict comparison of fractions x1/y1 < x2/y2 with positive denominators
bool frac_less(long long x1, long long y1, long long x2, long long y2) {
  return x1 * y2 < x2 * y1;
}

}  // namespace

TwistedRepProblem brieskorn_problem(long long a1, long long a2, long long a3) {
  ManifoldDesc desc;
  desc.shape = BrieskornDesc{a1, a2, a3};
  TwistedRepProblem prob;
  prob.presentation = pi1(desc);
  return prob;
}

BrieskornVariety enumerate_brieskorn(long long a1, long long a2, long long a3) {
  ManifoldDesc desc;
  desc.shape = BrieskornDesc{a1, a2, a3};
  desc.validate();
  SeifertData sd = brieskorn_seifert_data(a1, a2, a3);
  const double pi = std::acos(-1.0);
  long long as[3] = {a1, a2, a3};
  long long bs[3] = {sd.b1, sd.b2, sd.b3};
  BrieskornVariety out;

  TwistedRepProblem prob = brieskorn_problem(a1, a2, a3);

  for (int m = 0; m <= 1; ++m) {
    int t = static_cast<int>((m * sd.b0) & 1);
    for (long long l1 = 1; l1 < as[0]; ++l1) {
      if ((l1 & 1) != ((m * bs[0]) & 1)) continue;
      for (long long l2 = 1; l2 < as[1]; ++l2) {
        if ((l2 & 1) != ((m * bs[1]) & 1)) continue;
        for (long long l3 = 1; l3 < as[2]; ++l3) {
          if ((l3 & 1) != ((m * bs[2]) & 1)) continue;
          // theta_i = pi * l_i / a_i; the product constraint turns the third
          // angle into pi - theta_3 when the central target is -I
          long long u3 = t ? as[2] - l3 : l3;
          // |t1 - t2| < u3/a3
          long long diff_num = std::llabs(l1 * as[1] - l2 * as[0]);
          if (!frac_less(diff_num, as[0] * as[1], u3, as[2])) continue;
          // u3/a3 < t1 + t2 and u3/a3 < 2 - t1 - t2
          long long sum_num = l1 * as[1] + l2 * as[0];
          if (!frac_less(u3, as[2], sum_num, as[0] * as[1])) continue;
          if (!frac_less(u3, as[2], 2 * as[0] * as[1] - sum_num, as[0] * as[1])) continue;

          double t1 = pi * static_cast<double>(l1) / static_cast<double>(as[0]);
          double t2 = pi * static_cast<double>(l2) / static_cast<double>(as[1]);
          double t3 = pi * static_cast<double>(l3) / static_cast<double>(as[2]);
          double sgn = t ? -1.0 : 1.0;
          // X1 about the z-axis; X3 about an axis in the x-z plane at angle
          // phi; solve trace(X1^-1 * sgn * X3^-1) = 2 cos(t2) by bisection
          SU2Element x1e(std::cos(t1), 0, 0, std::sin(t1));
          auto x3_of = [&](double phi) {
            return SU2Element(std::cos(t3), std::sin(t3) * std::sin(phi), 0,
                              std::sin(t3) * std::cos(phi));
          };
          auto f = [&](double phi) {
            SU2Element prod = x1e.inverse() * x3_of(phi).inverse();
            return sgn * prod.trace();
          };
          double target = 2.0 * std::cos(t2);
          double lo = 0, hi = pi;
          double flo = f(lo), fhi = f(hi);
          if ((flo - target) * (fhi - target) > 0)
            throw InternalError("brieskorn: feasible triple without bracketing");
          for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            if ((f(mid) - target) * (flo - target) <= 0) {
              hi = mid;
              fhi = f(mid);
            } else {
              lo = mid;
              flo = f(lo);
            }
          }
          double phi = 0.5 * (lo + hi);
          SU2Element x3e = x3_of(phi);
          SU2Element central = t ? SU2Element::minus_identity() : SU2Element::identity();
          SU2Element x2e = x1e.inverse() * (t ? -x3e.inverse() : x3e.inverse());
          SU2Element he = m ? SU2Element::minus_identity() : SU2Element::identity();
          (void)central;
          std::vector<SU2Element> rep = {x1e, x2e, x3e, he};
          double res = residual_of(prob, rep);
          if (res > 1e-8)
            throw InternalError("brieskorn: constructed representation fails relators");
          RepOrbit o;
          o.representative = rep;
          o.kind = RepKind::Irreducible;
          o.orbit_type = OrbitType::SO3;
          o.residual = res;
          o.signature = signature_of(rep, 4);
          out.orbits.push_back(std::move(o));
          out.rotation_numbers.push_back({l1, l2, l3});
        }
      }
    }
  }
  // the trivial representation is the only non-irreducible point (H_1 = 1)
  RepOrbit triv;
  triv.representative = std::vector<SU2Element>(4, SU2Element::identity());
  triv.kind = RepKind::Central;
  triv.orbit_type = OrbitType::Point;
  triv.residual = residual_of(prob, triv.representative);
  triv.signature = signature_of(triv.representative, 4);
  out.orbits.insert(out.orbits.begin(), std::move(triv));
  return out;
}

long long casson_brieskorn(long long a1, long long a2, long long a3) {
  BrieskornVariety v = enumerate_brieskorn(a1, a2, a3);
  long long n = v.irreducible_count();
  if (n % 2 != 0)
    throw InternalError("brieskorn: irreducible representation count is odd");
  return n / 2;
}

}  // namespace hsikit
