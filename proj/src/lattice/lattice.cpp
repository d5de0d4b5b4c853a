#include "confdesign/lattice/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace confdesign {

namespace {

QMatrix inverse(const QMatrix& g) {
  const std::size_t n = g.rows();
  QMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> e(n, Rat(0));
    e[j] = 1;
    const auto r = solve_linear(g, e);
    if (r.singular) throw std::domain_error("Gram matrix is singular");
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = r.x[i];
  }
  return inv;
}

// Integer matrix D*G with the common denominator D.
struct IntGram {
  long den = 1;
  std::vector<std::vector<long>> g;
};

IntGram integer_gram(const QMatrix& gram) {
  IntGram out;
  Int d = 1;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), gram(i, j).get_den_mpz_t());
  if (!d.fits_slong_p()) throw std::overflow_error("Gram denominators too large");
  out.den = d.get_si();
  out.g.assign(gram.rows(), std::vector<long>(gram.cols()));
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      const Rat v = gram(i, j) * out.den;
      if (!v.get_num().fits_slong_p()) throw std::overflow_error("Gram entries too large");
      out.g[i][j] = v.get_num().get_si();
    }
  return out;
}

std::vector<std::vector<int>> monomials(int dim, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(dim, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == dim - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (dim > 0 && degree >= 0) rec(0, degree);
  return out;
}

}  // namespace

void Lattice::validate() const {
  if (!gram.is_square() || gram.rows() == 0) throw std::domain_error("Gram matrix must be square and nonempty");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram(i, j) != gram(j, i)) throw std::domain_error("Gram matrix is not symmetric");
  for (std::size_t k = 1; k <= gram.rows(); ++k) {
    QMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = gram(i, j);
    if (det(m) <= 0) throw std::domain_error("Gram matrix is not positive definite");
  }
}

Rat Lattice::inner(const IVec& a, const IVec& b) const {
  Rat s = 0;
  for (int i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim(); ++j)
      if (b[j] != 0) s += gram(i, j) * a[i] * b[j];
  }
  return s;
}

Lattice make_lattice(const std::string& name, const QMatrix& gram) {
  Lattice l{name, gram};
  l.validate();
  return l;
}

Lattice load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line, name, body;
  while (std::getline(in, line)) {
    const auto p = line.find_first_not_of(" \t");
    if (p != std::string::npos && line[p] == '#') {
      if (name.empty()) {
        name = line.substr(p + 1);
        name.erase(0, name.find_first_not_of(" \t"));
      }
      continue;
    }
    body += line + "\n";
  }
  std::istringstream is(body);
  std::size_t n = 0;
  if (!(is >> n) || n == 0) throw std::runtime_error("bad lattice dimension in " + path);
  QMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string tok;
      if (!(is >> tok)) throw std::runtime_error("truncated Gram matrix in " + path);
      g(i, j) = parse_rat(tok);
    }
  if (name.empty()) name = path;
  return make_lattice(name, g);
}

Lattice base_change(const Lattice& l, const std::vector<IVec>& u) {
  const std::size_t n = l.dim();
  QMatrix um(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) um(i, j) = Rat(u.at(i).at(j));
  const Rat d = det(um);
  if (d != 1 && d != -1) throw std::domain_error("base change is not unimodular");
  return make_lattice(l.name, um * l.gram * um.transpose());
}

bool Shell::negation_closed() const {
  for (const auto& v : vectors) {
    IVec w = v;
    for (auto& x : w) x = -x;
    if (!std::binary_search(vectors.begin(), vectors.end(), w)) return false;
  }
  return true;
}

std::vector<IVec> enumerate_ball(const Lattice& l, const Rat& bound, unsigned threads) {
  if (sgn(bound) < 0) return {};
  const int n = l.dim();
  // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
  QMatrix q = l.gram;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (int k = i + 1; k < n; ++k)
      for (int m = k; m < n; ++m) q(k, m) -= q(k, i) * q(i, m);
  }
  auto run = [&](unsigned slice, unsigned nslices, std::vector<IVec>& out) {
    IVec x(n, 0);
    std::function<void(int, const Rat&)> rec = [&](int i, const Rat& budget) {
      if (i < 0) {
        out.push_back(x);
        return;
      }
      Rat center = 0;
      for (int j = i + 1; j < n; ++j)
        if (x[j]) center -= q(i, j) * x[j];
      const auto fits = [&](long v) {
        const Rat d = Rat(v) - center;
        return q(i, i) * d * d <= budget;
      };
      // Integer nearest the center, then outward in both directions.
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
      const long start = f.get_si();
      unsigned counter = 0;
      auto visit = [&](long v) {
        if (i == n - 1 && (counter++ % nslices) != slice) return;
        x[i] = v;
        const Rat d = Rat(v) - center;
        rec(i - 1, budget - q(i, i) * d * d);
        x[i] = 0;
      };
      for (long v = start; fits(v); --v) visit(v);
      for (long v = start + 1; fits(v); ++v) visit(v);
    };
    rec(n - 1, bound);
  };
  threads = std::max(1u, threads);
  std::vector<std::vector<IVec>> parts(threads);
  if (threads == 1) {
    run(0, 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t, threads, std::ref(parts[t]));
    for (auto& th : pool) th.join();
  }
  std::vector<IVec> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  return all;
}

Shell shell_enum(const Lattice& l, const Rat& norm, unsigned threads) {
  if (sgn(norm) < 0) throw std::domain_error("norm must be nonnegative");
  l.validate();
  Shell s{l, norm, {}};
  for (auto& v : enumerate_ball(l, norm, threads))
    if (l.inner(v, v) == norm) s.vectors.push_back(std::move(v));
  return s;
}

HarmonicPoly gram_laplacian(const HarmonicPoly& p, const QMatrix& ginv) {
  HarmonicPoly out{p.nvars, {}};
  for (const auto& [e, c] : p.terms)
    for (int i = 0; i < p.nvars; ++i)
      for (int j = 0; j < p.nvars; ++j) {
        const Rat& w = ginv(i, j);
        if (sgn(w) == 0) continue;
        auto f = e;
        Rat coef = c * w;
        if (i == j) {
          if (f[i] < 2) continue;
          coef *= f[i] * (f[i] - 1);
          f[i] -= 2;
        } else {
          if (f[i] < 1 || f[j] < 1) continue;
          coef *= f[i] * f[j];
          f[i] -= 1;
          f[j] -= 1;
        }
        out.terms[f] += coef;
      }
  std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

std::vector<HarmonicPoly> harm_basis(int dim, int degree, const QMatrix& gram) {
  if (degree < 0) throw std::domain_error("degree must be nonnegative");
  const QMatrix ginv = gram.rows() == 0 ? QMatrix::identity(dim) : inverse(gram);
  const auto top = monomials(dim, degree);
  std::vector<HarmonicPoly> out;
  if (degree < 2) {
    for (const auto& e : top) out.push_back(HarmonicPoly::monomial(e));
    return out;
  }
  const auto low = monomials(dim, degree - 2);
  std::map<std::vector<int>, std::size_t> row_of;
  for (std::size_t i = 0; i < low.size(); ++i) row_of[low[i]] = i;
  QMatrix lap(low.size(), top.size());
  for (std::size_t j = 0; j < top.size(); ++j)
    for (const auto& [e, c] : gram_laplacian(HarmonicPoly::monomial(top[j]), ginv).terms) lap(row_of.at(e), j) = c;
  for (const auto& v : kernel(lap)) {
    HarmonicPoly p{dim, {}};
    for (std::size_t j = 0; j < top.size(); ++j)
      if (sgn(v[j]) != 0) p.terms[top[j]] = v[j];
    out.push_back(std::move(p));
  }
  return out;
}

HarmonicPoly zonal_harmonic(const Lattice& l, int s, const IVec& y) {
  const int n = l.dim();
  HarmonicPoly xy{n, {}}, xx{n, {}};
  for (int i = 0; i < n; ++i) {
    Rat gy = 0;
    for (int j = 0; j < n; ++j) gy += l.gram(i, j) * y[j];
    std::vector<int> e(n, 0);
    e[i] = 1;
    xy = xy + HarmonicPoly::monomial(e, gy);
    for (int j = i; j < n; ++j) {
      std::vector<int> f(n, 0);
      f[i] += 1;
      f[j] += 1;
      xx = xx + HarmonicPoly::monomial(f, i == j ? l.gram(i, i) : 2 * l.gram(i, j));
    }
  }
  const Rat yy = l.inner(y, y);
  const auto c = zonal_coefficients(s, Rat(n));
  const HarmonicPoly one = HarmonicPoly::monomial(std::vector<int>(n, 0));
  auto power = [&](const HarmonicPoly& p, int k) {
    HarmonicPoly r = one;
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
  };
  HarmonicPoly out{n, {}};
  Rat yk = 1;
  for (int k = 0; 2 * k <= s; ++k) {
    out = out + (power(xy, s - 2 * k) * power(xx, k)).scaled(c[k] * yk);
    yk *= yy;
  }
  return out;
}

Rat harmonic_sum(const Shell& s, const HarmonicPoly& p) {
  Rat total = 0;
  for (const auto& v : s.vectors) {
    RVec x(v.begin(), v.end());
    total += p.eval(x);
  }
  return total;
}

namespace {

// Histogram of D * (x, y) for x in the shell, for each pole y (or summed over all poles).
std::map<long, long> inner_histogram(const Shell& s, const IVec* pole) {
  const IntGram ig = integer_gram(s.lattice.gram);
  const int n = s.lattice.dim();
  std::map<long, long> hist;
  auto add_pole = [&](const IVec& y) {
    std::vector<long> gy(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gy[i] += ig.g[i][j] * y[j];
    for (const auto& x : s.vectors) {
      long t = 0;
      for (int i = 0; i < n; ++i) t += x[i] * gy[i];
      ++hist[t];
    }
  };
  if (pole)
    add_pole(*pole);
  else
    for (const auto& y : s.vectors) add_pole(y);
  return hist;
}

Rat zonal_from_histogram(const std::map<long, long>& hist, long den, int degree, int dim, const Rat& norm) {
  const auto c = zonal_coefficients(degree, Rat(dim));
  const Rat ab = norm * norm;
  Rat total = 0;
  for (const auto& [ts, count] : hist) {
    const Rat t(ts, den);
    Rat value = 0, abk = 1;
    for (int k = 0; 2 * k <= degree; ++k) {
      Rat tp = 1;
      for (int i = 0; i < degree - 2 * k; ++i) tp *= t;
      value += c[k] * tp * abk;
      abk *= ab;
    }
    total += value * count;
  }
  total.canonicalize();
  return total;
}

}  // namespace

Rat zonal_pair_sum(const Shell& s, int degree) {
  const IntGram ig = integer_gram(s.lattice.gram);
  return zonal_from_histogram(inner_histogram(s, nullptr), ig.den, degree, s.lattice.dim(), s.norm);
}

DesignReport design_report(const Shell& s, int t_max) {
  if (s.vectors.empty()) throw std::domain_error("empty shell");
  const bool symmetric = s.negation_closed();
  const IntGram ig = integer_gram(s.lattice.gram);
  const auto all = inner_histogram(s, nullptr);
  DesignReport r;
  r.t = t_max;
  for (int deg = 1; deg <= t_max; ++deg) {
    if (symmetric && deg % 2) continue;  // odd sums cancel under x -> -x
    if (sgn(zonal_from_histogram(all, ig.den, deg, s.lattice.dim(), s.norm)) == 0) continue;
    r.t = deg - 1;
    r.failed_degree = deg;
    for (const auto& y : s.vectors) {
      const Rat v = zonal_from_histogram(inner_histogram(s, &y), ig.den, deg, s.lattice.dim(), s.norm);
      if (sgn(v) != 0) {
        r.witness_pole = y;
        r.witness_sum = v;
        break;
      }
    }
    if (r.witness_pole.empty()) throw std::logic_error("no witness for a nonzero zonal pair sum");
    break;
  }
  return r;
}

int design_strength(const Shell& s, int t_max) { return design_report(s, t_max).t; }

QSeries harmonic_theta(const Lattice& l, const HarmonicPoly& p, std::size_t n) {
  if (p.nvars != l.dim()) throw std::invalid_argument("polynomial and lattice dimensions differ");
  if (!gram_laplacian(p, inverse(l.gram)).is_zero()) throw std::domain_error("polynomial is not harmonic");
  for (int i = 0; i < l.dim(); ++i) {
    const Rat& d = l.gram(i, i);
    if (!is_integer(d) || d.get_num() % 2 != 0) throw std::domain_error("lattice is not even");
  }
  std::vector<Rat> coeffs(n, Rat(0));
  if (n == 0) return {0, coeffs};
  for (const auto& v : enumerate_ball(l, Rat(2 * (long(n) - 1)))) {
    const Rat half = l.inner(v, v) / 2;
    if (!is_integer(half)) throw std::domain_error("lattice is not even");
    coeffs[half.get_num().get_si()] += p.eval(RVec(v.begin(), v.end()));
  }
  return {0, coeffs};
}

}  // namespace confdesign
