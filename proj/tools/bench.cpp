// Benchmark comparing serial and OpenMP execution of the batch kernels:
// batch reduction against a fixed basis, the scenario check runner, and a
// sweep of independent small Groebner instances.

#include <omp.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "m21/graded.hpp"
#include "m21/groebner.hpp"
#include "m21/parallel.hpp"
#include "m21/parse.hpp"
#include "m21/scenario.hpp"

using namespace m21;

namespace {

double time_ms(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, const std::function<void()>& work) {
  work(); // warm-up
  auto best = [&](bool serial_mode) {
    double best_ms = 0;
    for (int rep = 0; rep < 3; ++rep) {
      double ms;
      if (serial_mode) {
        par::SerialSection guard;
        ms = time_ms(work);
      } else {
        ms = time_ms(work);
      }
      if (rep == 0 || ms < best_ms) best_ms = ms;
    }
    return best_ms;
  };
  double serial = best(true);
  double parallel = best(false);
  std::cout << name << ": serial " << serial << " ms, parallel " << parallel << " ms, speedup "
            << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
}

Polynomial random_poly(const Ring& ring, std::mt19937& rng, int max_terms, int max_deg) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> expo(0, max_deg);
  std::vector<Term> ts;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m = Monomial::one(ring->nvars());
    for (size_t v = 0; v < ring->nvars(); ++v) m.e[v] = expo(rng);
    int c = coeff(rng);
    if (c != 0) ts.push_back(Term{std::move(m), c});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

} // namespace

int main(int argc, char** argv) {
  std::string corpus = argc > 1 ? argv[1] : "corpus";
  std::mt19937 rng(20240611);
  std::cout << "threads available: " << omp_get_max_threads() << "\n";

  Ring P5 = parse_ring("Z[psi1:1,th1:1,l1:1,l2:2,th2:2]");
  IdealPresentation M21 = IdealPresentation::make(
      P5, {parse_poly("l2-th2-psi1*(l1-psi1)", P5), parse_poly("24*l1^2-48*l2", P5),
           parse_poly("th1*(l1+th1)", P5), parse_poly("20*l1*l2-4*l2*th1", P5),
           parse_poly("2*psi1*th2", P5), parse_poly("th2*(th1+l1-psi1)", P5),
           parse_poly("2*psi1*(l1+th1)*(7*psi1-l1)-24*psi1^3", P5)});
  GroebnerBasis G = groebner_basis(M21);

  std::vector<Polynomial> batch;
  for (int i = 0; i < 2000; ++i) batch.push_back(random_poly(P5, rng, 16, 3));
  row("batch normal forms (2000 polys)",
      [&] { volatile size_t sink = normal_forms(batch, G).size(); (void)sink; });

  // independent homogeneous instances: basis + membership probe each
  Ring R3 = parse_ring("Z[x:1,y:1,z:2]");
  std::vector<std::vector<Polynomial>> instances;
  {
    std::mt19937 r2(1000);
    std::uniform_int_distribution<int> coeff(-3, 3);
    while (instances.size() < 2000) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) {
        long deg = 1 + (k % 2);
        auto mons = monomials_of_degree(*R3, deg);
        std::vector<Term> ts;
        for (int t = 0; t < 3; ++t) {
          int c = coeff(r2);
          if (c != 0) ts.push_back(Term{mons[r2() % mons.size()], c});
        }
        Polynomial g = Polynomial::from_terms(R3, std::move(ts));
        if (!g.is_zero()) gens.push_back(std::move(g));
      }
      if (!gens.empty()) instances.push_back(std::move(gens));
    }
  }
  row("groebner instance sweep (2000 ideals)", [&] {
    long members = 0;
#pragma omp parallel for schedule(dynamic) num_threads(par::max_threads()) \
    reduction(+ : members) if (par::enabled())
    for (long i = 0; i < static_cast<long>(instances.size()); ++i) {
      auto I = IdealPresentation::make(R3, instances[static_cast<size_t>(i)]);
      GroebnerBasis Gi = groebner_basis(I);
      if (ideal_contains(Gi, I.generators.front() * I.generators.back())) ++members;
    }
    volatile long sink = members;
    (void)sink;
  });

  try {
    suite::Scenario s = suite::load_scenario(corpus + "/m21.scn");
    row("scenario m21.scn full check run",
        [&] { volatile int sink = suite::run_checks(s).passed; (void)sink; });
  } catch (const std::exception& e) {
    std::cout << "(skipping corpus benchmark: " << e.what() << ")\n";
  }
  return 0;
}
