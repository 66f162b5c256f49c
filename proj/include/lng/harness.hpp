#pragma once

// Named numerical verification suites, seeded instance generators and the
// brute-force oracle checks. Every suite is deterministic for a given seed.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lng/algmodel.hpp"

namespace lng {

struct Check {
    std::string name;
    double residual = 0.0;
    double bound = 0.0;
    bool above = false;  // the check asks for residual > bound (a control that must fail)
    bool pass = false;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 1;
    double tol = 0.0;
    int samples = 0;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    bool pass() const;
    double max_residual() const;  // over the checks that ask for a small residual
};

struct SuiteParams {
    std::optional<Lattice> lattice;  // primary lattice (sup for coset suites)
    std::optional<Lattice> sub;
    std::optional<cplx> scale;
    std::optional<cplx> xi;
    std::optional<double> tol;
    std::uint64_t seed = 1;
    int samples = 0;  // 0 selects the suite default
};

std::vector<std::string> suite_names();
double default_tol(const std::string& suite);

// throws UnknownSuite
Report verify(const std::string& suite, const SuiteParams& params = {});

// several suites at once; the parallel version must agree with the serial one
std::vector<Report> verify_all_serial(const std::vector<std::string>& suites, const SuiteParams& params = {});
std::vector<Report> verify_all(const std::vector<std::string>& suites, const SuiteParams& params = {});

// ---- seeded generators shared with the tests ----

struct DescriptorPair {
    GroupDescriptor g1, g2;
    bool expect_iso = false;
    std::string label;
};
std::vector<DescriptorPair> descriptor_pairs(std::uint64_t seed, int count);

struct XiInstance {
    ExactScalar omega;
    QVector xi;
    std::map<std::string, cplx> anchors;
};
XiInstance random_xi_instance(std::mt19937_64& rng);

// (a omega + b) / (c omega + d) for quadratic or symbolic omega
ExactScalar mobius(const ExactScalar& omega, const Witness& w);
// the inverse of rebase_xi: xi2 over omega2 with (c omega1 + d) xi2 = t
QVector unrebase_xi(const QVector& t, const Witness& w, std::optional<MinPoly> mp2);
// the same vector written over omega' = n omega + m
QVector reexpress(const QVector& v, const Q& n, const Q& m, std::optional<MinPoly> mp);
ExactScalar shifted_omega(const ExactScalar& omega, const Q& n, const Q& m);

struct QuadPair {
    ExactScalar w1, w2;
    bool related = false;  // built as a Moebius image with entries <= 3
};
std::vector<QuadPair> quadratic_pairs(std::uint64_t seed, int count);

// the default lattice pairs of the coset suites, indices {2, 3, 4, 9}
std::vector<std::pair<Lattice, Lattice>> coset_pairs();

}  // namespace lng
