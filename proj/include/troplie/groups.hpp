#pragma once

#include "troplie/gz.hpp"
#include "troplie/poisson.hpp"
#include "troplie/tropical.hpp"

namespace troplie {

enum class GroupFamily { BPlus, GStar0, GStar };

/// Solid-minor generators "D{k}_{l}" in lex (k, l) order: BPlus uses
/// all-real-positive generators; GStar0/GStar make D{k}_{l} complex with
/// conjugate "~D{k}_{l}" for l < k and keep the principal D{k}_{k} real.
RegistryPtr group_registry(int n, GroupFamily family);

/// The bracket of the family on its registry:
///   BPlus: {D,D} log-canonical with 1/2 eps(k-p)(C-R).
///   GStar0: the real-form bracket i {.,.}: (D,D) pairs i/2 eps(k-p)(C-R),
///     conjugate pairs the conjugate, mixed (D, ~D) pairs i/2 (A-B).
///   GStar: holomorphic/antiholomorphic blocks as GStar0; mixed pairs via
///     the g/f^-1 sandwich bracket on the concrete minor index sets,
///     triangular-simplified and converted to Delta coordinates, overall
///     factor i.
PoissonStructure assemble(int n, GroupFamily family);

struct GroupReport {
    bool passed = true;
    std::vector<std::string> failures;
    void fail(std::string what) {
        passed = false;
        failures.push_back(std::move(what));
    }
};

/// The log-canonical part of assemble(GStar) coincides with
/// assemble(GStar0) pair by pair, and every remainder monomial has strictly
/// higher grading than the product monomial (deg D{k}_{l} = -l(k-l)).
GroupReport check_log_canonical_part_matches_gstar0(int n);

struct VerifyGZReport {
    bool passed = true;
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> failures;
    void record(const std::string& name, bool ok) {
        checks.emplace_back(name, ok);
        if (!ok) passed = false;
    }
};

/// Five checks on an assembled G*-shaped structure: (1) tropical cone equals
/// gz_cone(n); (2) the constant bracket is {zeta^(k)_l, phi^(p)_q} =
/// 1/4 (eps(k-p) - 1)(C-R) with all other blocks zero; (3) the Casimirs are
/// exactly zeta^(n)_l; (4) the Liouville pairing is lower triangular with
/// diagonal -1/2; (5) the angle change phi -> psi exists: with lambda^(k)_l
/// = 2 (zeta^(k)_l - zeta^(k)_{l-1}), the pairing {lambda, phi} is lower
/// triangular with diagonal -1 and psi = -(Q^T)^{-1} phi gives
/// {lambda_M, psi_N} = -delta_{MN} through a unitriangular change.
VerifyGZReport verify_gz_on(const PoissonStructure& P, int n);
VerifyGZReport verify_gz(int n);

}  // namespace troplie
