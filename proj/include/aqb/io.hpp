#pragma once

#include <json.hpp>
#include <sstream>
#include <string>

#include "aqb/bounds.hpp"
#include "aqb/dynamics.hpp"
#include "aqb/gap.hpp"
#include "aqb/problem.hpp"

namespace aqb::io {

using nlohmann::json;

inline json basis_json(const BasisDescriptor& b) {
    json j;
    switch (b.kind) {
    case BasisDescriptor::Kind::FullRegister:
        j["kind"] = "full_register";
        j["n"] = b.n;
        break;
    case BasisDescriptor::Kind::HammingSubspace:
        j["kind"] = "hamming_subspace";
        j["n"] = b.n;
        j["k"] = b.k;
        break;
    case BasisDescriptor::Kind::TensorAB:
        j["kind"] = "tensor_ab";
        j["nA"] = b.nA;
        j["nB"] = b.nB;
        break;
    }
    j["dim"] = b.dim;
    return j;
}

inline json state_json(const StateVector& s) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < s.amps().size(); ++i)
        amps.push_back({s.amps()[i].real(), s.amps()[i].imag()});
    return amps;
}

// Problem document: identity, parameters and the payload needed to re-check
// the instance (diagonal values or target amplitudes; dense blocks are named
// but not spelled out).
inline json problem_json(const Problem& p) {
    json j;
    j["name"] = p.name;
    j["basis"] = basis_json(p.basis);
    j["params"] = p.params;
    j["info"] = p.info;
    switch (p.h1.repr()) {
    case Operator::Repr::Diagonal: {
        json values = json::array();
        for (Eigen::Index i = 0; i < p.h1.diagonal_values().size(); ++i)
            values.push_back(p.h1.diagonal_values()[i]);
        j["h1"] = {{"repr", "diagonal"}, {"values", std::move(values)}};
        break;
    }
    case Operator::Repr::ProjectorComplement:
        j["h1"] = {{"repr", "projector_complement"}, {"target", state_json(p.h1.target())}};
        break;
    case Operator::Repr::Dense:
        j["h1"] = {{"repr", "dense"}};
        break;
    case Operator::Repr::ConvexPair:
        j["h1"] = {{"repr", "convex_pair"}};
        break;
    }
    if (p.phi1) j["phi1"] = state_json(*p.phi1);
    return j;
}

inline json bound_report_json(const bounds::BoundReport& r) {
    json j;
    j["problem"] = r.problem;
    j["mean1"] = r.mean1;
    j["mean2"] = r.mean2;
    j["deltaV"] = r.deltaV;
    j["momentsResidual"] = r.momentsResidual;
    if (r.overlapC1) j["overlapC1"] = *r.overlapC1;
    else j["overlapC1"] = nullptr;
    j["epsilon"] = r.epsilon;
    j["lambdaBar"] = r.lambdaBar;
    j["tLower"] = r.tLower;
    j["asymptoticClass"] = bounds::to_string(r.asymptoticClass);
    return j;
}

inline json moments_json(const bounds::MomentsCheck& c) {
    return {{"mean1", c.mean1}, {"mean2", c.mean2}, {"residual", c.residual}, {"holds", c.holds}};
}

inline json scan_json(const bounds::ScanResult& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n}, {"deltaV", row.deltaV}, {"invDeltaV", row.invDeltaV}});
    return {{"rows", std::move(rows)},
            {"slope", r.slope},
            {"asymptoticClass", bounds::to_string(r.asymptoticClass)}};
}

inline std::string scan_csv(const bounds::ScanResult& r) {
    std::ostringstream out;
    out << "n,deltaV,invDeltaV,class\n";
    for (const auto& row : r.rows)
        out << row.n << "," << num::fmt17(row.deltaV) << "," << num::fmt17(row.invDeltaV) << ","
            << bounds::to_string(r.asymptoticClass) << "\n";
    return out.str();
}

inline json random_clique_json(const bounds::RandomCliqueMoments& r) {
    return {{"n", r.n},        {"k", r.k},           {"p", r.p},
            {"Lk", r.Lk},      {"eH", r.eH},         {"eH2", r.eH2},
            {"deltaVRand", r.deltaVRand},            {"tRandInf", r.tRandInf}};
}

inline json montecarlo_json(const bounds::MonteCarloMoments& m) {
    return {{"n", m.n},         {"k", m.k},
            {"p", m.p},         {"seed", m.seed},
            {"trials", m.trials},
            {"eH", m.eH},       {"eH2", m.eH2},
            {"stderrH", m.stderrH}, {"stderrH2", m.stderrH2}};
}

inline json chain_report_json(const dynamics::ChainReport& c) {
    return {{"sampleCount", c.sampleCount},
            {"minSlackLeft", c.minSlackLeft},
            {"lambdaAtLeft", c.lambdaAtLeft},
            {"minSlackRight", c.minSlackRight},
            {"lambdaAtRight", c.lambdaAtRight}};
}

inline json runtime_check_json(const dynamics::RuntimeBoundCheck& c) {
    return {{"applicable", c.applicable},
            {"epsilon", c.epsilon},
            {"finalFidelity", c.finalFidelity},
            {"conditionMet", c.conditionMet},
            {"tLower", c.tLower},
            {"holds", c.holds}};
}

inline json trajectory_summary_json(const dynamics::Trajectory& t) {
    const auto& last = t.final_sample();
    return {{"problem", t.problem},
            {"schedule", t.schedule},
            {"T", t.T},
            {"lambdaBar", t.lambdaBar},
            {"deltaV", t.deltaV},
            {"steps", t.steps},
            {"normDrift", t.normDrift},
            {"samples", static_cast<int>(t.samples.size())},
            {"finalFidelity", last.fidelity},
            {"finalOverlapC", last.overlapC},
            {"finalBures", last.bures},
            {"finalR", last.bigR}};
}

inline std::string trajectory_csv(const dynamics::Trajectory& t) {
    std::ostringstream out;
    out << "t,lambda,fidelity,overlapC,bures,R,sinR_clamped,chain_slack_left,chain_slack_right\n";
    for (const auto& s : t.samples) {
        auto [left, right] = dynamics::chain_slacks(s);
        out << num::fmt17(s.t) << "," << num::fmt17(s.lambda) << "," << num::fmt17(s.fidelity)
            << "," << num::fmt17(s.overlapC) << "," << num::fmt17(s.bures) << ","
            << num::fmt17(s.bigR) << "," << num::fmt17(std::sin(std::min(s.bigR, M_PI / 2.0)))
            << "," << num::fmt17(left) << "," << num::fmt17(right) << "\n";
    }
    return out.str();
}

inline json gap_profile_json(const gap::GapProfile& g) {
    return {{"gMin", g.gMin},
            {"lambdaAtMin", g.lambdaAtMin},
            {"gridSize", static_cast<int>(g.lambdas.size())}};
}

inline std::string gap_csv(const gap::GapProfile& g) {
    std::ostringstream out;
    out << "lambda,gap\n";
    for (std::size_t i = 0; i < g.lambdas.size(); ++i)
        out << num::fmt17(g.lambdas[i]) << "," << num::fmt17(g.gaps[i]) << "\n";
    return out.str();
}

inline json projector_check_json(const gap::ProjectorGapCheck& c) {
    json j;
    j["applicable"] = c.applicable;
    if (c.applicable) {
        j["overlap"] = c.overlap;
        j["minSlack"] = c.minSlack;
        j["gMinError"] = c.gMinError;
    }
    return j;
}

inline json comparison_json(const gap::BoundComparison& c) {
    json j;
    j["gMin"] = c.gMin;
    j["tLower"] = c.tLower;
    j["degenerate"] = c.degenerate;
    j["projectorPair"] = c.projectorPair;
    if (!c.degenerate) {
        j["invGMin"] = c.invGMin;
        j["invGMinSq"] = c.invGMinSq;
        j["ratioTLowerGMin"] = c.ratioTLowerGMin;
    }
    if (c.projectorPair && !c.degenerate)
        j["deltaVIdentityResidual"] = c.deltaVIdentityResidual;
    return j;
}

inline json min_time_json(const dynamics::MinTimeResult& m) {
    return {{"tMin", m.tMin},
            {"converged", m.converged},
            {"finalFidelity", m.finalFidelity},
            {"epsilon", m.epsilon}};
}

inline json scaling_json(const dynamics::ScalingResult& s) {
    json rows = json::array();
    for (const auto& r : s.rows)
        rows.push_back({{"n", r.n},
                        {"dim", r.dim},
                        {"tMin", r.tMin},
                        {"tLower", r.tLower},
                        {"converged", r.converged}});
    return {{"rows", std::move(rows)}, {"epsilon", s.epsilon}, {"schedule", s.schedule}};
}

} // namespace aqb::io
