#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vqcopt/gate_params.hpp"
#include "vqcopt/pauli.hpp"

namespace vqcopt {

// {n_qubits, terms: [{coeff, letters}]}
inline nlohmann::json observable_to_json(const Observable& obs) {
    if (obs.kind() != Observable::Kind::PauliSum) {
        throw std::invalid_argument("observable_to_json: only Pauli sums are serializable");
    }
    nlohmann::json j;
    j["n_qubits"] = obs.n_qubits();
    j["terms"] = nlohmann::json::array();
    for (const PauliTerm& t : obs.terms()) {
        j["terms"].push_back({{"coeff", t.coeff}, {"letters", t.letters}});
    }
    return j;
}

inline Observable observable_from_json(const nlohmann::json& j) {
    const int n = j.at("n_qubits").get<int>();
    std::vector<PauliTerm> terms;
    for (const auto& t : j.at("terms")) {
        PauliTerm term{t.at("coeff").get<double>(), t.at("letters").get<std::string>()};
        if (static_cast<int>(term.letters.size()) != n) {
            throw std::invalid_argument("observable_from_json: term width mismatch");
        }
        terms.push_back(std::move(term));
    }
    return Observable::pauli_sum(std::move(terms));
}

namespace detail {

inline nlohmann::json mat2_to_json(const Mat2& m) {
    return nlohmann::json::array({{m.a.real(), m.a.imag()},
                                  {m.b.real(), m.b.imag()},
                                  {m.c.real(), m.c.imag()},
                                  {m.d.real(), m.d.imag()}});
}

inline Mat2 mat2_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("matrix payload must be four [re, im] pairs");
    }
    const auto entry = [&](std::size_t i) {
        return cplx(j[i][0].get<double>(), j[i][1].get<double>());
    };
    return {entry(0), entry(1), entry(2), entry(3)};
}

} // namespace detail

// Tagged by variant name with full-precision numeric payloads, suitable
// for checkpointing a trial's gate parameters.
inline nlohmann::json gate_param_to_json(const GateParam& p) {
    struct Visitor {
        nlohmann::json operator()(const FixedAngleGate& g) const {
            const char* generator = g.generator == PauliAxis::X   ? "X"
                                    : g.generator == PauliAxis::Y ? "Y"
                                                                  : "Z";
            return {{"kind", "fixed_angle"}, {"theta", g.theta}, {"generator", generator}};
        }
        nlohmann::json operator()(const HaarAngleGate& g) const {
            return {{"kind", "haar_angle"},
                    {"theta", g.theta},
                    {"conjugator", detail::mat2_to_json(g.conjugator)}};
        }
        nlohmann::json operator()(const AxisGate& g) const {
            return {{"kind", "axis"}, {"axis", {g.axis.x, g.axis.y, g.axis.z}}};
        }
        nlohmann::json operator()(const QuatGate& g) const {
            return {{"kind", "quaternion"}, {"q", {g.q.w, g.q.x, g.q.y, g.q.z}}};
        }
    };
    return std::visit(Visitor{}, p);
}

inline GateParam gate_param_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "fixed_angle") {
        const std::string generator = j.at("generator").get<std::string>();
        PauliAxis axis;
        if (generator == "X") {
            axis = PauliAxis::X;
        } else if (generator == "Y") {
            axis = PauliAxis::Y;
        } else if (generator == "Z") {
            axis = PauliAxis::Z;
        } else {
            throw std::invalid_argument("gate_param_from_json: generator must be X, Y or Z");
        }
        return FixedAngleGate{j.at("theta").get<double>(), axis};
    }
    if (kind == "haar_angle") {
        return HaarAngleGate{j.at("theta").get<double>(),
                             detail::mat2_from_json(j.at("conjugator"))};
    }
    if (kind == "axis") {
        const auto& a = j.at("axis");
        return AxisGate{{a[0].get<double>(), a[1].get<double>(), a[2].get<double>()}};
    }
    if (kind == "quaternion") {
        const auto& q = j.at("q");
        return QuatGate{
            {q[0].get<double>(), q[1].get<double>(), q[2].get<double>(), q[3].get<double>()}};
    }
    throw std::invalid_argument("gate_param_from_json: unknown kind '" + kind + "'");
}

} // namespace vqcopt
