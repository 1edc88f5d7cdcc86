#pragma once

#include "berger/pi_scalar.hpp"
#include "berger/rational.hpp"
#include "berger/sqrt_field.hpp"

#include <nlohmann/json.hpp>

namespace berger {

inline nlohmann::json to_json(const Rational& r) {
    return {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

inline nlohmann::json to_json(const SqrtField& x) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int rad : SqrtField::radicands()) {
        const Rational c = x.coeff(rad);
        if (c.is_zero()) continue;
        coeffs.push_back({{"rad", rad}, {"num", c.numerator().get_str()}, {"den", c.denominator().get_str()}});
    }
    return coeffs;
}

inline nlohmann::json to_json(const PiScalar& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : x.terms()) terms.push_back({{"k", k}, {"coeffs", to_json(c)}});
    return {{"pi_terms", terms}};
}

}  // namespace berger
