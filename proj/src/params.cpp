#include "swarm_apf/params.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

namespace swarm_apf {

namespace {

struct DoubleField {
    std::string_view key;
    double SwarmParams::*member;
};

struct IntField {
    std::string_view key;
    int SwarmParams::*member;
};

constexpr std::array kDoubleFields{
    DoubleField{"r", &SwarmParams::r},
    DoubleField{"d", &SwarmParams::d},
    DoubleField{"phi", &SwarmParams::phi},
    DoubleField{"alpha", &SwarmParams::alpha},
    DoubleField{"beta", &SwarmParams::beta},
    DoubleField{"k_att", &SwarmParams::k_att},
    DoubleField{"k_rep", &SwarmParams::k_rep},
    DoubleField{"d_pre", &SwarmParams::d_pre},
    DoubleField{"gamma", &SwarmParams::gamma},
    DoubleField{"delta", &SwarmParams::delta},
    DoubleField{"dis_threshold", &SwarmParams::dis_threshold},
    DoubleField{"step_len", &SwarmParams::step_len},
    DoubleField{"theta_inner_deg", &SwarmParams::theta_inner_deg},
    DoubleField{"theta_bound_deg", &SwarmParams::theta_bound_deg},
    DoubleField{"risk_threshold", &SwarmParams::risk_threshold},
    DoubleField{"release_risk", &SwarmParams::release_risk},
    DoubleField{"d_safe", &SwarmParams::d_safe},
    DoubleField{"goal_eps", &SwarmParams::goal_eps},
    DoubleField{"eps_len", &SwarmParams::eps_len},
    DoubleField{"f_cap", &SwarmParams::f_cap},
};

constexpr std::array kIntFields{
    IntField{"max_steps", &SwarmParams::max_steps},
    IntField{"k_max", &SwarmParams::k_max},
};

void require(bool ok, std::string_view what) {
    if (!ok) throw ValidationError(fmt::format("invalid parameters: {}", what));
}

}  // namespace

void validate(const SwarmParams& p) {
    for (const auto& f : kDoubleFields) {
        require(std::isfinite(p.*f.member), fmt::format("{} must be finite", f.key));
    }
    require(p.r > 0, "r > 0");
    require(p.d > 0, "d > 0");
    require(p.phi > 0, "phi > 0");
    require(p.alpha > 0, "alpha > 0");
    require(p.beta > 0, "beta > 0");
    require(p.k_att > 0, "k_att > 0");
    require(p.k_rep > 0, "k_rep > 0");
    require(p.d_pre > 0, "d_pre > 0");
    require(p.gamma > 0, "gamma > 0");
    require(p.delta > 0, "delta > 0");
    require(p.dis_threshold > 0, "dis_threshold > 0");
    require(p.phi < p.d, "phi < d");
    require(p.theta_inner_deg >= 0, "theta_inner_deg >= 0");
    require(p.theta_inner_deg < p.theta_bound_deg, "theta_inner_deg < theta_bound_deg");
    require(p.theta_bound_deg <= 45.0, "theta_bound_deg <= 45 (half-angle of the 90 degree fan)");
    require(p.risk_threshold >= 0 && p.risk_threshold < 1, "0 <= risk_threshold < 1");
    require(p.release_risk >= 0 && p.release_risk <= p.risk_threshold, "0 <= release_risk <= risk_threshold");
    require(p.step_len > 0, "step_len > 0");
    require(p.d_safe > 0, "d_safe > 0");
    require(p.goal_eps > 0, "goal_eps > 0");
    require(p.max_steps > 0, "max_steps > 0");
    require(p.eps_len > 0, "eps_len > 0");
    require(p.f_cap > 0, "f_cap > 0");
    require(p.k_max >= 0, "k_max >= 0");
}

std::vector<std::pair<std::string, double>> param_entries(const SwarmParams& p) {
    std::vector<std::pair<std::string, double>> out;
    out.reserve(kDoubleFields.size() + kIntFields.size());
    for (const auto& f : kDoubleFields) out.emplace_back(std::string(f.key), p.*f.member);
    for (const auto& f : kIntFields) out.emplace_back(std::string(f.key), static_cast<double>(p.*f.member));
    return out;
}

bool set_param(SwarmParams& p, std::string_view key, double value) {
    for (const auto& f : kDoubleFields) {
        if (f.key == key) {
            p.*f.member = value;
            return true;
        }
    }
    for (const auto& f : kIntFields) {
        if (f.key == key) {
            if (!(std::isfinite(value) && value == std::trunc(value) && std::abs(value) < 1e9)) {
                throw ValidationError(fmt::format("parameter {} must be an integer", key));
            }
            p.*f.member = static_cast<int>(value);
            return true;
        }
    }
    return false;
}

std::string params_signature(const SwarmParams& p) {
    std::string out;
    for (const auto& [key, value] : param_entries(p)) {
        if (!out.empty()) out += ';';
        out += fmt::format("{}={}", key, value);
    }
    return out;
}

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::TAPF: return "tapf";
        case Variant::IAPF: return "iapf";
        case Variant::OAPF: return "oapf";
    }
    return "?";
}

std::string_view variant_label(Variant v) {
    switch (v) {
        case Variant::TAPF: return "T-APF";
        case Variant::IAPF: return "I-APF";
        case Variant::OAPF: return "O-APF";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view text) {
    for (Variant v : {Variant::TAPF, Variant::IAPF, Variant::OAPF}) {
        if (text == variant_name(v) || text == variant_label(v)) return v;
    }
    return std::nullopt;
}

}  // namespace swarm_apf
