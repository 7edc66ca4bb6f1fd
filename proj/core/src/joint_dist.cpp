#include "nmx/joint_dist.hpp"
#include "nmx/errors.hpp"

#include <json.hpp>

namespace nmx {

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw StructuralError("rat_parse: malformed rational '" + s + "'");
    }
}

JointDist::JointDist(std::vector<SourceAtom> atoms) : atoms_(std::move(atoms)) {
    Rat total = 0;
    for (const auto& a : atoms_) {
        if (a.p < 0) throw StructuralError("JointDist: negative probability");
        total += a.p;
    }
    if (total != 1)
        throw StructuralError("JointDist: probabilities sum to " + rat_str(total) +
                              ", expected exactly 1");
}

Rat JointDist::guess_x_given_e() const {
    CondAtoms ca;
    for (const auto& a : atoms_) ca.add(a.e.to_hex(), a.x.to_hex(), a.p);
    return guessing_probability(ca);
}

Rat JointDist::guess_y_given_e() const {
    CondAtoms ca;
    for (const auto& a : atoms_) ca.add(a.e.to_hex(), a.y.to_hex(), a.p);
    return guessing_probability(ca);
}

std::string JointDist::to_json() const {
    nlohmann::json j;
    j["atoms"] = nlohmann::json::array();
    for (const auto& a : atoms_) {
        j["atoms"].push_back({{"x", a.x.to_hex()},
                              {"e", a.e.to_hex()},
                              {"y", a.y.to_hex()},
                              {"p", {numerator(a.p).str(), denominator(a.p).str()}}});
    }
    return j.dump(2);
}

JointDist JointDist::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("JointDist JSON parse error: ") + e.what());
    }
    std::vector<SourceAtom> atoms;
    try {
        for (const auto& ja : j.at("atoms")) {
            SourceAtom a;
            a.x = BitString::from_hex(ja.at("x").get<std::string>());
            a.e = BitString::from_hex(ja.at("e").get<std::string>());
            a.y = BitString::from_hex(ja.at("y").get<std::string>());
            const auto& p = ja.at("p");
            a.p = Rat(BigInt(p.at(0).get<std::string>()), BigInt(p.at(1).get<std::string>()));
            atoms.push_back(std::move(a));
        }
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("JointDist JSON field error: ") + e.what());
    }
    return JointDist(std::move(atoms));
}

JointDist JointDist::flat_seeded(const std::vector<BitString>& support, std::size_t d_bits) {
    if (support.empty()) throw StructuralError("flat_seeded: empty support");
    std::vector<SourceAtom> atoms;
    Rat p = Rat(1, BigInt(support.size()) * (BigInt(1) << d_bits));
    for (const auto& x : support)
        for (std::uint64_t y = 0; y < (std::uint64_t(1) << d_bits); ++y)
            atoms.push_back({x, BitString(), BitString::from_uint(y, d_bits), p});
    return JointDist(std::move(atoms));
}

JointDist JointDist::flat_pair(const std::vector<BitString>& x_support,
                               const std::vector<BitString>& y_support) {
    if (x_support.empty() || y_support.empty()) throw StructuralError("flat_pair: empty support");
    std::vector<SourceAtom> atoms;
    Rat p = Rat(1, BigInt(x_support.size()) * BigInt(y_support.size()));
    for (const auto& x : x_support)
        for (const auto& y : y_support) atoms.push_back({x, BitString(), y, p});
    return JointDist(std::move(atoms));
}

std::string outcome_key(const std::vector<BitString>& parts) {
    std::string key;
    for (const auto& p : parts) {
        key += p.to_hex();
        key += '|';
    }
    return key;
}

Rat stat_dist(const Dist& p, const Dist& q) {
    Rat total = 0;
    auto itp = p.begin();
    auto itq = q.begin();
    while (itp != p.end() || itq != q.end()) {
        if (itq == q.end() || (itp != p.end() && itp->first < itq->first)) {
            total += abs(itp->second);
            ++itp;
        } else if (itp == p.end() || itq->first < itp->first) {
            total += abs(itq->second);
            ++itq;
        } else {
            total += abs(itp->second - itq->second);
            ++itp;
            ++itq;
        }
    }
    return total / 2;
}

void CondAtoms::add(const std::string& condition, const std::string& value, const Rat& p) {
    by_condition[condition][value] += p;
}

Rat guessing_probability(const CondAtoms& atoms) {
    if (atoms.by_condition.empty()) throw StructuralError("guessing_probability: empty distribution");
    Rat total = 0;
    for (const auto& [cond, values] : atoms.by_condition) {
        Rat best = 0;
        for (const auto& [val, p] : values)
            if (p > best) best = p;
        total += best;
    }
    return total;
}

} // namespace nmx
