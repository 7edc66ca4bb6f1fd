#ifndef NMX_JOINT_DIST_HPP
#define NMX_JOINT_DIST_HPP

#include <map>
#include <string>
#include <vector>

#include "nmx/bitstring.hpp"
#include "nmx/rational.hpp"

namespace nmx {

// Explicit probability table over (x, e, y) triples: the classical
// side-information source model every oracle consumes.
struct SourceAtom {
    BitString x;
    BitString e;
    BitString y;
    Rat p;
};

class JointDist {
public:
    JointDist() = default;
    explicit JointDist(std::vector<SourceAtom> atoms);

    const std::vector<SourceAtom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    // Exact H∞(X|E) as a guessing probability: sum_e max_x P(x,e).
    Rat guess_x_given_e() const;
    Rat guess_y_given_e() const;

    std::string to_json() const;
    static JointDist from_json(const std::string& text);

    // Uniform X over a support list, trivial E, uniform independent
    // d-bit Y (the seeded-source shape).
    static JointDist flat_seeded(const std::vector<BitString>& support, std::size_t d_bits);
    // Product of two flat sources (the two-source shape), trivial E.
    static JointDist flat_pair(const std::vector<BitString>& x_support,
                               const std::vector<BitString>& y_support);

private:
    std::vector<SourceAtom> atoms_;
};

// Exact finite distribution over serialized outcome keys. Keys are
// built with outcome_key(); map order fixes the summation order.
using Dist = std::map<std::string, Rat>;

std::string outcome_key(const std::vector<BitString>& parts);

// Exact half-L1 distance over the union of outcome spaces.
Rat stat_dist(const Dist& p, const Dist& q);

// Generic exact conditional min-entropy: atoms grouped by condition key,
// guessing probability sum_cond max_value P. Returns the guessing
// probability; H∞ = -log2 of it.
struct CondAtoms {
    std::map<std::string, std::map<std::string, Rat>> by_condition;
    void add(const std::string& condition, const std::string& value, const Rat& p);
};
Rat guessing_probability(const CondAtoms& atoms);

} // namespace nmx

#endif
