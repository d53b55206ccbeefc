#include "haantjes/sampling.hpp"
#include "haantjes/error.hpp"
#include <cmath>

namespace haantjes {

bool SamplingDomain::admissible(const std::vector<double>& x) const
{
    for(const Guard& g : guards)
        if(!(std::fabs(x[g.var]) >= g.min_abs)) return false;
    return true;
}

std::vector<std::vector<double>> SamplingDomain::draw() const
{
    for(const Guard& g : guards)
        if(g.var >= box.size()) throw PreconditionError("guard on a coordinate outside the sampling box");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> points;
    points.reserve(samples);
    std::vector<double> x(box.size());
    const std::size_t max_tries = 1000 * (samples + 1);
    for(std::size_t tries = 0; points.size() < samples; tries++) {
        if(tries > max_tries) throw PreconditionError("sampling guards reject almost every point of the box");
        for(std::size_t i = 0; i < box.size(); i++) x[i] = uniform(rng, box[i].lo, box[i].hi);
        if(admissible(x)) points.push_back(x);
    }
    return points;
}

}  // namespace haantjes
