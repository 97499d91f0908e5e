/*
Copyright 2026 The dflag Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Walks one double flag variety through the classifier and both oracles.

#include <iostream>

#include "dflag/branching.hpp"
#include "dflag/classifier.hpp"
#include "dflag/fforacle.hpp"

int main()
{
    using namespace dflag;
    const auto pair = liecomb::SymmetricPairSpec::aiii(2, 2);
    const auto P = liecomb::ParabolicSpec::borel(pair.group);

    for (const auto* q : {"2;1,1", "1,1;1,1"}) {
        const auto Q = liecomb::KParabolicSpec::parse(q);
        const auto c = classifier::classify(pair, P, Q);
        std::cout << pair.to_string() << "  P = " << P.to_string() << "  Q = " << Q.to_string() << "\n";
        std::cout << "  verdict: " << classifier::to_string(c.verdict.status);
        if (c.verdict.witness) {
            std::cout << " (" << c.verdict.witness->citation << ")";
        }
        std::cout << "\n";

        const auto report = fforacle::growth_probe(pair, P, Q, {2, 3});
        for (const auto& r : report.counts) {
            std::cout << "  q = " << r.q << ": " << r.orbits << " orbits on " << r.points << " points\n";
        }
        std::cout << "  hint: " << fforacle::to_string(report.hint) << "\n";
    }

    const auto t = branching::spherical_probe_restriction(P, 2, 2, 3);
    std::cout << "restriction of V_{k lambda(B)} to GL_2 x GL_2 multiplicity-free up to k = 3: "
              << (t.multiplicity_free ? "yes" : "no") << "\n";
    return 0;
}
