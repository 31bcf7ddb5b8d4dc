#include "floer/poincare.hpp"

#include <sstream>

namespace floer {

std::string PoincarePoly::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        if (!first) out << " + ";
        if (i == 0 || c_[i] != 1) out << c_[i].get_str();
        if (i == 1) out << (c_[i] != 1 ? "*t" : "t");
        if (i > 1) out << (c_[i] != 1 ? "*t^" : "t^") << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

PoincarePoly z4_poincare_of_monomials(const std::vector<Monomial>& monomials) {
    PoincarePoly p;
    for (const Monomial& m : monomials) p[m.z4_degree()] += 1;
    return p;
}

}  // namespace floer
