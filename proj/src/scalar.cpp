#include "bottchern/scalar.hpp"

namespace bc {

std::string to_string(const Rat& r) {
    std::string s = r.numerator().str();
    if (r.denominator() != Int(1)) s += "/" + r.denominator().str();
    return s;
}

std::string to_string(const GaussQ& z) {
    if (z.im == Rat(0)) return to_string(z.re);
    if (z.re == Rat(0)) return to_string(z.im) + "i";
    std::string s = to_string(z.re);
    if (z.im > Rat(0)) s += "+";
    return s + to_string(z.im) + "i";
}

}  // namespace bc
