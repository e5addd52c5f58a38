#include "qts/quaternion.hpp"

#include "qts/errors.hpp"

#include <string>

namespace qts {

char axis_name(EtaAxis eta) {
    switch (eta) {
    case EtaAxis::i: return 'i';
    case EtaAxis::j: return 'j';
    case EtaAxis::k: return 'k';
    }
    return '?';
}

EtaAxis parse_axis(char c) {
    switch (c) {
    case 'i': return EtaAxis::i;
    case 'j': return EtaAxis::j;
    case 'k': return EtaAxis::k;
    default: throw InputError(std::string("eta axis must be one of i, j, k; got '") + c + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ", " << q.x << "i, " << q.y << "j, " << q.z << "k)";
}

} // namespace qts
