#include "ternalg/clifford.hpp"

#include <stdexcept>

namespace ternalg {

namespace {

Mat3 from_rows(std::initializer_list<std::initializer_list<Cyclo>> rows) {
    Mat3 m;
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (const auto& v : row) m.at(r, c++) = v;
        ++r;
    }
    return m;
}

}  // namespace

Mat3 clifford_q(int a) {
    const Cyclo j = Cyclo::j(), j2 = Cyclo::j2(), one = Cyclo(1), z = Cyclo(0);
    switch (a) {
        case 1: return from_rows({{z, one, z}, {z, z, j}, {j2, z, z}});
        case 2: return from_rows({{z, j, z}, {z, z, one}, {j2, z, z}});
        case 3: return from_rows({{z, one, z}, {z, z, one}, {one, z, z}});
        default: throw std::invalid_argument("clifford_q: index must be 1..3");
    }
}

Mat3 clifford_q_dagger(int a) { return clifford_q(a).dagger(); }

EtaTensor EtaTensor::canonical() {
    EtaTensor t{};
    for (int a = 1; a <= 3; ++a) t.at(a, a, a) = Cyclo(1);
    t.at(1, 2, 3) = t.at(2, 3, 1) = t.at(3, 1, 2) = Cyclo(1);
    t.at(2, 1, 3) = t.at(3, 2, 1) = t.at(1, 3, 2) = Cyclo::j2();
    return t;
}

EtaTensor EtaTensor::conj() const {
    EtaTensor t{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) t.e[a][b][c] = e[a][b][c].conj();
    return t;
}

Mat3 ternary_bracket(const Mat3& a, const Mat3& b, const Mat3& c, const Cyclo& phase) {
    if (phase != Cyclo(1) && phase != Cyclo::j() && phase != Cyclo::j2())
        throw std::invalid_argument("ternary_bracket: phase must be 1, j or j^2");
    return a * b * c + phase * (b * c * a) + (phase * phase) * (c * a * b);
}

bool CliffordReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

CliffordReport verify_generators(const Mat3 q[3], const Mat3 qd[3]) {
    CliffordReport rep;
    const EtaTensor eta = EtaTensor::canonical();
    const EtaTensor etabar = eta.conj();
    const Mat3 unit = Mat3::identity();
    const Cyclo three(3);

    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                Mat3 sym = ternary_bracket(q[a - 1], q[b - 1], q[c - 1], Cyclo(1));
                bool ok = sym == (three * eta.at(a, b, c)) * unit;
                rep.checks.push_back({"sym(" + std::to_string(a) + std::to_string(b) +
                                          std::to_string(c) + ")=3eta",
                                      ok});
            }
    // Hermitian conjugation reverses products, so the dotted bracket of
    // (a, b, c) is the dagger of the undotted bracket of (c, b, a):
    // Q+_a Q+_b Q+_c + cyclic = 3 etabar_{cba} 1.
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                Mat3 sym = ternary_bracket(qd[a - 1], qd[b - 1], qd[c - 1], Cyclo(1));
                bool ok = sym == (three * etabar.at(c, b, a)) * unit;
                rep.checks.push_back({"sym_conj(" + std::to_string(a) + std::to_string(b) +
                                          std::to_string(c) + ")=3etabar_rev",
                                      ok});
            }

    const Mat3 zero = Mat3::zero();
    auto bracket_vanishes = [&](const char* tag, int a, int b, int c) {
        Mat3 bj = ternary_bracket(q[a - 1], q[b - 1], q[c - 1], Cyclo::j());
        Mat3 bj2 = ternary_bracket(q[a - 1], q[b - 1], q[c - 1], Cyclo::j2());
        rep.checks.push_back({std::string(tag) + "_j", bj == zero});
        rep.checks.push_back({std::string(tag) + "_j2", bj2 == zero});
    };
    bracket_vanishes("bracket(123)", 1, 2, 3);
    bracket_vanishes("bracket(213)", 2, 1, 3);
    return rep;
}

}  // namespace

CliffordReport verify_clifford() {
    Mat3 q[3] = {clifford_q(1), clifford_q(2), clifford_q(3)};
    Mat3 qd[3] = {clifford_q_dagger(1), clifford_q_dagger(2), clifford_q_dagger(3)};
    return verify_generators(q, qd);
}

CliffordReport similarity_check(const Mat3& p) {
    Mat3 pinv = p.inverse();  // throws when singular
    Mat3 q[3], qd[3];
    for (int a = 1; a <= 3; ++a) {
        q[a - 1] = pinv * clifford_q(a) * p;
        qd[a - 1] = pinv * clifford_q_dagger(a) * p;
    }
    return verify_generators(q, qd);
}

}  // namespace ternalg
