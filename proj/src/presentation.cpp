#include "torsionlab/presentation.hpp"

#include "json.hpp"

namespace torsionlab {

std::string family_name(Family f) {
    switch (f) {
        case Family::FigureEightPOverOne: return "41:p/1";
        case Family::FigureEightOneOverQ: return "41:1/q";
        case Family::FiveTwoOneOverQ: return "52:1/q";
    }
    return "?";
}

std::string family_knot(Family f) {
    return f == Family::FiveTwoOneOverQ ? "52" : "41";
}

namespace {

GroupWord gen(int i) { return GroupWord::generator(i); }

GroupWord conj(const GroupWord& u, const GroupWord& v) { return u * v * u.inverse(); }

}  // namespace

SurgeryPresentation build_presentation(Family family, long parameter) {
    SurgeryPresentation p;
    p.family = family;
    p.parameter = parameter;

    const GroupWord x1 = gen(0), x2 = gen(1), x3 = gen(2), x4 = gen(3);

    if (family == Family::FigureEightPOverOne) {
        p.generator_count = 3;
        const GroupWord d = commutator(x1, x2);
        p.relators = {
            x3 * x1 * x2 * x3.inverse() * x1.inverse(),
            x3 * x2 * x1 * x2 * x3.inverse() * x2.inverse(),
            d * x3.pow(parameter),
        };
        const GroupWord c = x1 * x2 * x1.inverse();
        const GroupWord r1 = GroupWord::generator(p.rho(0));
        const GroupWord r2 = GroupWord::generator(p.rho(1));
        const GroupWord r3 = GroupWord::generator(p.rho(2));
        p.w_word = r1 * conj(x1, r2) * conj(c, r1.inverse()) * conj(d, r2.inverse()) *
                   r3 * conj(x3, r3.inverse());
        return p;
    }

    if (parameter == 0) throw UnsupportedFamily("1/q surgery requires q != 0");

    if (family == Family::FigureEightOneOverQ) {
        p.generator_count = 4;
        const GroupWord d = commutator(x1, x2);
        p.relators = {
            x3 * x1 * x2 * x3.inverse() * x1.inverse(),
            x3 * x2 * x1 * x2 * x3.inverse() * x2.inverse(),
            x3 * d.pow(parameter),
            x4 * d.inverse(),
        };
        const GroupWord c = x1 * x2 * x1.inverse();
        const GroupWord r1 = GroupWord::generator(p.rho(0));
        const GroupWord r2 = GroupWord::generator(p.rho(1));
        const GroupWord r3 = GroupWord::generator(p.rho(2));
        const GroupWord r4 = GroupWord::generator(p.rho(3));
        p.w_word = r1 * conj(x1, r2) * conj(c, r1.inverse()) * conj(d, r2.inverse()) *
                   r4.inverse() * conj(x4, r3) * r4 * r3.inverse();
        return p;
    }

    if (family == Family::FiveTwoOneOverQ) {
        p.generator_count = 4;
        const GroupWord e = commutator(x1 * x1, x2.inverse());
        p.relators = {
            x3 * x1 * x1 * x2.inverse() * x3.inverse() * x1.inverse() * x1.inverse(),
            x3 * x2.inverse() * x3.inverse() * x1.inverse() * x2,
            x3 * e.pow(parameter),
            x4 * e.inverse(),
        };
        const GroupWord u1 = x1 * x1 * x2.inverse() * x1.inverse();
        const GroupWord u2 = x1 * x1 * x2.inverse() * x1.inverse() * x1.inverse() * x2;
        const GroupWord r1 = GroupWord::generator(p.rho(0));
        const GroupWord r2 = GroupWord::generator(p.rho(1));
        const GroupWord r3 = GroupWord::generator(p.rho(2));
        const GroupWord r4 = GroupWord::generator(p.rho(3));
        p.w_word = r1 * conj(x1 * x1, r2) * conj(u1, r1.inverse()) * conj(u2, r2.inverse()) *
                   r4.inverse() * conj(x4, r3) * r4 * r3.inverse();
        return p;
    }

    throw UnsupportedFamily("unknown surgery family");
}

Differentials symbolic_differentials(const SurgeryPresentation& p) {
    const int g = p.generator_count;
    Differentials d;

    for (int j = 0; j < g; ++j)
        d.delta1.push_back(GroupRingElement::one() - GroupRingElement(GroupWord::generator(j)));

    d.delta2.assign(static_cast<size_t>(g), {});
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            d.delta2[static_cast<size_t>(i)].push_back(
                fox_derivative(p.relators[static_cast<size_t>(j)], i));

    // psi maps rho_j to r_j and fixes the x_i
    std::vector<GroupWord> images;
    for (int i = 0; i < g; ++i) images.push_back(GroupWord::generator(i));
    for (int j = 0; j < g; ++j) images.push_back(p.relators[static_cast<size_t>(j)]);
    for (int i = 0; i < g; ++i)
        d.delta3.push_back(substitute(fox_derivative(p.w_word, p.rho(i)), images));

    return d;
}

WWordReport validate_w_word(const SurgeryPresentation& p) {
    std::vector<GroupWord> images;
    for (int i = 0; i < p.generator_count; ++i) images.push_back(GroupWord::generator(i));
    for (int j = 0; j < p.generator_count; ++j) images.push_back(p.relators[static_cast<size_t>(j)]);
    GroupWord reduced = substitute(p.w_word, images);
    return {reduced.empty(), reduced.length(), reduced.to_string()};
}

std::string SurgeryPresentation::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family);
    j["parameter"] = parameter;
    j["generators"] = generator_count;
    auto rel = nlohmann::json::array();
    for (const auto& r : relators) rel.push_back(r.to_string());
    j["relators"] = rel;
    j["w_word"] = w_word.to_string();
    return j.dump();
}

}  // namespace torsionlab
