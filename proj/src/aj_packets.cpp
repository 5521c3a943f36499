#include "densitometer/aj_packets.hpp"

#include <algorithm>
#include <map>

namespace dsm::aj {

namespace {

RatVec vec2(long long a, long long b) { return RatVec{Rat(a), Rat(b)}; }

const lie::RootDatum& b2() {
    static const lie::RootDatum rd = lie::build_root_datum(lie::Family::B, 2);
    return rd;
}

std::vector<lie::WeylElement> full_weyl() { return lie::weyl_elements(b2()); }

// Canonical representative of a set of vectors: lexicographically largest.
RatVec lex_max(const std::vector<RatVec>& orbit) {
    return *std::max_element(orbit.begin(), orbit.end());
}

std::vector<RatVec> orbit_reps(const std::vector<RatVec>& directions,
                               const std::vector<lie::WeylElement>& group) {
    std::vector<RatVec> reps;
    std::set<RatVec> seen;
    for (const auto& v : directions) {
        if (seen.count(v)) continue;
        std::vector<RatVec> orbit;
        for (const auto& g : group) {
            RatVec img = g.apply(v);
            if (seen.insert(img).second) orbit.push_back(img);
        }
        if (!orbit.empty()) reps.push_back(lex_max(orbit));
    }
    std::sort(reps.begin(), reps.end(), std::greater<RatVec>());
    return reps;
}

}  // namespace

const char* form_name(FormLabel f) {
    switch (f) {
        case FormLabel::Split: return "split";
        case FormLabel::Hyperbolic: return "hyperbolic";
        case FormLabel::Compact: return "compact";
    }
    return "?";
}

std::vector<RatVec> so5_roots() {
    return {vec2(1, 0),  vec2(-1, 0), vec2(0, 1),  vec2(0, -1),
            vec2(1, 1),  vec2(-1, -1), vec2(1, -1), vec2(-1, 1)};
}

RealForm real_form(FormLabel label) {
    RealForm f;
    f.label = label;
    f.rank_K = 2;
    switch (label) {
        case FormLabel::Split:
            // so(3) x so(2) compact part: root spaces of +-e1 sit in k.
            f.compact_roots = {vec2(1, 0), vec2(-1, 0)};
            break;
        case FormLabel::Hyperbolic:
            // so(4) compact part: +-(e1 +- e2) are compact, short roots are not.
            f.compact_roots = {vec2(1, 1), vec2(-1, -1), vec2(1, -1), vec2(-1, 1)};
            break;
        case FormLabel::Compact:
            f.compact_roots = so5_roots();
            break;
    }
    f.dim_p = static_cast<int>(so5_roots().size() - f.compact_roots.size());
    return f;
}

std::vector<RatVec> RealForm::noncompact_roots() const {
    std::vector<RatVec> out;
    for (const auto& r : so5_roots())
        if (std::find(compact_roots.begin(), compact_roots.end(), r) ==
            compact_roots.end())
            out.push_back(r);
    return out;
}

std::vector<lie::WeylElement> weyl_K(const RealForm& form) {
    std::vector<lie::WeylElement> gens;
    for (const auto& r : form.compact_roots)
        gens.push_back(lie::reflection_in_root(r));
    if (gens.empty()) return {lie::WeylElement::identity(2)};
    return lie::weyl_closure(std::move(gens), 2);
}

std::vector<lie::WeylElement> weyl_levi(arthur::LeviLabel levi) {
    using arthur::LeviLabel;
    switch (levi) {
        case LeviLabel::T:
            return {lie::WeylElement::identity(2)};
        case LeviLabel::M:
            return lie::weyl_closure({lie::reflection_in_root(vec2(0, 1))}, 2);
        case LeviLabel::S:
            return lie::weyl_closure({lie::reflection_in_root(vec2(1, -1))}, 2);
        case LeviLabel::G:
            return full_weyl();
    }
    throw std::logic_error("weyl_levi: bad label");
}

int packet_size(const RealForm& form, arthur::LeviLabel levi) {
    auto wk = weyl_K(form);
    auto wl = weyl_levi(levi);
    std::vector<lie::WeylElement> all = full_weyl();
    std::set<lie::WeylElement> unseen(all.begin(), all.end());
    int cosets = 0;
    while (!unseen.empty()) {
        lie::WeylElement g = *unseen.begin();
        for (const auto& k : wk)
            for (const auto& l : wl) unseen.erase(k.compose(g).compose(l));
        ++cosets;
    }
    return cosets;
}

std::vector<RatVec> theta_parabolic_reps(const RealForm& form,
                                         arthur::LeviLabel levi) {
    using arthur::LeviLabel;
    auto wk = weyl_K(form);
    switch (levi) {
        case LeviLabel::G:
            return {vec2(0, 0)};
        case LeviLabel::M: {
            std::vector<RatVec> dirs = {vec2(1, 0), vec2(-1, 0), vec2(0, 1),
                                        vec2(0, -1)};
            return orbit_reps(dirs, wk);
        }
        case LeviLabel::S: {
            std::vector<RatVec> dirs = {vec2(1, 1), vec2(-1, -1), vec2(1, -1),
                                        vec2(-1, 1)};
            return orbit_reps(dirs, wk);
        }
        case LeviLabel::T: {
            // One regular direction per open chamber.
            std::vector<RatVec> dirs;
            RatVec seed = vec2(2, 1);
            for (const auto& w : full_weyl()) dirs.push_back(w.apply(seed));
            return orbit_reps(dirs, wk);
        }
    }
    throw std::logic_error("theta_parabolic_reps: bad label");
}

namespace {

std::set<int> full_levi_degrees(FormLabel label) {
    // Betti degrees of the compact dual symmetric space; the trivial
    // representation's cohomology is not captured by the {R, d-R} rule.
    switch (label) {
        case FormLabel::Split: return {0, 2, 4, 6};
        case FormLabel::Hyperbolic: return {0, 4};
        case FormLabel::Compact: return {0};
    }
    return {};
}

}  // namespace

PacketReport cohomology_degrees(const RealForm& form, arthur::LeviLabel levi) {
    PacketReport rep;
    rep.form = form.label;
    rep.levi = levi;
    rep.representatives = theta_parabolic_reps(form, levi);
    rep.size = static_cast<int>(rep.representatives.size());

    const auto noncompact = form.noncompact_roots();
    for (const auto& lambda : rep.representatives) {
        bool zero = std::all_of(lambda.begin(), lambda.end(),
                                [](const Rat& c) { return c == Rat(0); });
        if (zero) {
            rep.degree_sets.push_back(full_levi_degrees(form.label));
            continue;
        }
        int r = 0;
        for (const auto& alpha : noncompact)
            if (dot(alpha, lambda) > Rat(0)) ++r;
        rep.degree_sets.push_back({r, form.dim_p - r});
    }
    for (const auto& ds : rep.degree_sets)
        rep.total_dim += static_cast<int>(ds.size());
    return rep;
}

bool total_dim_check(const RealForm& form, arthur::LeviLabel levi) {
    PacketReport rep = cohomology_degrees(form, levi);
    int single_cosets = static_cast<int>(full_weyl().size() / weyl_K(form).size());
    int rank_g = 2;
    int expected = (1 << (rank_g - form.rank_K)) * single_cosets;
    return rep.total_dim == expected;
}

}  // namespace dsm::aj
