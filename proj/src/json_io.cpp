#include "ncdegen/json_io.hpp"

#include "ncdegen/surfaces.hpp"

#include <json.hpp>

namespace ncdegen::json_io {

using nlohmann::ordered_json;

std::string incidence_scheme_json(const incidence::Scheme& scheme) {
    ordered_json j;
    j["components"] = ordered_json::array();
    for (const auto& c : scheme.components()) j["components"].push_back(c.label());
    j["curves"] = ordered_json::array();
    for (const auto& c : scheme.curves()) {
        const auto sides = incidence::curve_sides(c);
        ordered_json jc;
        jc["id"] = c.label();
        jc["components"] = {sides[0].label(), sides[1].label()};
        ordered_json pts = ordered_json::array();
        for (const auto& p : incidence::points_on_curve(c)) pts.push_back(p.label());
        jc["points"] = pts;
        j["curves"].push_back(jc);
    }
    j["triple_points"] = ordered_json::array();
    for (const auto& p : scheme.points()) {
        ordered_json jp;
        jp["id"] = p.label();
        const auto comps = incidence::point_components(p);
        jp["components"] = {comps[0].label(), comps[1].label(), comps[2].label()};
        ordered_json cs = ordered_json::array();
        auto curves = incidence::point_curves(p);
        std::sort(curves.begin(), curves.end());
        for (const auto& c : curves) cs.push_back(c.label());
        jp["curves"] = cs;
        j["triple_points"].push_back(jp);
    }
    j["distinguished_lines"] = ordered_json::array();
    for (const auto& l : incidence::enumerate_distinguished_lines())
        j["distinguished_lines"].push_back(l.label());
    return j.dump(2) + "\n";
}

std::string complex_json(const complexes::SimplicialComplex2& c) {
    ordered_json j;
    j["vertices"] = c.vertices();
    j["edges"] = ordered_json::array();
    for (const auto& e : c.edges()) j["edges"].push_back({e[0], e[1]});
    j["triangles"] = ordered_json::array();
    for (const auto& t : c.triangles()) j["triangles"].push_back({t[0], t[1], t[2]});
    return j.dump(2) + "\n";
}

std::string surfaces_json() {
    ordered_json j = ordered_json::array();
    for (const auto& comp : incidence::enumerate_components()) {
        const auto lattice = surfaces::picard_lattice(comp);
        ordered_json js;
        js["component"] = comp.label();
        js["basis"] = lattice.basis_labels;
        ordered_json diag = ordered_json::array();
        const auto gram = lattice.gram();
        for (std::size_t i = 0; i < lattice.rank(); ++i)
            diag.push_back(static_cast<long>(gram.at(i, i)));
        js["gram_diagonal"] = diag;
        js["curves"] = ordered_json::array();
        for (const auto& curve : incidence::curves_on_component(comp)) {
            ordered_json jc;
            jc["id"] = curve.label();
            ordered_json coeffs = ordered_json::array();
            for (const auto& x : surfaces::curve_class(comp, curve).coeffs)
                coeffs.push_back(static_cast<long>(x));
            jc["class"] = coeffs;
            js["curves"].push_back(jc);
        }
        j.push_back(js);
    }
    return j.dump(2) + "\n";
}

namespace {
ordered_json presentation_node(const complexes::GroupPresentation& p) {
    ordered_json j;
    j["generators"] = p.generators;
    j["relators"] = p.relators;
    return j;
}
}  // namespace

std::string presentation_json(const complexes::GroupPresentation& p) {
    return presentation_node(p).dump(2) + "\n";
}

std::string presentations_json(const incidence::Scheme& scheme) {
    ordered_json j;
    j["m05"] = presentation_node(complexes::m05_presentation());
    j["pi1_lambda"] = presentation_node(complexes::pi1_presentation(complexes::build_dual_complex(scheme)));
    return j.dump(2) + "\n";
}

}  // namespace ncdegen::json_io
