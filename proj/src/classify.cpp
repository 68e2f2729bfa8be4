#include "gcg/flats.hpp"
#include "gcg/gcog.hpp"
#include "gcg/smallcancel.hpp"

namespace gcg {

Verdict classify(const GC& gc, const ClassifyOptions& opts)
{
    auto rep = validate(gc);
    if (!rep.ok())
        throw InputError("cannot classify an invalid complex: " + rep.issues.front().message);
    Verdict v;
    v.hugeness = hugeness(gc.poset);
    auto triple = find_proper_triple(gc);

    if (v.hugeness < 6) {
        if (v.hugeness == 5 && !triple) {
            auto c = cat_minus_one_certificate(gc);
            v.kind = c.verdict ? VerdictKind::Hyperbolic : VerdictKind::Inconclusive;
            v.reason = "C5T4";
            v.witness = c.to_json();
        } else if (v.hugeness == 4 && !triple) {
            v.kind = VerdictKind::Inconclusive;
            v.reason = "C4T4";
            v.witness = json{{"note", "C(4)-T(4) data admit flats; no hyperbolicity criterion applies"}};
        } else {
            v.kind = VerdictKind::OutOfTheory;
            v.reason = "NotSixHuge";
            v.witness = check_huge(gc.poset, 6).witness;
        }
        return v;
    }
    if (v.hugeness >= 7) {
        v.kind = VerdictKind::Hyperbolic;
        v.reason = "KHugeAtLeast7";
        return v;
    }
    if (!triple) {
        v.kind = VerdictKind::Hyperbolic;
        v.reason = "NoProperTriple";
        return v;
    }
    v.kind = VerdictKind::Inconclusive;
    v.reason = "ProperTriple";
    v.witness = json{{"proper_triple", triple->to_json(gc)}};
    if (!opts.attempt_flat)
        return v;
    auto cover = recognise_hex_torus(gc);
    if (!cover)
        return v;
    auto patch = build_hex_patch(opts.flat_width, opts.flat_height, &*cover);
    auto lab = label_patch(gc, patch);
    auto ball = develop_ball(gc, patch.required_radius(), flat_focus(lab));
    auto consistent = verify_consistency(gc, patch, lab, &ball);
    auto emb = embed_flat(ball, patch, lab);
    auto shape = emb.certificate.verdict ? check_flat_shape(ball, patch, emb.cells) : Certificate{};
    if (consistent.verdict && emb.certificate.verdict && shape.verdict) {
        v.kind = VerdictKind::FlatFound;
        v.reason = "HexagonalFlat";
        json labels = json::array();
        for (const auto& w : lab.label)
            labels.push_back(word_to_string(gc, w));
        v.witness["flat"] = {{"patch", patch.to_json(&gc)},
                             {"labels", labels},
                             {"cells", emb.cells},
                             {"ball_radius", ball.radius()},
                             {"embedding", emb.certificate.to_json()}};
    } else {
        v.witness["flat_attempt"] = {{"consistency", consistent.to_json()}, {"embedding", emb.certificate.to_json()}};
    }
    return v;
}

}  // namespace gcg
