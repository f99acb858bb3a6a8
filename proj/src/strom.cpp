#include "nsset/strom.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsset {

namespace {

void require_shape(const StromStructure& s) {
    if (!structural_equal(*s.w.ambient, s.k.target())) throw std::invalid_argument("strom: w not in B");
    if (!structural_equal(s.i.source(), s.k.source()) || !structural_equal(s.i.target(), *s.wset))
        throw std::invalid_argument("strom: i has the wrong shape");
    if (!structural_equal(s.j.source(), *s.wset) || !structural_equal(s.j.target(), s.k.target()))
        throw std::invalid_argument("strom: j has the wrong shape");
    if (!structural_equal(s.r.source(), *s.wset) || !structural_equal(s.r.target(), s.k.source()))
        throw std::invalid_argument("strom: r has the wrong shape");
    if (!structural_equal(*s.eps.prod.base, *s.wset) ||
        !structural_equal(s.eps.map.source(), *s.eps.prod.product) ||
        !structural_equal(s.eps.map.target(), *s.wset))
        throw std::invalid_argument("strom: eps has the wrong shape");
}

}  // namespace

StromReport verify_strom(const StromStructure& s) {
    require_shape(s);
    StromReport report;

    report.eden_embedding = validate_map(s.k) && is_degreewise_injective(s.k) && is_eden(map_image(s.k));

    bool factor = validate_map(s.i) && validate_map(s.j) && is_degreewise_injective(s.j) &&
                  is_abyss(s.w) && map_image(s.j).member == s.w.member &&
                  compose_maps(s.j, s.i) == s.k;
    report.abyss_factorization = factor;

    report.retraction = validate_map(s.r) && compose_maps(s.r, s.i) == SimpMap::identity(s.k.source_ptr());

    bool deform = validate_map(s.eps.map);
    if (deform) {
        deform = compose_maps(s.eps.map, s.eps.prod.inj0) == compose_maps(s.i, s.r) &&
                 compose_maps(s.eps.map, s.eps.prod.inj1) == SimpMap::identity(s.wset);
        if (deform) {
            ProductResult pa = product_with_interval(s.a());
            SimpMap i_times_1 = map_times_interval(s.i, pa, s.eps.prod);
            deform = compose_maps(s.eps.map, i_times_1) == compose_maps(s.i, pa.proj_base);
        }
    }
    report.deformation = deform;
    return report;
}

StromStructure strom_from_barratt_eden(Complex x, const Subcomplex& a) {
    if (!structural_equal(*x, *a.ambient))
        throw std::invalid_argument("strom_from_barratt_eden: subcomplex not in the given complex");
    if (!x->is_nonsingular()) throw std::invalid_argument("strom_from_barratt_eden: ambient must be nonsingular");
    if (!is_eden(a)) throw std::invalid_argument("strom_from_barratt_eden: subset must be an eden");

    BarrattResult bx = barratt(x);
    Materialized ma = materialize(a);
    BarrattResult ba = barratt(ma.complex);
    SimpMap k = nerve_map(sharp_map(ma.inclusion, ba.sharp, bx.sharp), ba.nerve, bx.nerve);

    // W: nondegenerate simplices of X with a face in A.  Since A is an
    // eden, the vertices of any simplex lying in A form a front interval,
    // so membership is "zeroth vertex in A" and the greatest A-face is the
    // front face on that interval.
    int elements = static_cast<int>(bx.sharp.elements.size());
    std::vector<char> in_w(static_cast<size_t>(elements), 0);
    std::vector<int> retract(static_cast<size_t>(elements), -1);  // X#-index of greatest A-face
    for (int e = 0; e < elements; ++e) {
        SimplexId s = bx.sharp.elements[static_cast<size_t>(e)];
        if (!a.contains(x->vertex_of(s, 0))) continue;
        in_w[static_cast<size_t>(e)] = 1;
        int prefix = 0;
        while (prefix + 1 <= s.dim && a.contains(x->vertex_of(s, prefix + 1))) ++prefix;
        std::vector<int> front(static_cast<size_t>(prefix) + 1);
        for (int t = 0; t <= prefix; ++t) front[static_cast<size_t>(t)] = t;
        NormalSimplex face = x->act(s, Operator(s.dim, std::move(front)));
        if (face.is_degenerate()) throw std::logic_error("strom_from_barratt_eden: degenerate front face");
        retract[static_cast<size_t>(e)] = bx.sharp.index_of(face.base);
    }

    Subcomplex w = empty_subcomplex(bx.nerve.complex);
    for (int n = 0; n <= bx.nerve.complex->dim(); ++n)
        for (int idx = 0; idx < bx.nerve.complex->count(n); ++idx) {
            bool all_in = true;
            for (int e : bx.nerve.chain_of({n, idx}))
                if (!in_w[static_cast<size_t>(e)]) all_in = false;
            w.member[static_cast<size_t>(n)][static_cast<size_t>(idx)] = all_in ? 1 : 0;
        }
    Materialized mw = materialize(w);

    // A#-index of an X#-element known to lie in A.
    auto to_a_sharp = [&](int e) {
        SimplexId amb = bx.sharp.elements[static_cast<size_t>(e)];
        SimplexId sub = ma.sub_id(amb);
        if (sub.dim < 0) throw std::logic_error("strom_from_barratt_eden: retract left A");
        return ba.sharp.index_of(sub);
    };
    auto to_w_id = [&](const NormalSimplex& in_bx) {
        SimplexId sub = mw.sub_id(in_bx.base);
        if (sub.dim < 0) throw std::logic_error("strom_from_barratt_eden: chain left W");
        return NormalSimplex{sub, in_bx.degeneracy};
    };

    // i : BA -> W.
    std::vector<std::vector<NormalSimplex>> i_images(static_cast<size_t>(ba.nerve.complex->dim()) + 1);
    for (int n = 0; n <= ba.nerve.complex->dim(); ++n)
        for (int idx = 0; idx < ba.nerve.complex->count(n); ++idx) {
            std::vector<int> chain;
            for (int e : ba.nerve.chain_of({n, idx}))
                chain.push_back(bx.sharp.index_of(ma.inclusion.apply(ba.sharp.elements[static_cast<size_t>(e)]).base));
            i_images[static_cast<size_t>(n)].push_back(to_w_id(nondegenerate(bx.nerve.index_of(chain))));
        }
    SimpMap i(ba.nerve.complex, mw.complex, std::move(i_images));

    // r : W -> BA via the greatest-A-face retraction.
    std::vector<std::vector<NormalSimplex>> r_images(static_cast<size_t>(mw.complex->dim()) + 1);
    for (int n = 0; n <= mw.complex->dim(); ++n)
        for (int idx = 0; idx < mw.complex->count(n); ++idx) {
            SimplexId amb = mw.inclusion.apply(SimplexId{n, idx}).base;
            std::vector<int> weak;
            for (int e : bx.nerve.chain_of(amb)) weak.push_back(to_a_sharp(retract[static_cast<size_t>(e)]));
            r_images[static_cast<size_t>(n)].push_back(ba.nerve.normal_form(weak));
        }
    SimpMap r(mw.complex, ba.nerve.complex, std::move(r_images));

    // eps : W x Delta[1] -> W, the nerve of (w, 0) -> ir(w), (w, 1) -> w.
    ProductResult pw = product_with_interval(mw.complex);
    std::vector<std::vector<NormalSimplex>> e_images(static_cast<size_t>(pw.product->dim()) + 1);
    for (int n = 0; n <= pw.product->dim(); ++n)
        for (const auto& [sw, t] : pw.pairs[static_cast<size_t>(n)]) {
            SimplexId amb = mw.inclusion.apply(sw.base).base;
            const auto& chain = bx.nerve.chain_of(amb);
            std::vector<int> weak;
            weak.reserve(static_cast<size_t>(n) + 1);
            for (int pos = 0; pos <= n; ++pos) {
                int e = chain[static_cast<size_t>(sw.degeneracy(pos))];
                weak.push_back(t(pos) == 0 ? retract[static_cast<size_t>(e)] : e);
            }
            e_images[static_cast<size_t>(n)].push_back(to_w_id(bx.nerve.normal_form(weak)));
        }
    SimpMap eps_map(pw.product, mw.complex, std::move(e_images));

    return {std::move(k), std::move(w), mw.complex, std::move(i), mw.inclusion, std::move(r),
            {std::move(pw), std::move(eps_map)}};
}

StromStructure strom_sd2(Complex x, const Subcomplex& a) {
    if (!structural_equal(*x, *a.ambient))
        throw std::invalid_argument("strom_sd2: subcomplex not in the given complex");
    SdResult sx = sd(x);
    if (!sx.sd->is_nonsingular())
        throw std::invalid_argument("strom_sd2: Sd X must be nonsingular");

    Materialized ma = materialize(a);
    SdResult sa = sd(ma.complex);
    SimpMap sdk = sd_map(ma.inclusion, sa, sx);
    Subcomplex sd_a = map_image(sdk);
    if (!is_eden(sd_a)) throw std::logic_error("strom_sd2: Sd A failed to be an eden in Sd X");
    StromStructure base = strom_from_barratt_eden(sx.sd, sd_a);

    // Transport along the comparison isomorphisms b.
    SdResult sxx = sd(sx.sd);
    SdResult saa = sd(sa.sd);
    SimpMap phi = b_map(sxx);      // Sd^2 X -> B(Sd X)
    SimpMap phi_a = b_map(saa);    // Sd^2 A -> B(Sd A)
    if (!is_isomorphism(phi) || !is_isomorphism(phi_a))
        throw std::logic_error("strom_sd2: comparison map is not an isomorphism");

    // Identify B(Sd A) with the A-object of the base structure through the
    // corestriction of Sd(k) onto its image.
    Materialized msda = materialize(sd_a);
    std::vector<std::vector<NormalSimplex>> chi_images(static_cast<size_t>(sa.sd->dim()) + 1);
    for (int n = 0; n <= sa.sd->dim(); ++n)
        for (int idx = 0; idx < sa.sd->count(n); ++idx) {
            NormalSimplex img = sdk.apply(SimplexId{n, idx});
            chi_images[static_cast<size_t>(n)].push_back({msda.sub_id(img.base), img.degeneracy});
        }
    SimpMap chi(sa.sd, msda.complex, std::move(chi_images));
    BarrattResult b_sa = barratt(sa.sd);
    BarrattResult b_img = barratt(msda.complex);
    SimpMap b_chi = nerve_map(sharp_map(chi, b_sa.sharp, b_img.sharp), b_sa.nerve, b_img.nerve);
    SimpMap phi_a_full = compose_maps(b_chi, phi_a);  // Sd^2 A -> B(image of Sd A)
    if (!is_isomorphism(phi_a_full)) throw std::logic_error("strom_sd2: transported iso failed");

    // Pull the witness back through phi.
    Subcomplex w2 = empty_subcomplex(sxx.sd);
    for (int n = 0; n <= sxx.sd->dim(); ++n)
        for (int idx = 0; idx < sxx.sd->count(n); ++idx)
            w2.member[static_cast<size_t>(n)][static_cast<size_t>(idx)] =
                base.w.contains(phi.apply(SimplexId{n, idx}).base) ? 1 : 0;
    Materialized mw2 = materialize(w2);

    // B(Sd X)-id -> base wset id, from the injective j of the base witness.
    std::vector<std::vector<SimplexId>> to_base_w(static_cast<size_t>(base.b()->dim()) + 1);
    for (int n = 0; n <= base.b()->dim(); ++n)
        to_base_w[static_cast<size_t>(n)].assign(static_cast<size_t>(base.b()->count(n)), SimplexId{-1, -1});
    for (int n = 0; n <= base.wset->dim(); ++n)
        for (int idx = 0; idx < base.wset->count(n); ++idx) {
            SimplexId amb = base.j.apply(SimplexId{n, idx}).base;
            to_base_w[static_cast<size_t>(amb.dim)][static_cast<size_t>(amb.index)] = {n, idx};
        }
    std::vector<std::vector<NormalSimplex>> phiw_images(static_cast<size_t>(mw2.complex->dim()) + 1);
    for (int n = 0; n <= mw2.complex->dim(); ++n)
        for (int idx = 0; idx < mw2.complex->count(n); ++idx) {
            SimplexId in_bsdx = phi.apply(mw2.inclusion.apply(SimplexId{n, idx}).base).base;
            SimplexId sub = to_base_w[static_cast<size_t>(in_bsdx.dim)][static_cast<size_t>(in_bsdx.index)];
            if (sub.dim < 0) throw std::logic_error("strom_sd2: witness pullback left W");
            phiw_images[static_cast<size_t>(n)].push_back(nondegenerate(sub));
        }
    SimpMap phi_w(mw2.complex, base.wset, std::move(phiw_images));
    if (!is_isomorphism(phi_w)) throw std::logic_error("strom_sd2: witness pullback is not an isomorphism");
    SimpMap phi_w_inv = invert_isomorphism(phi_w);

    SimpMap i2 = compose_maps(phi_w_inv, compose_maps(base.i, phi_a_full));
    SimpMap r2 = compose_maps(invert_isomorphism(phi_a_full), compose_maps(base.r, phi_w));
    SimpMap k2 = sd_map(sdk, saa, sxx);
    if (!(compose_maps(mw2.inclusion, i2) == k2))
        throw std::logic_error("strom_sd2: naturality square failed");

    ProductResult pw2 = product_with_interval(mw2.complex);
    SimpMap eps2 = compose_maps(phi_w_inv,
                                compose_maps(base.eps.map, map_times_interval(phi_w, pw2, base.eps.prod)));
    return {std::move(k2), std::move(w2), mw2.complex, std::move(i2), mw2.inclusion, std::move(r2),
            {std::move(pw2), std::move(eps2)}};
}

StromStructure cobase_change_strom(const StromStructure& s, const SimpMap& f) {
    if (!structural_equal(f.source(), *s.a()))
        throw std::invalid_argument("cobase_change_strom: map source must be the Strom source");
    if (!f.target().is_nonsingular())
        throw std::invalid_argument("cobase_change_strom: target must be nonsingular");
    if (!verify_strom(s).all()) throw std::invalid_argument("cobase_change_strom: witness fails verification");
    Complex c = f.target_ptr();

    PushoutResult pw = pushout(s.i, f);
    DesingResult dw = desingularize(pw.apex);
    SimpMap p_w = compose_maps(dw.eta, pw.left);    // W -> What
    SimpMap i_hat = compose_maps(dw.eta, pw.right); // C -> What

    PushoutResult pb = pushout(s.k, f);
    DesingResult db = desingularize(pb.apex);

    SimpMap mid = pushout_induced_map(pw, compose_maps(pb.left, s.j), pb.right);
    SimpMap j_hat = desing_map(mid, dw, db);        // What -> Bhat
    if (!is_degreewise_injective(j_hat))
        throw std::logic_error("cobase_change_strom: What does not embed");

    SimpMap r_hat = factor_through_surjection(
        dw.eta, pushout_induced_map(pw, compose_maps(f, s.r), SimpMap::identity(c)));

    SimpMap k_hat = compose_maps(j_hat, i_hat);
    if (!(k_hat == compose_maps(db.eta, pb.right)))
        throw std::logic_error("cobase_change_strom: legs disagree");

    // The deformation, built on generators by pushing eps forward on the
    // W side and the constant homotopy on the C side, then validated.  A
    // validation failure here would contradict the closure statement, so
    // it is a hard error.
    ProductResult pwhat = product_with_interval(dw.dx);
    // One nondegenerate preimage per What-simplex: the W side wins ties.
    std::vector<std::vector<std::pair<int, SimplexId>>> pre(static_cast<size_t>(dw.dx->dim()) + 1);
    for (int n = 0; n <= dw.dx->dim(); ++n)
        pre[static_cast<size_t>(n)].assign(static_cast<size_t>(dw.dx->count(n)), {-1, SimplexId{-1, -1}});
    auto record = [&](const SimpMap& leg, int origin) {
        for (int m = 0; m <= leg.source().dim(); ++m)
            for (int idx = 0; idx < leg.source().count(m); ++idx) {
                NormalSimplex img = leg.apply(SimplexId{m, idx});
                if (img.is_degenerate()) continue;
                auto& slot = pre[static_cast<size_t>(img.base.dim)][static_cast<size_t>(img.base.index)];
                if (slot.first < 0) slot = {origin, SimplexId{m, idx}};
            }
    };
    record(p_w, 0);
    record(i_hat, 1);
    std::vector<std::vector<NormalSimplex>> e_images(static_cast<size_t>(pwhat.product->dim()) + 1);
    for (int n = 0; n <= pwhat.product->dim(); ++n) {
        for (const auto& [swhat, t] : pwhat.pairs[static_cast<size_t>(n)]) {
            auto [origin, id] = pre[static_cast<size_t>(swhat.base.dim)][static_cast<size_t>(swhat.base.index)];
            if (origin < 0) throw std::logic_error("cobase_change_strom: What simplex has no preimage");
            if (origin == 0) {
                NormalSimplex in_w{id, swhat.degeneracy};
                NormalSimplex moved = s.eps.map.apply(s.eps.prod.pair_normal_form(in_w, t));
                e_images[static_cast<size_t>(n)].push_back(p_w.apply(moved));
            } else {
                e_images[static_cast<size_t>(n)].push_back(i_hat.apply(NormalSimplex{id, swhat.degeneracy}));
            }
        }
    }
    SimpMap eps_hat(pwhat.product, dw.dx, std::move(e_images));
    require_valid(eps_hat, "cobase_change_strom eps");

    Subcomplex w_hat = map_image(j_hat);
    return {std::move(k_hat), std::move(w_hat), dw.dx, std::move(i_hat), std::move(j_hat),
            std::move(r_hat), {std::move(pwhat), std::move(eps_hat)}};
}

bool gluing_isomorphism_check(const StromStructure& s, const SimpMap& f) {
    if (!structural_equal(f.source(), *s.a()))
        throw std::invalid_argument("gluing_isomorphism_check: map source must be the Strom source");
    if (!f.target().is_nonsingular())
        throw std::invalid_argument("gluing_isomorphism_check: target must be nonsingular");
    PushoutResult pw = pushout(s.i, f);
    DesingResult dw = desingularize(pw.apex);
    SimpMap p_w = compose_maps(dw.eta, pw.left);
    PushoutResult lhs = pushout(s.j, p_w);
    DesingResult db = desingularize(pushout(s.k, f).apex);
    if (!lhs.apex->is_nonsingular()) return false;
    return are_isomorphic(lhs.apex, db.dx).has_value();
}

}  // namespace nsset
