#include <map>
#include <sstream>

#include "aralg/ar.hpp"
#include "aralg/errors.hpp"

namespace aralg {

namespace {

// Preimage rows: s with s * m = t.
Matrix lift(const Matrix& t, const Matrix& m) {
    auto s = solve_factorization(t, m);
    if (!s) throw Error("lift does not exist");
    return *s;
}

std::vector<std::size_t> concat(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> c = a;
    c.insert(c.end(), b.begin(), b.end());
    return c;
}

}  // namespace

Module a_functor(const Module& x) {
    if (x.dim() == 0) return x;
    ProjectivePresentation p = minimal_projective_presentation(x);
    return kernel(injective_grid_hom(x.algebra(), p.d1)).module;
}

bool SixTermReport::exact() const {
    for (bool b : exact_at)
        if (!b) return false;
    return alternating_sum == 0;
}

SixTermReport six_term_sequence(const ShortExactSequence& s) {
    const AlgebraPtr& a = s.M.algebra();
    const Field& f = a->field();
    ProjectivePresentation pl = minimal_projective_presentation(s.L), pn = minimal_projective_presentation(s.N);
    const Module &PL0 = pl.epsilon.source, &PN0 = pn.epsilon.source;
    const Module& PN1 = pn.delta1.source;
    // lift eps_N through pi, then the correction theta : PN1 -> PL0
    HomSpace hp = hom_space(PN0, s.M);
    std::vector<Vec> rows;
    for (const auto& b : hp.basis()) rows.push_back((b * s.pi.mat).flatten());
    Matrix et = hp.dim() ? hp.combination(lift(Matrix::row_vector(f, pn.epsilon.mat.flatten()),
                                               Matrix::from_rows(f, PN0.dim() * s.N.dim(), rows))
                                              .row_vec(0))
                               .mat
                         : Matrix(f, PN0.dim(), s.M.dim());
    Matrix w = lift(-(pn.delta1.mat * et), s.iota.mat);  // PN1 -> L
    HomSpace ht = hom_space(PN1, PL0);
    rows.clear();
    for (const auto& b : ht.basis()) rows.push_back((b * pl.epsilon.mat).flatten());
    Matrix theta = ht.dim() ? ht.combination(lift(Matrix::row_vector(f, w.flatten()),
                                                  Matrix::from_rows(f, PN1.dim() * s.L.dim(), rows))
                                                 .row_vec(0))
                                  .mat
                            : Matrix(f, PN1.dim(), PL0.dim());

    Module nl1 = injective_module(a, pl.p1), nl0 = injective_module(a, pl.p0);
    Module nn1 = injective_module(a, pn.p1), nn0 = injective_module(a, pn.p0);
    Matrix ndl = injective_grid_hom(a, pl.d1).mat, ndn = injective_grid_hom(a, pn.d1).mat;
    Matrix nth = injective_grid_hom(a, grid_of_projective_hom(*a, pn.p1, pl.p0, theta)).mat;
    Module nm1 = injective_module(a, concat(pl.p1, pn.p1)), nm0 = injective_module(a, concat(pl.p0, pn.p0));
    Matrix ndm(f, nm1.dim(), nm0.dim());
    ndm.set_block(0, 0, ndl);
    ndm.set_block(nl1.dim(), 0, nth);
    ndm.set_block(nl1.dim(), nl0.dim(), ndn);
    ModuleHom hl(nl1, nl0, ndl), hm(nm1, nm0, ndm), hn(nn1, nn0, ndn);
    if (!hm.is_hom()) throw Error("horseshoe differential is not a map");

    SubResult kl = kernel(hl), km = kernel(hm), kn = kernel(hn);
    SubResult cl = cokernel(hl), cm = cokernel(hm), cn = cokernel(hn);
    auto inc = [&](std::size_t r, std::size_t c, std::size_t at) {
        Matrix m(f, r, c);
        for (std::size_t k = 0; k < r; ++k) m.at(k, at + k) = 1;
        return m;
    };
    auto prj = [&](std::size_t r, std::size_t c, std::size_t at) {
        Matrix m(f, r, c);
        for (std::size_t k = 0; k < c; ++k) m.at(at + k, k) = 1;
        return m;
    };
    SixTermReport rep;
    rep.terms = {kl.module, km.module, kn.module, cl.module, cm.module, cn.module};
    Matrix m0 = lift(kl.map.mat * inc(nl1.dim(), nm1.dim(), 0), km.map.mat);
    Matrix m1 = lift(km.map.mat * prj(nm1.dim(), nn1.dim(), nl1.dim()), kn.map.mat);
    Matrix m2 = kn.map.mat * nth * cl.map.mat;
    Matrix sl = lift(Matrix::identity(f, cl.module.dim()), cl.map.mat);
    Matrix sm = lift(Matrix::identity(f, cm.module.dim()), cm.map.mat);
    Matrix m3 = sl * inc(nl0.dim(), nm0.dim(), 0) * cm.map.mat;
    Matrix m4 = sm * prj(nm0.dim(), nn0.dim(), nl0.dim()) * cn.map.mat;
    rep.maps = {m0, m1, m2, m3, m4};
    for (std::size_t i = 0; i < rep.maps.size(); ++i)
        if (!ModuleHom(rep.terms[i], rep.terms[i + 1], rep.maps[i]).is_hom()) throw Error("six-term map is not a module map");
    // exactness at each term: kernel of outgoing = image of incoming
    for (std::size_t i = 0; i < 6; ++i) {
        std::size_t in_rank = i == 0 ? 0 : rep.maps[i - 1].rank();
        std::size_t out_rank = i == 5 ? 0 : rep.maps[i].rank();
        bool comp = i == 0 || i == 5 || (rep.maps[i - 1] * rep.maps[i]).is_zero();
        rep.exact_at.push_back(comp && rep.terms[i].dim() - out_rank == in_rank);
    }
    long sum = 0;
    for (std::size_t i = 0; i < 6; ++i) sum += (i % 2 == 0 ? 1 : -1) * static_cast<long>(rep.terms[i].dim());
    rep.alternating_sum = sum;
    return rep;
}

QuiverFragment ar_quiver_fragment(const AlgebraPtr& a, const std::vector<Module>& seeds, int steps) {
    QuiverFragment q;
    std::map<std::string, int> counter;
    auto node_of = [&](const Module& m) -> std::size_t {
        for (std::size_t i = 0; i < q.nodes.size(); ++i)
            if (q.nodes[i].module.dim() == m.dim() && is_isomorphic(q.nodes[i].module, m)) return i;
        std::ostringstream os;
        os << "[";
        auto dv = m.dimension_vector();
        for (std::size_t k = 0; k < dv.size(); ++k) os << (k ? "," : "") << dv[k];
        os << "]";
        std::string key = os.str();
        os << "#" << counter[key]++;
        q.nodes.push_back({os.str(), m, is_projective(m)});
        return q.nodes.size() - 1;
    };
    auto add_arrow = [&](std::size_t from, std::size_t to, std::size_t k) {
        for (auto& e : q.arrows)
            if (e.from == from && e.to == to) {
                e.multiplicity = std::max(e.multiplicity, k);
                return;
            }
        q.arrows.push_back({from, to, k});
    };
    std::vector<std::size_t> frontier;
    for (const auto& s : seeds) {
        if (!s.algebra()->same_as(*a)) throw AlgebraMismatch("seed over a different algebra");
        frontier.push_back(node_of(s));
    }
    std::vector<bool> done;
    for (int step = 0; step < steps; ++step) {
        std::vector<std::size_t> next;
        for (std::size_t v : frontier) {
            if (done.size() < q.nodes.size()) done.resize(q.nodes.size(), false);
            if (done[v]) continue;
            done[v] = true;
            const Module m = q.nodes[v].module;
            std::vector<std::size_t> middle;
            if (q.nodes[v].projective) {
                // irreducible maps into P come from the summands of its radical
                Module rad = submodule(m, radical_submodule(m)).module;
                if (rad.dim())
                    for (const auto& s : decompose_module(rad)) middle.push_back(node_of(s.module));
            } else {
                AlmostSplitCertificate c = ar_sequence(m, ArOptions{0, false});
                std::size_t tau = node_of(c.sequence.L);
                q.tau.push_back({v, tau});
                for (const auto& s : decompose_module(c.sequence.M)) middle.push_back(node_of(s.module));
                next.push_back(tau);
                std::map<std::size_t, std::size_t> mult;
                for (std::size_t u : middle) mult[u]++;
                for (auto [u, k] : mult) add_arrow(tau, u, k);
            }
            std::map<std::size_t, std::size_t> mult;
            for (std::size_t u : middle) mult[u]++;
            for (auto [u, k] : mult) {
                add_arrow(u, v, k);
                next.push_back(u);
            }
        }
        frontier = next;
    }
    return q;
}

}  // namespace aralg
