#ifndef TAUCAT_TCMC_HPP
#define TAUCAT_TCMC_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "taucat/taured.hpp"

namespace taucat {

// A finite category presented by object keys, labeled morphisms, and a total
// composition table on composable pairs.
struct CategoryGraph {
    struct Object {
        std::string key;                 // semibrick key of the wide subcategory
        SuppTauRigidPair canonical;      // canonical defining pair / reducer
        std::size_t rank = 0;            // rank of the wide subcategory
    };
    struct Morphism {
        std::size_t src = 0;
        std::size_t tgt = 0;
        WidePair label;  // support tau-rigid pair in the source subcategory
        bool identity = false;
    };

    std::vector<Object> objects;
    std::vector<Morphism> morphisms;
    std::vector<std::size_t> identities;                       // per object
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> composition;

    long find_object(const std::string& key) const {
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (objects[i].key == key) return static_cast<long>(i);
        return -1;
    }

    long find_morphism(std::size_t src, const WidePair& label) const {
        for (std::size_t i = 0; i < morphisms.size(); ++i)
            if (morphisms[i].src == src && morphisms[i].label == label)
                return static_cast<long>(i);
        return -1;
    }

    std::size_t out_degree(std::size_t obj) const {
        std::size_t n = 0;
        for (const auto& m : morphisms)
            if (m.src == obj) ++n;
        return n;
    }

    // Category axioms: identities behave neutrally, composition closes with
    // matching endpoints, associativity on all composable triples.
    void validate() const {
        for (std::size_t i = 0; i < morphisms.size(); ++i)
            for (std::size_t j = 0; j < morphisms.size(); ++j) {
                if (morphisms[i].tgt != morphisms[j].src) continue;
                auto it = composition.find({i, j});
                if (it == composition.end())
                    throw validation_error("composition table has a hole");
                const auto& c = morphisms[it->second];
                if (c.src != morphisms[i].src || c.tgt != morphisms[j].tgt)
                    throw validation_error("composite has wrong endpoints");
            }
        for (std::size_t o = 0; o < objects.size(); ++o) {
            const auto& id = morphisms[identities[o]];
            if (id.src != o || id.tgt != o || !id.identity)
                throw validation_error("broken identity morphism");
        }
        for (std::size_t i = 0; i < morphisms.size(); ++i) {
            if (composition.at({identities[morphisms[i].src], i}) != i ||
                composition.at({i, identities[morphisms[i].tgt]}) != i)
                throw validation_error("identity law fails");
        }
    }
};

namespace detail {

// Ambient semibrick key of the tau-perpendicular category of `cp` taken
// inside W, transported back to ambient registry ids.
inline std::string inner_key(const WidePtr& w, const SuppTauRigidPair& cp,
                             std::vector<std::size_t>* out_ids = nullptr) {
    auto inner = j_perp(w->c_context(), cp);
    std::vector<std::size_t> ids;
    for (auto cid : inner->semibrick_ids()) ids.push_back(w->g_indec(cid));
    std::sort(ids.begin(), ids.end());
    std::vector<std::string> names;
    for (auto id : ids) names.push_back(w->ambient()->name(id));
    std::sort(names.begin(), names.end());
    std::string key = "{";
    for (std::size_t k = 0; k < names.size(); ++k) key += (k ? "," : "") + names[k];
    key += "}";
    if (out_ids) *out_ids = ids;
    return key;
}

}  // namespace detail

// --- module-theoretic construction --------------------------------------------------

inline CategoryGraph build_module_side(const CtxPtr& ctx, std::size_t cap = 512) {
    CategoryGraph g;
    auto pairs = enumerate_pairs(ctx, cap);

    // Objects: distinct semibrick keys over all pairs, with the first
    // defining pair (in sorted order) as the canonical one.
    std::map<std::string, std::size_t> by_key;
    std::vector<WidePtr> wides;
    for (const auto& p : pairs) {
        auto w = j_perp(ctx, p);
        std::string key = w->semibrick_key();
        if (by_key.count(key)) continue;
        by_key[key] = g.objects.size();
        g.objects.push_back({key, p, w->indec_ids().size() ? w->c_algebra()->n_vertices() : 0});
        g.objects.back().rank = w->c_algebra()->n_vertices();
        wides.push_back(w);
    }

    // Morphisms out of each object: support tau-rigid pairs over C_W.
    for (std::size_t o = 0; o < g.objects.size(); ++o) {
        const auto& w = wides[o];
        for (const auto& cp : enumerate_pairs(w->c_context(), cap)) {
            std::string tkey = detail::inner_key(w, cp);
            long t = g.find_object(tkey);
            if (t < 0) throw validation_error("tcmc: target wide subcategory not among objects");
            CategoryGraph::Morphism m;
            m.src = o;
            m.tgt = static_cast<std::size_t>(t);
            m.label = w->wide_pair_of(cp);
            m.identity = cp.rank() == 0;
            if (m.identity) g.identities.resize(std::max(g.identities.size(), o + 1));
            g.morphisms.push_back(std::move(m));
        }
    }
    g.identities.assign(g.objects.size(), 0);
    for (std::size_t i = 0; i < g.morphisms.size(); ++i)
        if (g.morphisms[i].identity) g.identities[g.morphisms[i].src] = i;

    // Composition by the E-inverse rule, computed over C of the source.
    for (std::size_t i = 0; i < g.morphisms.size(); ++i) {
        for (std::size_t j = 0; j < g.morphisms.size(); ++j) {
            if (g.morphisms[i].tgt != g.morphisms[j].src) continue;
            const auto& w1 = wides[g.morphisms[i].src];
            auto cp1 = w1->c_pair_of(g.morphisms[i].label);
            // W2 = J_{W1}(label_i) sits inside W1; the second slot of label_j
            // holds Ext-projectives of W2, so transport entrywise.
            auto target = w1->c_wide_pair_of(g.morphisms[j].label);
            if (!cp1 || !target)
                throw validation_error("tcmc: morphism label failed to transport");
            auto composite_c = e_inverse(w1->c_context(), *cp1, *target);
            WidePair label = w1->wide_pair_of(composite_c);
            long m = g.find_morphism(g.morphisms[i].src, label);
            if (m < 0) throw validation_error("tcmc: composite is not a registered morphism");
            if (g.morphisms[m].tgt != g.morphisms[j].tgt)
                throw validation_error("tcmc: composite has wrong target");
            g.composition[{i, j}] = static_cast<std::size_t>(m);
        }
    }
    g.validate();
    return g;
}

// --- silting-theoretic construction -------------------------------------------------

// Objects are classes of two-term presilting objects under equality of the
// perpendicular keys; morphisms out of a class are the presilting objects of
// the reduced category, recorded by ambient complements of the canonical
// reducer. Composition lifts through phi and re-reduces.
inline CategoryGraph build_silting_side(const CtxPtr& ctx, std::size_t cap = 512) {
    CategoryGraph g;
    auto pairs = enumerate_pairs(ctx, cap);

    std::map<std::string, std::size_t> by_key;
    std::vector<SuppTauRigidPair> reducers;      // canonical reducer per object
    std::vector<ProjComplex> reducer_cplx;
    for (const auto& p : pairs) {
        auto w = j_perp(ctx, p);
        std::string key = w->semibrick_key();
        if (by_key.count(key)) continue;
        by_key[key] = g.objects.size();
        g.objects.push_back({key, p, w->c_algebra()->n_vertices()});
        reducers.push_back(p);
        reducer_cplx.push_back(h_inverse(ctx, p));
    }

    // Morphisms out of the class of P: ambient presilting X containing P;
    // the label is the reduced object phi_P(X), identified through H'.
    struct SiltMorphism {
        SuppTauRigidPair complement;  // ambient complement of the reducer
    };
    std::vector<SiltMorphism> silt_data;
    for (std::size_t o = 0; o < g.objects.size(); ++o) {
        for (const auto& x : pairs) {
            if (!x.contains(reducers[o])) continue;
            SuppTauRigidPair complement = x.complement_of(reducers[o]);
            // Target: class of the full pair.
            auto wt = j_perp(ctx, x);
            long t = g.find_object(wt->semibrick_key());
            if (t < 0) throw validation_error("silting tcmc: missing target class");
            CategoryGraph::Morphism m;
            m.src = o;
            m.tgt = static_cast<std::size_t>(t);
            m.label = h_prime(ctx, reducer_cplx[o], h_inverse(ctx, complement));
            m.identity = complement.rank() == 0;
            g.morphisms.push_back(std::move(m));
            silt_data.push_back({complement});
        }
    }
    g.identities.assign(g.objects.size(), 0);
    for (std::size_t i = 0; i < g.morphisms.size(); ++i)
        if (g.morphisms[i].identity) g.identities[g.morphisms[i].src] = i;

    // Composition: lift the second morphism through the arrival presentation
    // (re-present its reduced label relative to the arrival reducer), then
    // join the complements.
    for (std::size_t i = 0; i < g.morphisms.size(); ++i) {
        for (std::size_t j = 0; j < g.morphisms.size(); ++j) {
            if (g.morphisms[i].tgt != g.morphisms[j].src) continue;
            const auto& src_red = reducers[g.morphisms[i].src];
            SuppTauRigidPair arrival = src_red.merged_with(silt_data[i].complement);
            ProjComplex arrival_cplx = h_inverse(ctx, arrival);
            // The label of m_j relative to the canonical reducer of its source.
            const WidePair& label_j = g.morphisms[j].label;
            // Re-present: find the complement c' of the arrival pair whose
            // reduced H'-image matches label_j.
            long found = -1;
            SuppTauRigidPair cprime;
            for (const auto& x : pairs) {
                if (!x.contains(arrival)) continue;
                SuppTauRigidPair c = x.complement_of(arrival);
                if (c.rank() != label_j.rank()) continue;
                if (h_prime(ctx, arrival_cplx, h_inverse(ctx, c)) == label_j) {
                    if (found >= 0)
                        throw validation_error("silting tcmc: ambiguous lift of a morphism");
                    found = 1;
                    cprime = c;
                }
            }
            if (found < 0) throw validation_error("silting tcmc: no lift of a morphism");
            SuppTauRigidPair joined = silt_data[i].complement.merged_with(cprime);
            // Locate the composite morphism out of the source class.
            long m = -1;
            for (std::size_t k = 0; k < g.morphisms.size(); ++k)
                if (g.morphisms[k].src == g.morphisms[i].src && silt_data[k].complement == joined)
                    m = static_cast<long>(k);
            if (m < 0) throw validation_error("silting tcmc: composite complement unregistered");
            if (g.morphisms[m].tgt != g.morphisms[j].tgt)
                throw validation_error("silting tcmc: composite has wrong target");
            g.composition[{i, j}] = static_cast<std::size_t>(m);
        }
    }
    g.validate();
    return g;
}

// --- verification reports ------------------------------------------------------------

struct AssociativityReport {
    std::size_t triples = 0;
    std::size_t failures = 0;
    bool pass() const { return failures == 0; }
};

inline AssociativityReport check_associativity(const CategoryGraph& g) {
    AssociativityReport r;
    for (std::size_t i = 0; i < g.morphisms.size(); ++i)
        for (std::size_t j = 0; j < g.morphisms.size(); ++j) {
            if (g.morphisms[i].tgt != g.morphisms[j].src) continue;
            for (std::size_t k = 0; k < g.morphisms.size(); ++k) {
                if (g.morphisms[j].tgt != g.morphisms[k].src) continue;
                ++r.triples;
                std::size_t left = g.composition.at({g.composition.at({i, j}), k});
                std::size_t right = g.composition.at({i, g.composition.at({j, k})});
                if (left != right) ++r.failures;
            }
        }
    return r;
}

struct EquivalenceReport {
    bool objects_bijective = false;
    bool morphisms_bijective = false;
    bool functorial = false;
    std::vector<std::string> mismatches;
    bool pass() const { return objects_bijective && morphisms_bijective && functorial; }
};

// Functor: silting-side object -> module-side object with equal key;
// silting-side morphism -> module-side morphism with equal H'-label.
inline EquivalenceReport check_equivalence(const CategoryGraph& module_side,
                                           const CategoryGraph& silting_side) {
    EquivalenceReport r;
    r.objects_bijective = module_side.objects.size() == silting_side.objects.size();
    std::vector<long> obj_map(silting_side.objects.size(), -1);
    for (std::size_t o = 0; o < silting_side.objects.size(); ++o) {
        obj_map[o] = module_side.find_object(silting_side.objects[o].key);
        if (obj_map[o] < 0) {
            r.objects_bijective = false;
            r.mismatches.push_back("unmatched object key " + silting_side.objects[o].key);
        }
    }
    if (!r.objects_bijective) return r;

    std::vector<long> mor_map(silting_side.morphisms.size(), -1);
    r.morphisms_bijective = module_side.morphisms.size() == silting_side.morphisms.size();
    for (std::size_t i = 0; i < silting_side.morphisms.size(); ++i) {
        const auto& m = silting_side.morphisms[i];
        mor_map[i] = module_side.find_morphism(static_cast<std::size_t>(obj_map[m.src]), m.label);
        if (mor_map[i] < 0 ||
            module_side.morphisms[mor_map[i]].tgt != static_cast<std::size_t>(obj_map[m.tgt])) {
            r.morphisms_bijective = false;
            r.mismatches.push_back("unmatched morphism label");
        }
    }
    if (!r.morphisms_bijective) return r;

    r.functorial = true;
    for (const auto& [pair, comp] : silting_side.composition) {
        std::size_t i = mor_map[pair.first];
        std::size_t j = mor_map[pair.second];
        if (module_side.composition.at({i, j}) != static_cast<std::size_t>(mor_map[comp])) {
            r.functorial = false;
            r.mismatches.push_back("composition not preserved");
        }
    }
    return r;
}

// --- signed sequences ------------------------------------------------------------------

struct SequenceEntry {
    std::size_t ambient_id;  // ambient registry id of the module datum
    bool shifted;            // shifted relative projective?
};

using SignedSequence = std::vector<SequenceEntry>;

// Complex side: entries are ambient indecomposable pairs; position k is an
// indecomposable presilting object of the category reduced by the suffix.
struct ComplexSequence {
    std::vector<SuppTauRigidPair> entries;  // prefix first; the last entry is chosen first
};

inline std::vector<ComplexSequence> enumerate_presilting_sequences(const CtxPtr& ctx,
                                                                   std::size_t t,
                                                                   std::size_t cap = 512) {
    auto pairs = enumerate_pairs(ctx, cap);
    std::vector<SuppTauRigidPair> indec;
    for (const auto& p : pairs)
        if (p.rank() == 1) indec.push_back(p);

    std::vector<ComplexSequence> out;
    // Recursive choice of X_t first; the prefix lives in the reduction.
    std::function<void(SuppTauRigidPair, std::size_t, std::vector<SuppTauRigidPair>&)> rec =
        [&](SuppTauRigidPair suffix, std::size_t remaining,
            std::vector<SuppTauRigidPair>& acc) {
            if (remaining == 0) {
                ComplexSequence seq;
                seq.entries.assign(acc.rbegin(), acc.rend());
                out.push_back(std::move(seq));
                return;
            }
            for (const auto& e : indec) {
                if (suffix.contains(e)) continue;
                SuppTauRigidPair joined = suffix.merged_with(e);
                if (!is_supp_tau_rigid(ctx, joined)) continue;
                acc.push_back(e);
                rec(joined, remaining - 1, acc);
                acc.pop_back();
            }
        };
    std::vector<SuppTauRigidPair> acc;
    rec(SuppTauRigidPair{}, t, acc);
    return out;
}

// Module side: recursive enumeration through iterated tau-perpendicular
// categories, with entries transported back to ambient registry ids.
inline std::vector<SignedSequence> enumerate_signed_tau_exceptional(const CtxPtr& ctx,
                                                                    std::size_t t,
                                                                    std::size_t cap = 512) {
    std::vector<SignedSequence> out;
    std::function<void(const CtxPtr&, std::function<std::size_t(std::size_t)>, std::size_t,
                       SignedSequence&)>
        rec = [&](const CtxPtr& cur, std::function<std::size_t(std::size_t)> to_ambient,
                  std::size_t remaining, SignedSequence& acc) {
            if (remaining == 0) {
                SignedSequence seq(acc.rbegin(), acc.rend());
                out.push_back(std::move(seq));
                return;
            }
            for (const auto& p : enumerate_pairs(cur, cap)) {
                if (p.rank() != 1) continue;
                SequenceEntry entry;
                if (!p.module_ids.empty()) {
                    entry = {to_ambient(p.module_ids[0]), false};
                } else {
                    entry = {to_ambient(cur->register_indec(cur->projective(p.proj_verts[0]))),
                             true};
                }
                auto w = j_perp(cur, p);
                auto deeper = [to_ambient, w](std::size_t cid) {
                    return to_ambient(w->g_indec(cid));
                };
                acc.push_back(entry);
                rec(w->c_context(), deeper, remaining - 1, acc);
                acc.pop_back();
            }
        };
    SignedSequence acc;
    rec(ctx, [](std::size_t id) { return id; }, t, acc);
    return out;
}

// Entrywise H on a complex-side sequence: each entry is read in its owning
// reduced category via H' at the suffix reducer.
inline SignedSequence sequence_h_image(const CtxPtr& ctx, const ComplexSequence& seq) {
    SignedSequence out(seq.entries.size(), SequenceEntry{});
    SuppTauRigidPair suffix;
    for (std::size_t k = seq.entries.size(); k-- > 0;) {
        const auto& e = seq.entries[k];
        ProjComplex reducer = h_inverse(ctx, suffix);
        WidePair img = h_prime(ctx, reducer, h_inverse(ctx, e));
        if (img.rank() != 1)
            throw validation_error("sequence entry image is not indecomposable");
        if (!img.module_ids.empty())
            out[k] = {img.module_ids[0], false};
        else
            out[k] = {img.relproj_ids[0], true};
        suffix = suffix.merged_with(e);
    }
    return out;
}

struct SequenceBijectionReport {
    std::size_t complex_count = 0;
    std::size_t module_count = 0;
    bool bijective = false;
};

inline SequenceBijectionReport check_sequence_bijection(const CtxPtr& ctx, std::size_t t,
                                                        std::size_t cap = 512) {
    auto complex_side = enumerate_presilting_sequences(ctx, t, cap);
    auto module_side = enumerate_signed_tau_exceptional(ctx, t, cap);
    auto canon = [](const SignedSequence& s) {
        std::vector<std::pair<std::size_t, bool>> v;
        for (const auto& e : s) v.emplace_back(e.ambient_id, e.shifted);
        return v;
    };
    std::multiset<std::vector<std::pair<std::size_t, bool>>> lhs, rhs;
    for (const auto& seq : complex_side) lhs.insert(canon(sequence_h_image(ctx, seq)));
    for (const auto& seq : module_side) rhs.insert(canon(seq));
    SequenceBijectionReport r;
    r.complex_count = complex_side.size();
    r.module_count = module_side.size();
    r.bijective = lhs == rhs && complex_side.size() == module_side.size();
    return r;
}

// Honest perpendicular-category representatives of the entries, lifted
// through the reduction chain by the truncation tower.
inline std::vector<ProjComplex> sequence_k0_lifts(const CtxPtr& ctx, const ComplexSequence& seq) {
    std::vector<ProjComplex> lifts(seq.entries.size(), ProjComplex::zero(ctx->algebra()));
    SuppTauRigidPair suffix;
    for (std::size_t k = seq.entries.size(); k-- > 0;) {
        auto reducer_adds = presilting_summands(ctx, suffix);
        lifts[k] = sigma_gt0(reducer_adds, h_inverse(ctx, seq.entries[k]));
        suffix = suffix.merged_with(seq.entries[k]);
    }
    return lifts;
}

inline bool check_k0_independence(const CtxPtr& ctx, const ComplexSequence& seq) {
    auto lifts = sequence_k0_lifts(ctx, seq);
    QMat m(lifts.size(), ctx->algebra()->n_vertices());
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        auto gv = g_vector(lifts[i]);
        for (std::size_t j = 0; j < gv.size(); ++j) m.at(i, j) = gv[j];
    }
    if (rank(m) != lifts.size()) return false;
    if (lifts.size() == ctx->algebra()->n_vertices()) {
        Rat det = determinant(m);
        if (det != 1 && det != -1) return false;  // full-length: integer basis
    }
    return true;
}

inline bool check_euler_triangularity(const CtxPtr& ctx, const ComplexSequence& seq) {
    auto lifts = sequence_k0_lifts(ctx, seq);
    for (std::size_t i = 0; i < lifts.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (euler_form(lifts[i], lifts[j]) != 0) return false;
    return true;
}

}  // namespace taucat

#endif
