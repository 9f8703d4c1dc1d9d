#include "preab/corpus.hpp"

#include <algorithm>

#include "preab/instances.hpp"

namespace preab {

namespace {

Morphism vectq_morphism(std::size_t tgt, std::size_t src, const RatMatrix& m) {
    return make_matrix_morphism("vectq", vect_obj(src), vect_obj(tgt), m);
}

void all_sign_matrices(std::size_t rows, std::size_t cols, std::vector<Morphism>& out) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < rows * cols; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        RatMatrix m(rows, cols);
        std::size_t c = code;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                m.at(i, j) = static_cast<long>(c % 3) - 1;
                c /= 3;
            }
        out.push_back(vectq_morphism(rows, cols, m));
    }
}

// ---- pairvect fixtures ---------------------------------------------------

ObjectPayload pair_full(std::size_t n) { return pair_obj(n, RatMatrix::identity(n)); }
ObjectPayload pair_trivial(std::size_t n) { return pair_obj(n, RatMatrix(n, 0)); }

ObjectPayload pair_span_e1() {
    RatMatrix b(2, 1);
    b.at(0, 0) = 1;
    return pair_obj(2, b);
}

std::vector<Morphism> curated_pair_like(const std::string& instance) {
    std::vector<Morphism> out;
    const ObjectPayload zero = pair_trivial(0);
    const ObjectPayload a = pair_trivial(1);   // (0 <= Q)
    const ObjectPayload b = pair_full(1);      // (Q <= Q)
    const ObjectPayload c2 = pair_trivial(2);  // (0 <= Q^2)
    const ObjectPayload d2 = pair_span_e1();   // (span e1 <= Q^2)
    const ObjectPayload e2 = pair_full(2);     // (Q^2 <= Q^2)

    auto mk = [&](const ObjectPayload& s, const ObjectPayload& t, const RatMatrix& m) {
        out.push_back(make_matrix_morphism(instance, s, t, m));
    };

    // The monic+epic non-isomorphism witness: identity on the ambient line.
    mk(a, b, RatMatrix{{1}});
    // Inclusion (0 <= Q) -> (0 <= Q^2) via the first coordinate.
    mk(a, c2, RatMatrix{{1}, {0}});
    // Genuine quotient arrows (subspace mapped onto subspace).
    mk(d2, b, RatMatrix{{1, 0}});
    mk(e2, b, RatMatrix{{1, 1}});
    // Projection killing the subspace (epic, target subspace full).
    mk(d2, b, RatMatrix{{0, 1}});
    // Projection onto a trivial-subspace line.
    mk(d2, a, RatMatrix{{0, 1}});
    // Subspace-preserving inclusion.
    mk(b, d2, RatMatrix{{1}, {0}});
    // Automorphism preserving span e1.
    mk(d2, d2, RatMatrix{{2, 0}, {0, 3}});
    // Nilpotent on (0 <= Q^2).
    mk(c2, c2, RatMatrix{{0, 1}, {0, 0}});
    // Scaling iso on (Q <= Q).
    mk(b, b, RatMatrix{{2}});
    // Zero maps, identities, zero-object arrows.
    mk(b, a, RatMatrix{{0}});
    mk(a, a, RatMatrix{{1}});
    mk(b, b, RatMatrix{{1}});
    mk(d2, d2, RatMatrix{{1, 0}, {0, 1}});
    mk(e2, e2, RatMatrix{{1, 0}, {0, 1}});
    mk(zero, a, RatMatrix(1, 0));
    mk(b, zero, RatMatrix(0, 1));
    // Kernel-shaped inclusion (span e1 <= Q^2) -> (Q^2 <= Q^2).
    mk(d2, e2, RatMatrix{{1, 0}, {0, 1}});
    // Map with nontrivial kernel meeting the subspace.
    mk(d2, c2, RatMatrix{{0, 0}, {0, 1}});
    return out;
}

// ---- fgab fixtures --------------------------------------------------------

ObjectPayload zmod(long n) {
    IntMatrix r(1, 1);
    r.at(0, 0) = n;
    return fgab_obj(1, r);
}

ObjectPayload z_free(std::size_t g) { return fgab_obj(g, IntMatrix(g, 0)); }

std::vector<Morphism> curated_fgab() {
    std::vector<Morphism> out;
    const ObjectPayload z = z_free(1);
    const ObjectPayload z2 = zmod(2);
    const ObjectPayload z3 = zmod(3);
    const ObjectPayload z4 = zmod(4);
    const ObjectPayload z6 = zmod(6);
    const ObjectPayload zz = z_free(2);
    IntMatrix d23(2, 2);
    d23.at(0, 0) = 2;
    d23.at(1, 1) = 3;
    const ObjectPayload z2z3 = fgab_obj(2, d23);
    IntMatrix rz_z2(2, 1);
    rz_z2.at(1, 0) = 2;
    const ObjectPayload z_plus_z2 = fgab_obj(2, rz_z2);

    auto mk = [&](const ObjectPayload& s, const ObjectPayload& t, const RatMatrix& m) {
        out.push_back(make_matrix_morphism("fgab", s, t, m));
    };

    // Multiplication by two on Z first: the canonical non-split kernel.
    mk(z, z, RatMatrix{{2}});
    mk(z, z2, RatMatrix{{1}});  // quotient projection
    mk(z, z, RatMatrix{{3}});
    mk(z, z4, RatMatrix{{1}});
    mk(z, z6, RatMatrix{{1}});
    mk(z2, z4, RatMatrix{{2}});  // the non-split inclusion Z/2 -> Z/4
    mk(z4, z2, RatMatrix{{1}});
    mk(z6, z2, RatMatrix{{1}});
    mk(z6, z3, RatMatrix{{1}});
    mk(z2, z6, RatMatrix{{3}});
    mk(z3, z6, RatMatrix{{2}});
    mk(z2z3, z6, RatMatrix{{3, 2}});  // iso Z/2 (+) Z/3 = Z/6
    mk(zz, z, RatMatrix{{1, 1}});
    mk(z, zz, RatMatrix{{1}, {0}});
    mk(zz, zz, RatMatrix{{1, 0}, {0, 2}});
    mk(z_plus_z2, z2, RatMatrix{{0, 1}});
    mk(z, z_plus_z2, RatMatrix{{1}, {0}});
    mk(z, z, RatMatrix{{1}});
    mk(z6, z6, RatMatrix{{1}});
    mk(z2, z2, RatMatrix{{0}});
    mk(fgab_obj(0, IntMatrix(0, 0)), z, RatMatrix(1, 0));
    return out;
}

// ---- random extensions ----------------------------------------------------

Morphism random_vectq(SplitMix64& rng) {
    const std::size_t rows = rng.below(4);
    const std::size_t cols = rng.below(4);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const long num = rng.range(-3, 3);
            const long den = rng.below(4) == 0 ? 2 : 1;
            m.at(i, j) = rat(num, den);
        }
    return vectq_morphism(rows, cols, m);
}

ObjectPayload random_pair_object(SplitMix64& rng) {
    const std::size_t dim = rng.below(4);
    const std::size_t d = rng.below(dim + 1);
    RatMatrix basis(dim, d);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < d; ++j) basis.at(i, j) = rng.range(-2, 2);
    return pair_obj(dim, basis);
}

Morphism random_pair_like(const std::string& instance, SplitMix64& rng) {
    const ObjectPayload src = random_pair_object(rng);
    const ObjectPayload tgt = random_pair_object(rng);
    const auto& s = std::get<PairObjData>(src.v);
    const auto& t = std::get<PairObjData>(tgt.v);

    // Valid by construction: F maps the subspace basis to V W and a chosen
    // complement to arbitrary columns.
    RatMatrix w(t.subspace.cols(), s.subspace.cols());
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) w.at(i, j) = rng.range(-2, 2);

    const auto pivot_rows = rref(s.subspace.transpose()).pivots;
    std::vector<bool> used(s.dim, false);
    for (std::size_t r : pivot_rows) used[r] = true;
    RatMatrix complement(s.dim, s.dim - s.subspace.cols());
    std::size_t col = 0;
    for (std::size_t i = 0; i < s.dim; ++i)
        if (!used[i]) complement.at(i, col++) = 1;

    RatMatrix free_part(t.dim, complement.cols());
    for (std::size_t i = 0; i < free_part.rows(); ++i)
        for (std::size_t j = 0; j < free_part.cols(); ++j) free_part.at(i, j) = rng.range(-2, 2);

    const RatMatrix basis_change = hstack(s.subspace, complement);
    const auto inv = inverse(basis_change);
    if (!inv) throw CategoryError("random pair morphism: complement is not a basis");
    const RatMatrix f = hstack(t.subspace * w, free_part) * *inv;
    return make_matrix_morphism(instance, src, tgt, f);
}

ObjectPayload random_fgab_object(SplitMix64& rng) {
    const std::size_t g = rng.below(3);
    const std::size_t k = rng.below(3);
    IntMatrix rel(g, k);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < k; ++j) rel.at(i, j) = rng.range(0, 6);
    return fgab_obj(g, rel);
}

Morphism random_fgab(SplitMix64& rng) {
    const CategoryInstance& inst = instance_registry_get("fgab");
    const ObjectPayload src = random_fgab_object(rng);
    const ObjectPayload tgt = random_fgab_object(rng);
    const auto& s = std::get<FgabObjData>(src.v);
    const auto& t = std::get<FgabObjData>(tgt.v);

    for (int attempt = 0; attempt < 30; ++attempt) {
        RatMatrix m(t.generators, s.generators);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rng.range(-3, 3);
        Morphism f{make_object("fgab", src), make_object("fgab", tgt), ArrowPayload{m}};
        if (inst.valid_morphism(f)) return f;
    }
    return inst.zero_morphism(make_object("fgab", src), make_object("fgab", tgt));
}

}  // namespace

std::string ProbeCorpus::fingerprint() const {
    return "seed=" + std::to_string(seed) + ";curated=" + std::to_string(curated_count) +
           ";random=" + std::to_string(random_count());
}

std::vector<Morphism> exhaustive_vectq_small() {
    std::vector<Morphism> out;
    // Degenerate shapes through the zero object first.
    out.push_back(vectq_morphism(0, 0, RatMatrix(0, 0)));
    out.push_back(vectq_morphism(0, 1, RatMatrix(0, 1)));
    out.push_back(vectq_morphism(0, 2, RatMatrix(0, 2)));
    out.push_back(vectq_morphism(1, 0, RatMatrix(1, 0)));
    out.push_back(vectq_morphism(2, 0, RatMatrix(2, 0)));
    all_sign_matrices(1, 1, out);
    all_sign_matrices(1, 2, out);
    all_sign_matrices(2, 1, out);
    all_sign_matrices(2, 2, out);
    return out;
}

std::vector<Morphism> curated_probes(const std::string& instance) {
    if (instance == "vectq") return exhaustive_vectq_small();
    if (instance == "pairvect" || instance == "mockpair") return curated_pair_like(instance);
    if (instance == "fgab") return curated_fgab();
    throw UnknownInstanceError(instance);
}

ProbeCorpus default_corpus(const std::string& instance, std::uint64_t seed,
                           std::size_t random_count) {
    const std::string prefix = "product:";
    ProbeCorpus corpus;
    corpus.instance = instance;
    corpus.seed = seed;

    if (instance.rfind(prefix, 0) == 0) {
        const auto& inst =
            dynamic_cast<const ProductInstance&>(instance_registry_get(instance));
        const std::string left = inst.component(0).id();
        const std::string right = inst.component(1).id();
        const ProbeCorpus ca = default_corpus(left, seed, random_count);
        const ProbeCorpus cb = default_corpus(right, seed + 1, random_count);

        // Zero-lifted copies of the first few left/right probes, then the
        // componentwise zip. Zero-lifts realize the (f, 0) constructions.
        const ObjectRef zl = make_object(left, inst.component(0).zero_object());
        const ObjectRef zr = make_object(right, inst.component(1).zero_object());
        const Morphism zero_l = inst.component(0).zero_morphism(zl, zl);
        const Morphism zero_r = inst.component(1).zero_morphism(zr, zr);
        for (std::size_t i = 0; i < std::min<std::size_t>(8, ca.curated_count); ++i)
            corpus.probes.push_back(inst.combine(ca.probes[i], zero_r));
        for (std::size_t i = 0; i < std::min<std::size_t>(8, cb.curated_count); ++i)
            corpus.probes.push_back(inst.combine(zero_l, cb.probes[i]));
        const std::size_t curated_zip = std::min(ca.curated_count, cb.curated_count);
        for (std::size_t i = 0; i < curated_zip; ++i)
            corpus.probes.push_back(inst.combine(ca.probes[i], cb.probes[i]));
        corpus.curated_count = corpus.probes.size();
        const std::size_t total = std::max(ca.probes.size(), cb.probes.size());
        for (std::size_t i = curated_zip; i < total; ++i)
            corpus.probes.push_back(inst.combine(ca.probes[i % ca.probes.size()],
                                                 cb.probes[i % cb.probes.size()]));
        return corpus;
    }

    corpus.probes = curated_probes(instance);
    corpus.curated_count = corpus.probes.size();
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) {
        if (instance == "vectq")
            corpus.probes.push_back(random_vectq(rng));
        else if (instance == "pairvect" || instance == "mockpair")
            corpus.probes.push_back(random_pair_like(instance, rng));
        else if (instance == "fgab")
            corpus.probes.push_back(random_fgab(rng));
        else
            throw UnknownInstanceError(instance);
    }
    return corpus;
}

std::vector<ObjectRef> corpus_objects(const ProbeCorpus& corpus, std::size_t cap) {
    std::vector<ObjectRef> out;
    auto add = [&](const ObjectRef& ref) {
        if (cap && out.size() >= cap) return;
        for (const auto& seen : out)
            if (payload_identical(seen.payload, ref.payload)) return;
        out.push_back(ref);
    };
    for (const Morphism& f : corpus.probes) {
        add(f.source);
        add(f.target);
        if (cap && out.size() >= cap) break;
    }
    return out;
}

}  // namespace preab
