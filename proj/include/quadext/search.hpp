#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quadext/compositum.hpp"
#include "quadext/expr.hpp"
#include "quadext/parallel.hpp"

namespace quadext {

/// Candidate generation for odd characteristic: f = c * (product of distinct
/// monic irreducibles from the pool), pool = all monic irreducibles of degree
/// <= max_factor_degree, products capped at max_total_degree, c in {1, nu}
/// with nu the least non-square (square classes are what matter).
struct OddSearchOptions {
    unsigned max_factor_degree = 3;
    unsigned max_total_degree = 3;
    bool nonsquare_constants = true;
};

/// Candidate generation for characteristic 2: f = sum of simple principal
/// parts c/pi^m over chosen places (c * x^m at infinity) with odd orders
/// m <= max_pole_order, places of degree <= max_place_degree, plus an
/// optional additive constant of trace 1 (the only shift that matters).
struct EvenSearchOptions {
    unsigned max_place_degree = 1;
    unsigned max_pole_order = 1;
    bool include_infinity = true;
    bool constant_shift = true;
};

struct SearchSpace {
    FieldPtr field;
    unsigned n = 2;
    unsigned genus_cap = 4;
    std::optional<OddSearchOptions> odd;
    std::optional<EvenSearchOptions> even;
    /// Keep only candidates that are canonical representatives of their orbit
    /// under x -> a*x + b (odd mode only); off by default.
    bool affine_symmetry = false;

    static SearchSpace odd_space(FieldPtr f, unsigned n, unsigned genus_cap,
                                 OddSearchOptions o = {}, bool affine_symmetry = false) {
        if (f->characteristic() == 2) throw DomainError("odd search over characteristic 2");
        return {std::move(f), n, genus_cap, o, std::nullopt, affine_symmetry};
    }
    static SearchSpace even_space(FieldPtr f, unsigned n, unsigned genus_cap,
                                  EvenSearchOptions e = {}) {
        if (f->characteristic() != 2) throw DomainError("even search needs characteristic 2");
        return {std::move(f), n, genus_cap, std::nullopt, e, false};
    }
};

namespace detail {

inline std::vector<Polynomial> irreducible_pool(const FieldPtr& F, unsigned max_degree) {
    std::vector<Polynomial> pool;
    for (unsigned d = 1; d <= max_degree; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= F->size();
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<unsigned> c(d + 1, 0);
            std::uint64_t v = code;
            for (unsigned i = 0; i < d; ++i) {
                c[i] = static_cast<unsigned>(v % F->size());
                v /= F->size();
            }
            c[d] = 1;
            Polynomial p(F, std::move(c));
            if (is_irreducible(p)) pool.push_back(p);
        }
    }
    std::sort(pool.begin(), pool.end());
    return pool;
}

inline void squarefree_products(const std::vector<Polynomial>& pool, unsigned budget,
                                std::size_t start, const Polynomial& acc,
                                std::vector<Polynomial>& out) {
    if (acc.degree() >= 1) out.push_back(acc);
    for (std::size_t i = start; i < pool.size(); ++i) {
        unsigned d = static_cast<unsigned>(pool[i].degree());
        if (d > budget) break;  // pool is sorted by degree
        squarefree_products(pool, budget - d, i + 1, acc * pool[i], out);
    }
}

}  // namespace detail

/// The deterministic list of single-generator candidates for a space.
inline std::vector<RationalFunction> candidate_pool(const SearchSpace& space) {
    const auto& F = space.field;
    std::vector<RationalFunction> pool;
    if (space.odd) {
        const auto& o = *space.odd;
        auto irr = detail::irreducible_pool(F, o.max_factor_degree);
        std::vector<Polynomial> products;
        detail::squarefree_products(irr, o.max_total_degree, 0, Polynomial::one(F), products);
        std::sort(products.begin(), products.end());
        unsigned nu = 0;
        if (o.nonsquare_constants) {
            for (unsigned v = 2; v < F->size(); ++v)
                if (!F->is_square(v)) {
                    nu = v;
                    break;
                }
        }
        for (const auto& p : products) {
            pool.emplace_back(p);
            if (nu) pool.emplace_back(p.scaled(F->element(nu)));
        }
        return pool;
    }
    const auto& e = *space.even;
    std::vector<Place> places;
    if (e.max_place_degree == 1) {
        places = rational_places(F);
        if (!e.include_infinity) places.pop_back();
    } else {
        for (const auto& pi : detail::irreducible_pool(F, e.max_place_degree))
            places.push_back(Place::finite(pi));
        if (e.include_infinity) places.push_back(Place::infinity(F));
    }
    // Options per place: absent, or (odd order m, nonzero coefficient c).
    unsigned orders = (e.max_pole_order + 1) / 2;  // 1, 3, 5, ...
    std::uint64_t per_place = 1 + static_cast<std::uint64_t>(orders) * (F->size() - 1);
    double total = e.constant_shift ? 2.0 : 1.0;
    for (std::size_t i = 0; i < places.size(); ++i) {
        total *= static_cast<double>(per_place);
        if (total > 2e6) throw DomainError("even search space too large");
    }
    unsigned shift_value = 0;
    if (e.constant_shift) {
        for (unsigned v = 1; v < F->size(); ++v)
            if (F->trace(v) == 1) {
                shift_value = v;
                break;
            }
    }
    std::vector<std::uint64_t> odo(places.size(), 0);
    for (;;) {
        for (unsigned shift = 0; shift < (e.constant_shift ? 2u : 1u); ++shift) {
            RationalFunction f =
                shift ? RationalFunction(Polynomial::constant(F->element(shift_value)))
                      : RationalFunction::zero(F);
            for (std::size_t i = 0; i < places.size(); ++i) {
                if (odo[i] == 0) continue;
                std::uint64_t k = odo[i] - 1;
                unsigned m = 2 * static_cast<unsigned>(k / (F->size() - 1)) + 1;
                unsigned c = 1 + static_cast<unsigned>(k % (F->size() - 1));
                if (places[i].is_infinity()) {
                    std::vector<unsigned> mono(m + 1, 0);
                    mono.back() = c;
                    f = f + RationalFunction(Polynomial(F, std::move(mono)));
                } else {
                    f = f + RationalFunction(Polynomial::constant(F->element(c)),
                                             places[i].poly().pow(m));
                }
            }
            if (!f.is_zero()) pool.push_back(f);
        }
        std::size_t j = 0;
        while (j < places.size() && ++odo[j] == per_place) {
            odo[j] = 0;
            ++j;
        }
        if (j == places.size()) break;
    }
    return pool;
}

struct SearchRecord {
    unsigned genus = 0;
    std::uint64_t N = 0;
    std::vector<std::size_t> witness;      // indices into the candidate pool
    std::uint64_t rank = 0;                // enumeration rank of the witness
    std::vector<std::vector<std::size_t>> ties;  // later tuples with equal N (bounded)
};

struct RecordBook {
    std::map<unsigned, SearchRecord> by_genus;
    std::uint64_t candidates = 0;
    std::uint64_t not_disjoint = 0;
    std::uint64_t pruned = 0;
    std::uint64_t evaluated = 0;
    static constexpr std::size_t kMaxTies = 4;

    void offer(unsigned g, std::uint64_t N, std::vector<std::size_t> tuple, std::uint64_t rank) {
        auto it = by_genus.find(g);
        if (it == by_genus.end() || N > it->second.N ||
            (N == it->second.N && rank < it->second.rank)) {
            SearchRecord rec{g, N, std::move(tuple), rank, {}};
            if (it != by_genus.end() && N == it->second.N) {
                rec.ties = std::move(it->second.ties);
                rec.ties.insert(rec.ties.begin(), it->second.witness);
                if (rec.ties.size() > kMaxTies) rec.ties.resize(kMaxTies);
            }
            by_genus[g] = std::move(rec);
        } else if (N == it->second.N && it->second.ties.size() < kMaxTies) {
            it->second.ties.push_back(std::move(tuple));
        }
    }

    void merge(const RecordBook& o) {
        candidates += o.candidates;
        not_disjoint += o.not_disjoint;
        pruned += o.pruned;
        evaluated += o.evaluated;
        for (const auto& [g, rec] : o.by_genus) {
            offer(g, rec.N, rec.witness, rec.rank);
            for (const auto& t : rec.ties)
                if (by_genus[g].ties.size() < kMaxTies) by_genus[g].ties.push_back(t);
        }
    }
};

struct EvaluateOutcome {
    enum class Kind { ok, not_disjoint, pruned } kind;
    unsigned genus = 0;
    std::uint64_t N = 0;
};

/// Genus first (the cheap invariant), then the place count; candidates whose
/// genus exceeds the cap are pruned before any counting.
inline EvaluateOutcome evaluate_candidate(const CompositumSpec& spec, unsigned genus_cap,
                                          std::uint64_t seed = kDefaultFactorSeed) {
    try {
        auto lat = CharacterLattice::build(spec, kMaxGenerators, seed);
        unsigned g = lat.genus();
        if (g > genus_cap) return {EvaluateOutcome::Kind::pruned, g, 0};
        return {EvaluateOutcome::Kind::ok, g, lat.count_rational_places().N};
    } catch (const NotDisjoint&) {
        return {EvaluateOutcome::Kind::not_disjoint, 0, 0};
    } catch (const DegenerateExtension&) {
        return {EvaluateOutcome::Kind::not_disjoint, 0, 0};
    }
}

namespace detail {

/// Scale f by the square constant that brings the leading coefficient of
/// the numerator into {1, least non-square}; Kummer data only sees the
/// square class, so this is a sound orbit key normalization.
inline RationalFunction square_class_normalized(const RationalFunction& f) {
    const auto& F = f.field();
    unsigned nu = 0;
    for (unsigned v = 2; v < F->size(); ++v)
        if (!F->is_square(v)) {
            nu = v;
            break;
        }
    FieldElement c = f.num().leading();
    unsigned target = c.is_square() ? 1u : nu;
    FieldElement s2 = F->element(target) / c;  // a square by construction
    return f * RationalFunction(Polynomial::constant(s2));
}

inline std::vector<std::string> orbit_key(const std::vector<RationalFunction>& fs) {
    std::vector<std::string> key;
    key.reserve(fs.size());
    for (const auto& f : fs) key.push_back(format_canonical(square_class_normalized(f)));
    std::sort(key.begin(), key.end());
    return key;
}

/// True iff the tuple's key is minimal over all substitutions x -> a*x + b.
inline bool affine_canonical(const std::vector<RationalFunction>& fs, const FieldPtr& F) {
    auto base = orbit_key(fs);
    for (unsigned a = 1; a < F->size(); ++a)
        for (unsigned b = 0; b < F->size(); ++b) {
            if (a == 1 && b == 0) continue;
            Polynomial u(F, {b, a});
            std::vector<RationalFunction> moved;
            moved.reserve(fs.size());
            for (const auto& f : fs)
                moved.emplace_back(f.num().compose(u), f.den().compose(u));
            if (orbit_key(moved) < base) return false;
        }
    return true;
}

inline std::uint64_t binomial(std::uint64_t n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Rank -> strictly increasing index tuple, lexicographic order.
inline std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::uint64_t pool,
                                                   unsigned k) {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (unsigned slot = 0; slot < k; ++slot) {
        for (std::size_t v = next;; ++v) {
            std::uint64_t block = binomial(pool - v - 1, k - slot - 1);
            if (rank < block) {
                out.push_back(v);
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return out;
}

}  // namespace detail

struct SearchResult {
    RecordBook book;
    std::vector<RationalFunction> pool;
    SearchSpace space;
};

/// Exhaustive search over n-tuples of pool candidates (strictly increasing
/// index order).  Deterministic: the record book is identical for any job
/// count, with first-in-enumeration-order tie-breaking.
inline SearchResult run_search(const SearchSpace& space, unsigned jobs = 0,
                               std::uint64_t seed = kDefaultFactorSeed) {
    if (space.n == 0 || space.n > kMaxGenerators)
        throw DomainError("search needs 1..4 generators");
    if (space.affine_symmetry && !space.odd)
        throw DomainError("affine symmetry reduction is supported for odd-mode spaces only");
    SearchResult result;
    result.space = space;
    result.pool = candidate_pool(space);
    const auto& pool = result.pool;
    std::uint64_t total = detail::binomial(pool.size(), space.n);
    if (total > 5000000) throw DomainError("candidate space too large");

    const std::uint64_t chunk = 2048;
    std::size_t nchunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
    auto partials = parallel_map<RecordBook>(
        nchunks,
        [&](std::size_t ci) {
            RecordBook local;
            std::uint64_t lo = ci * chunk, hi = std::min<std::uint64_t>(lo + chunk, total);
            for (std::uint64_t rank = lo; rank < hi; ++rank) {
                auto tuple = detail::unrank_combination(rank, pool.size(), space.n);
                CompositumSpec spec;
                spec.field = space.field;
                for (auto i : tuple) spec.f.push_back(pool[i]);
                ++local.candidates;
                if (space.affine_symmetry && !detail::affine_canonical(spec.f, space.field)) {
                    ++local.pruned;
                    continue;
                }
                auto out = evaluate_candidate(spec, space.genus_cap, seed);
                switch (out.kind) {
                    case EvaluateOutcome::Kind::not_disjoint: ++local.not_disjoint; break;
                    case EvaluateOutcome::Kind::pruned: ++local.pruned; break;
                    case EvaluateOutcome::Kind::ok:
                        ++local.evaluated;
                        local.offer(out.genus, out.N, std::move(tuple), rank);
                        break;
                }
            }
            return local;
        },
        jobs);
    for (const auto& p : partials) result.book.merge(p);

    // Soundness: every record re-verifies through a fresh evaluation.
    for (const auto& [g, rec] : result.book.by_genus) {
        CompositumSpec spec;
        spec.field = space.field;
        for (auto i : rec.witness) spec.f.push_back(pool[i]);
        auto again = evaluate_candidate(spec, space.genus_cap, seed);
        if (again.kind != EvaluateOutcome::Kind::ok || again.genus != g || again.N != rec.N)
            throw Error("record book failed re-verification at genus " + std::to_string(g));
    }
    return result;
}

/// Dataset-format export of the records, re-verifiable by the table harness.
inline std::string export_records(const SearchResult& result) {
    std::ostringstream os;
    for (const auto& [g, rec] : result.book.by_genus) {
        os << "q=" << result.space.field->size() << " g=" << g << " N=" << rec.N
           << " flags=found f=";
        for (std::size_t i = 0; i < rec.witness.size(); ++i) {
            if (i) os << ";";
            std::string s = format_canonical(result.pool[rec.witness[i]]);
            std::string nospace;
            for (char c : s)
                if (c != ' ') nospace += c;
            os << nospace;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace quadext
