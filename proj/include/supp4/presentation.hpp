#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "supp4/smith.hpp"
#include "supp4/word.hpp"

namespace supp4 {

struct Presentation {
    int rank = 0;
    std::vector<FreeWord> relators;  // freely reduced, nonempty

    Presentation() = default;
    Presentation(int r, std::vector<FreeWord> rels) : rank(r) {
        for (auto& w : rels) {
            if (w.rank() != r) throw std::invalid_argument("relator rank mismatch");
            if (!w.empty()) relators.push_back(std::move(w));
        }
    }

    static Presentation parse(int rank, const std::string& comma_separated) {
        std::vector<FreeWord> rels;
        std::stringstream ss(comma_separated);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::string t;
            for (char c : tok)
                if (c != ' ' && c != '\t') t.push_back(c);
            if (!t.empty()) rels.push_back(FreeWord::parse(t, rank));
        }
        return Presentation(rank, std::move(rels));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < relators.size(); ++i) {
            if (i) s += ",";
            s += relators[i].str();
        }
        return s;
    }
};

struct AbelianInvariants {
    std::vector<long long> torsion_factors;  // d1 | d2 | ..., each >= 2
    int free_rank = 0;

    bool operator==(const AbelianInvariants& o) const {
        return torsion_factors == o.torsion_factors && free_rank == o.free_rank;
    }
};

inline IntMatrix relator_matrix(const Presentation& p) {
    IntMatrix m;
    for (const auto& r : p.relators) {
        auto e = r.exponent_vector();
        std::vector<BigInt> row(e.begin(), e.end());
        m.push_back(std::move(row));
    }
    if (m.empty()) m.push_back(std::vector<BigInt>(p.rank, 0));
    return m;
}

inline AbelianInvariants abelianize(const Presentation& p) {
    IntMatrix m = relator_matrix(p);
    SmithResult snf = smith_normal_form(m);
    if (!verify_smith(m, snf))
        throw std::logic_error("smith transform verification failed");
    AbelianInvariants inv;
    int nonzero = 0;
    for (const BigInt& d : snf.diagonal) {
        ++nonzero;
        if (d > 1) inv.torsion_factors.push_back(d.convert_to<long long>());
    }
    inv.free_rank = p.rank - nonzero;
    return inv;
}

// Tietze substitution gen -> image. The move must be invertible: image is a
// word whose exponent in `gen` is exactly +-1 (e.g. y -> xy).
inline Presentation tietze_substitute(const Presentation& p, int gen, const FreeWord& image) {
    long long e = image.exponent_vector().at(gen);
    if (e != 1 && e != -1)
        throw std::invalid_argument("substitution is not invertible");
    std::vector<FreeWord> rels;
    for (const auto& r : p.relators) {
        FreeWord s = r.substitute(gen, image).cyclic_reduce().first;
        if (!s.empty()) rels.push_back(std::move(s));
    }
    return Presentation(p.rank, std::move(rels));
}

struct TietzeElimination {
    Presentation reduced;   // rank - 1, generators above `gen` renumbered down
    FreeWord image;         // the eliminated generator as a word of the reduced rank
};

// Eliminate a generator pinned by a relator of the form  gen^+-1 = w(other gens):
// rewrites every relator and drops the generator, renumbering those above it.
// Returns nothing if no relator pins `gen` with a single occurrence.
inline std::optional<TietzeElimination> tietze_eliminate_info(const Presentation& p, int gen) {
    for (const auto& r : p.relators) {
        int count = 0;
        for (Letter l : r.letters())
            if (gen_of(l) == gen) ++count;
        if (count != 1) continue;
        // r = a * gen^s * b  ->  gen^s = a^-1 b^-1, gen = (a^-1 b^-1)^s
        std::vector<Letter> a, b;
        int s = 0;
        bool seen = false;
        for (Letter l : r.letters()) {
            if (gen_of(l) == gen) {
                s = sign_of(l);
                seen = true;
            } else {
                (seen ? b : a).push_back(l);
            }
        }
        FreeWord wa = FreeWord::reduce(a, p.rank), wb = FreeWord::reduce(b, p.rank);
        FreeWord img = (wa.inverse() * wb.inverse());
        if (s < 0) img = img.inverse();
        auto renumber = [&](const FreeWord& w) {
            std::vector<Letter> down;
            for (Letter l : w.letters()) {
                int g = gen_of(l);
                down.push_back(make_letter(g > gen ? g - 1 : g, sign_of(l)));
            }
            return FreeWord::reduce(down, p.rank - 1);
        };
        std::vector<FreeWord> rels;
        for (const auto& q : p.relators) {
            FreeWord t = q.substitute(gen, img);
            if (t.empty()) continue;
            FreeWord d = renumber(t).cyclic_reduce().first;
            if (!d.empty()) rels.push_back(std::move(d));
        }
        return TietzeElimination{Presentation(p.rank - 1, std::move(rels)), renumber(img)};
    }
    return std::nullopt;
}

inline std::optional<Presentation> tietze_eliminate(const Presentation& p, int gen) {
    auto info = tietze_eliminate_info(p, gen);
    if (!info) return std::nullopt;
    return info->reduced;
}

}  // namespace supp4
