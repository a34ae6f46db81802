#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supp4 {

// Letters of a free group on up to 4 generators, encoded as signed bytes:
// +(g+1) for generator g, -(g+1) for its inverse. Words are kept freely
// reduced at all times.
using Letter = std::int8_t;

inline int gen_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int sign_of(Letter l) { return l > 0 ? 1 : -1; }
inline Letter make_letter(int gen, int sign) {
    return static_cast<Letter>(sign > 0 ? gen + 1 : -(gen + 1));
}
inline Letter inv_letter(Letter l) { return static_cast<Letter>(-l); }

class FreeWord {
public:
    FreeWord() = default;

    static FreeWord reduce(std::vector<Letter> raw, int rank) {
        for (Letter l : raw)
            if (l == 0 || gen_of(l) >= rank)
                throw std::out_of_range("letter outside alphabet rank");
        FreeWord w;
        w.rank_ = rank;
        for (Letter l : raw) w.push_reduced(l);
        return w;
    }

    static FreeWord identity(int rank) {
        FreeWord w;
        w.rank_ = rank;
        return w;
    }

    // single-letter word x_gen^sign
    static FreeWord letter(int gen, int sign, int rank) {
        return reduce({make_letter(gen, sign)}, rank);
    }

    int rank() const { return rank_; }
    bool empty() const { return ls_.empty(); }
    std::size_t size() const { return ls_.size(); }
    const std::vector<Letter>& letters() const { return ls_; }
    Letter operator[](std::size_t i) const { return ls_[i]; }

    bool operator==(const FreeWord& o) const { return ls_ == o.ls_; }
    bool operator!=(const FreeWord& o) const { return !(*this == o); }
    bool operator<(const FreeWord& o) const {
        if (ls_.size() != o.ls_.size()) return ls_.size() < o.ls_.size();
        return ls_ < o.ls_;
    }

    FreeWord inverse() const {
        FreeWord w;
        w.rank_ = rank_;
        w.ls_.reserve(ls_.size());
        for (auto it = ls_.rbegin(); it != ls_.rend(); ++it)
            w.ls_.push_back(inv_letter(*it));
        return w;
    }

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
        if (a.rank_ != b.rank_)
            throw std::invalid_argument("rank mismatch in word product");
        FreeWord w = a;
        for (Letter l : b.ls_) w.push_reduced(l);
        return w;
    }

    FreeWord pow(int e) const {
        FreeWord base = e >= 0 ? *this : inverse();
        FreeWord acc = identity(rank_);
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) acc = acc * base;
        return acc;
    }

    FreeWord conjugate(const FreeWord& c) const {  // c * w * c^-1
        return c * (*this) * c.inverse();
    }

    // w = conj * core * conj^-1 with core cyclically reduced
    std::pair<FreeWord, FreeWord> cyclic_reduce() const {
        FreeWord core = *this;
        FreeWord conj = identity(rank_);
        while (core.size() >= 2 && core.ls_.front() == inv_letter(core.ls_.back())) {
            conj.push_reduced(core.ls_.front());
            core.ls_.erase(core.ls_.begin());
            core.ls_.pop_back();
        }
        return {core, conj};
    }

    // replace every occurrence of gen^+-1 by image^+-1, then reduce
    FreeWord substitute(int gen, const FreeWord& image) const {
        if (image.rank_ != rank_)
            throw std::invalid_argument("rank mismatch in substitution");
        FreeWord out = identity(rank_);
        FreeWord img_inv = image.inverse();
        for (Letter l : ls_) {
            if (gen_of(l) == gen) {
                const FreeWord& rep = sign_of(l) > 0 ? image : img_inv;
                for (Letter m : rep.ls_) out.push_reduced(m);
            } else {
                out.push_reduced(l);
            }
        }
        return out;
    }

    // ASCII convention: x y z (X Y Z for inverses), empty word printed as "1"
    std::string str() const {
        if (ls_.empty()) return "1";
        static const char lo[] = {'x', 'y', 'z', 'w'};
        static const char up[] = {'X', 'Y', 'Z', 'W'};
        std::string s;
        s.reserve(ls_.size());
        for (Letter l : ls_)
            s.push_back(sign_of(l) > 0 ? lo[gen_of(l)] : up[gen_of(l)]);
        return s;
    }

    static FreeWord parse(const std::string& s, int rank) {
        if (s == "1") return identity(rank);
        std::vector<Letter> raw;
        raw.reserve(s.size());
        for (char c : s) {
            int gen;
            int sign;
            switch (c) {
                case 'x': gen = 0; sign = 1; break;
                case 'X': gen = 0; sign = -1; break;
                case 'y': gen = 1; sign = 1; break;
                case 'Y': gen = 1; sign = -1; break;
                case 'z': gen = 2; sign = 1; break;
                case 'Z': gen = 2; sign = -1; break;
                case 'w': gen = 3; sign = 1; break;
                case 'W': gen = 3; sign = -1; break;
                default: throw std::invalid_argument("bad word letter");
            }
            raw.push_back(make_letter(gen, sign));
        }
        return reduce(raw, rank);
    }

    // canonical form of the cyclic word: min over rotations of core and
    // rotations of core^-1; used to compare relations up to rotation/inversion
    FreeWord cyclic_normal_form() const {
        FreeWord core = cyclic_reduce().first;
        if (core.empty()) return core;
        FreeWord best = core;
        for (const FreeWord& u : {core, core.inverse()}) {
            std::vector<Letter> v = u.ls_;
            for (std::size_t r = 0; r < v.size(); ++r) {
                std::rotate(v.begin(), v.begin() + 1, v.end());
                FreeWord cand;
                cand.rank_ = rank_;
                cand.ls_ = v;
                if (cand < best) best = cand;
            }
        }
        return best;
    }

    // exponent sum of each generator (abelianized image)
    std::vector<long long> exponent_vector() const {
        std::vector<long long> e(rank_, 0);
        for (Letter l : ls_) e[gen_of(l)] += sign_of(l);
        return e;
    }

private:
    void push_reduced(Letter l) {
        if (!ls_.empty() && ls_.back() == inv_letter(l))
            ls_.pop_back();
        else
            ls_.push_back(l);
    }

    std::vector<Letter> ls_;
    int rank_ = 0;
};

}  // namespace supp4
