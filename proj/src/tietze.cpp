#include "homcert/tietze.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace homcert {

namespace {

std::vector<int> invert_word(const std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

std::vector<int> substitute_word(const std::vector<int>& w, int g,
                                 const std::vector<int>& replacement) {
    std::vector<int> out;
    for (int letter : w) {
        if (letter == g) {
            out.insert(out.end(), replacement.begin(), replacement.end());
        } else if (letter == -g) {
            std::vector<int> inv = invert_word(replacement);
            out.insert(out.end(), inv.begin(), inv.end());
        } else {
            out.push_back(letter);
        }
    }
    return out;
}

// Canonical cyclic form: the least rotation of the word or its inverse.
std::vector<int> canonical_cyclic(const std::vector<int>& w) {
    std::vector<int> best;
    auto consider = [&best](const std::vector<int>& word) {
        const int n = static_cast<int>(word.size());
        for (int s = 0; s < n; ++s) {
            std::vector<int> rot;
            rot.reserve(n);
            for (int i = 0; i < n; ++i) rot.push_back(word[(s + i) % n]);
            if (best.empty() || rot < best) best = rot;
        }
    };
    if (w.empty()) return {};
    consider(w);
    consider(invert_word(w));
    return best;
}

struct State {
    int ngens;
    std::vector<char> alive;
    std::vector<std::vector<int>> relators;
    std::vector<std::vector<int>> expr;  // original generator -> current word
    std::vector<std::string> transcript;
    int moves = 0;
    int budget;

    State(const GroupPresentation& p, int move_budget)
        : ngens(p.generators), alive(p.generators, 1), budget(move_budget) {
        for (const auto& r : p.relators) {
            auto w = reduce_word(r, true);
            if (!w.empty()) relators.push_back(std::move(w));
        }
        expr.resize(ngens);
        for (int i = 0; i < ngens; ++i) expr[i] = {i + 1};
    }

    long long total_length() const {
        long long n = 0;
        for (const auto& r : relators) n += static_cast<long long>(r.size());
        return n;
    }

    void normalize() {
        std::vector<std::vector<int>> kept;
        std::set<std::vector<int>> seen;
        for (auto& r : relators) {
            auto w = reduce_word(r, true);
            if (w.empty()) continue;
            auto canon = canonical_cyclic(w);
            if (seen.insert(canon).second) kept.push_back(std::move(w));
        }
        relators = std::move(kept);
    }

    int occurrences(int g) const {
        int n = 0;
        for (const auto& r : relators)
            for (int letter : r) n += std::abs(letter) == g ? 1 : 0;
        return n;
    }

    // Eliminate generator g through relator r where g occurs exactly once.
    void eliminate(int ridx, int g) {
        std::vector<int> r = relators[ridx];
        int pos = -1;
        for (int i = 0; i < static_cast<int>(r.size()); ++i)
            if (std::abs(r[i]) == g) pos = i;
        // Rotate so the g-letter is last.
        std::rotate(r.begin(), r.begin() + (pos + 1) % r.size(), r.end());
        std::vector<int> replacement;
        std::vector<int> prefix(r.begin(), r.end() - 1);
        if (r.back() == g) {
            replacement = invert_word(prefix);  // u g = 1 -> g = u^{-1}
        } else {
            replacement = prefix;  // u g^{-1} = 1 -> g = u
        }
        relators.erase(relators.begin() + ridx);
        for (auto& rel : relators) rel = reduce_word(substitute_word(rel, g, replacement), true);
        for (auto& e : expr) e = reduce_word(substitute_word(e, g, replacement), false);
        alive[g - 1] = 0;
        transcript.push_back("eliminate g" + std::to_string(g) + " via relator " +
                             std::to_string(ridx));
        ++moves;
        normalize();
    }

    // One strictly length-reducing rewrite of relator i using relator j.
    bool try_shorten() {
        for (size_t j = 0; j < relators.size(); ++j) {
            const auto& rj = relators[j];
            const int lj = static_cast<int>(rj.size());
            if (lj < 2) continue;
            for (int orient = 0; orient < 2; ++orient) {
                std::vector<int> w = orient ? invert_word(rj) : rj;
                for (int rot = 0; rot < lj; ++rot) {
                    std::vector<int> rw;
                    rw.reserve(lj);
                    for (int i = 0; i < lj; ++i) rw.push_back(w[(rot + i) % lj]);
                    // Longest prefix u with 2|u| > |j|: replacing u by the
                    // inverse of the complement shortens the target.
                    for (int lu = lj; 2 * lu > lj; --lu) {
                        std::vector<int> u(rw.begin(), rw.begin() + lu);
                        std::vector<int> rest(rw.begin() + lu, rw.end());
                        std::vector<int> repl = invert_word(rest);
                        for (size_t i = 0; i < relators.size(); ++i) {
                            if (i == j) continue;
                            const auto& ri = relators[i];
                            const int li = static_cast<int>(ri.size());
                            if (li < lu) continue;
                            for (int s = 0; s + lu <= li; ++s) {
                                if (std::equal(u.begin(), u.end(), ri.begin() + s)) {
                                    std::vector<int> nw(ri.begin(), ri.begin() + s);
                                    nw.insert(nw.end(), repl.begin(), repl.end());
                                    nw.insert(nw.end(), ri.begin() + s + lu, ri.end());
                                    nw = reduce_word(nw, true);
                                    if (static_cast<int>(nw.size()) < li) {
                                        relators[i] = std::move(nw);
                                        transcript.push_back(
                                            "rewrite relator " + std::to_string(i) + " using " +
                                            std::to_string(j));
                                        ++moves;
                                        normalize();
                                        return true;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        return false;
    }
};

}  // namespace

TietzeOutcome tietze_simplify(const GroupPresentation& p, int move_budget) {
    require(move_budget > 0, errc::bad_argument, "tietze budget must be positive");
    State st(p, move_budget);
    st.normalize();
    const long long cap = std::max<long long>(4 * st.total_length(), st.total_length() + 2000);

    while (st.moves < st.budget) {
        // Best single-occurrence elimination by total-length growth.
        int best_r = -1, best_g = 0;
        long long best_growth = 0;
        bool have = false;
        for (size_t r = 0; r < st.relators.size(); ++r) {
            std::map<int, int> counts;
            for (int letter : st.relators[r]) counts[std::abs(letter)]++;
            for (const auto& [g, cnt] : counts) {
                if (cnt != 1) continue;
                const long long L = static_cast<long long>(st.relators[r].size());
                const long long elsewhere = st.occurrences(g) - 1;
                const long long growth = elsewhere * (L - 2) - L;
                if (!have || growth < best_growth) {
                    have = true;
                    best_growth = growth;
                    best_r = static_cast<int>(r);
                    best_g = g;
                }
            }
        }
        if (have && best_growth <= 0) {
            st.eliminate(best_r, best_g);
            continue;
        }
        if (st.try_shorten()) continue;
        if (have && st.total_length() + best_growth <= cap) {
            st.eliminate(best_r, best_g);
            continue;
        }
        break;
    }

    TietzeOutcome out;
    out.simplified.generators = 0;
    std::vector<int> new_id(st.ngens + 1, 0);
    for (int g = 1; g <= st.ngens; ++g)
        if (st.alive[g - 1]) {
            out.surviving_generators.push_back(g);
            new_id[g] = ++out.simplified.generators;
        }
    for (const auto& r : st.relators) {
        std::vector<int> w;
        for (int letter : r) {
            int g = std::abs(letter);
            require(new_id[g] != 0, errc::internal, "relator references a dead generator");
            w.push_back(letter > 0 ? new_id[g] : -new_id[g]);
        }
        out.simplified.relators.push_back(std::move(w));
    }
    out.original_in_simplified.resize(st.ngens);
    for (int i = 0; i < st.ngens; ++i) {
        for (int letter : st.expr[i]) {
            int g = std::abs(letter);
            require(new_id[g] != 0, errc::internal, "expression references a dead generator");
            out.original_in_simplified[i].push_back(letter > 0 ? new_id[g] : -new_id[g]);
        }
    }
    out.transcript = std::move(st.transcript);
    out.moves_used = st.moves;
    out.trivialized = out.simplified.generators == 0 && out.simplified.relators.empty();
    return out;
}

bool verify_trivialization(const GroupPresentation& p, const std::vector<std::string>& transcript,
                           int move_budget) {
    TietzeOutcome rerun = tietze_simplify(p, move_budget);
    return rerun.trivialized && rerun.transcript == transcript;
}

}  // namespace homcert
