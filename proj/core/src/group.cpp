#include "spinrep/group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

namespace spinrep {

namespace {

std::string witness(int a, int b, int c = -1) {
    std::ostringstream os;
    os << "(" << a << ", " << b;
    if (c >= 0) os << ", " << c;
    os << ")";
    return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, int identity)
    : n_(order), e_(identity), table_(std::move(table)) {
    if (n_ <= 0) throw NotAGroup("order must be positive");
    if (e_ < 0 || e_ >= n_) throw NotAGroup("identity index out of range");
    if (table_.size() != static_cast<size_t>(n_) * n_) {
        throw NotAGroup("table size does not match order");
    }
    for (int v : table_) {
        if (v < 0 || v >= n_) throw NotAGroup("table entry out of range");
    }

    // identity axiom
    for (int g = 0; g < n_; ++g) {
        if (mul(e_, g) != g) {
            throw NotAGroup("identity axiom fails: e*g != g at witness " + witness(e_, g));
        }
        if (mul(g, e_) != g) {
            throw NotAGroup("identity axiom fails: g*e != g at witness " + witness(g, e_));
        }
    }

    // Latin square: every row and column is a permutation. This also
    // guarantees that every row contains e, i.e. inverses exist.
    for (int g = 0; g < n_; ++g) {
        std::vector<char> seen_row(n_, 0), seen_col(n_, 0);
        for (int h = 0; h < n_; ++h) {
            if (seen_row[mul(g, h)]++) {
                throw NotAGroup("Latin square fails in row " + std::to_string(g) +
                                " at witness " + witness(g, h));
            }
            if (seen_col[mul(h, g)]++) {
                throw NotAGroup("Latin square fails in column " + std::to_string(g) +
                                " at witness " + witness(h, g));
            }
        }
    }

    // associativity, all triples
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            const int ab = mul(a, b);
            for (int c = 0; c < n_; ++c) {
                if (mul(ab, c) != mul(a, mul(b, c))) {
                    throw NotAGroup("associativity fails at witness " + witness(a, b, c));
                }
            }
        }
    }

    inverse_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
        for (int h = 0; h < n_; ++h) {
            if (mul(g, h) == e_) {
                inverse_[g] = h;
                break;
            }
        }
    }
}

int FiniteGroup::element_order(int g) const {
    int k = 1;
    int acc = g;
    while (acc != e_) {
        acc = mul(acc, g);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a) {
        for (int b = a + 1; b < n_; ++b) {
            if (mul(a, b) != mul(b, a)) return false;
        }
    }
    return true;
}

FiniteGroup load_group(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    bool first_line = true;
    while (std::getline(in, line)) {
        if (first_line && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        first_line = false;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }

    size_t at = 0;
    auto next = [&]() -> const std::string& {
        if (at >= tokens.size()) throw ParseError("unexpected end of group document");
        return tokens[at++];
    };
    auto next_int = [&](const char* what) {
        const std::string& tok = next();
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("expected integer for ") + what + ", got '" + tok + "'");
        }
    };

    if (next() != "order") throw ParseError("document must start with 'order n'");
    const int n = next_int("order");
    if (n <= 0) throw ParseError("order must be positive");

    int identity = 0;
    if (at < tokens.size() && tokens[at] == "identity") {
        ++at;
        identity = next_int("identity");
    }

    std::vector<int> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) table.push_back(next_int("table entry"));
    if (at != tokens.size()) throw ParseError("trailing tokens after the table");

    return FiniteGroup(n, std::move(table), identity);
}

FiniteGroup load_group_from_string(const std::string& text) {
    std::istringstream in(text);
    return load_group(in);
}

FiniteGroup load_group_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file: " + path);
    return load_group(in);
}

namespace {

FiniteGroup cyclic(int n) {
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
    return FiniteGroup(n, std::move(t), 0);
}

FiniteGroup klein_four() {
    // index = 2*a + b for (a, b) in Z2 x Z2
    std::vector<int> t(16);
    for (int g = 0; g < 4; ++g) {
        for (int h = 0; h < 4; ++h) {
            const int a = ((g >> 1) + (h >> 1)) & 1;
            const int b = ((g & 1) + (h & 1)) & 1;
            t[static_cast<size_t>(g) * 4 + h] = 2 * a + b;
        }
    }
    return FiniteGroup(4, std::move(t), 0);
}

// Permutations of {0..k-1} in lexicographic order; product = compose,
// (p*q)(x) = p(q(x)).
FiniteGroup symmetric(int k) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const int n = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };

    std::vector<int> t(static_cast<size_t>(n) * n);
    std::vector<int> prod(k);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            for (int x = 0; x < k; ++x) prod[x] = perms[g][perms[h][x]];
            t[static_cast<size_t>(g) * n + h] = index_of(prod);
        }
    }
    return FiniteGroup(n, std::move(t), 0);
}

// r^a s^b with r^4 = s^2 = e, s r s = r^{-1}; index = b*4 + a.
FiniteGroup dihedral4() {
    std::vector<int> t(64);
    for (int g = 0; g < 8; ++g) {
        const int a = g & 3, b = g >> 2;
        for (int h = 0; h < 8; ++h) {
            const int c = h & 3, d = h >> 2;
            const int aa = ((b == 0 ? a + c : a - c) % 4 + 4) % 4;
            const int bb = (b + d) & 1;
            t[static_cast<size_t>(g) * 8 + h] = bb * 4 + aa;
        }
    }
    return FiniteGroup(8, std::move(t), 0);
}

// Unit quaternions {1,-1,i,-i,j,-j,k,-k}; index pairs (axis, sign).
FiniteGroup quaternion8() {
    // axis 0 = 1, 1 = i, 2 = j, 3 = k; element index = 2*axis + (sign<0)
    auto idx = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
    // multiplication of the basis units
    auto unit_mul = [](int a, int b, int& axis, int& sign) {
        static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        axis = ax[a][b];
        sign = sg[a][b];
    };
    std::vector<int> t(64);
    for (int g = 0; g < 8; ++g) {
        const int ga = g / 2, gs = (g % 2 == 0) ? 1 : -1;
        for (int h = 0; h < 8; ++h) {
            const int ha = h / 2, hs = (h % 2 == 0) ? 1 : -1;
            int axis, sign;
            unit_mul(ga, ha, axis, sign);
            t[static_cast<size_t>(g) * 8 + h] = idx(axis, sign * gs * hs);
        }
    }
    return FiniteGroup(8, std::move(t), 0);
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'Z' && name != "Z2xZ2") {
        try {
            size_t used = 0;
            const int n = std::stoi(name.substr(1), &used);
            if (used == name.size() - 1 && n >= 1 && n <= 12) return cyclic(n);
        } catch (const std::exception&) {
            // fall through to UnknownGroup
        }
    }
    if (name == "Z2xZ2") return klein_four();
    if (name == "S3") return symmetric(3);
    if (name == "S4") return symmetric(4);
    if (name == "D4") return dihedral4();
    if (name == "Q8") return quaternion8();
    throw UnknownGroup("unknown builtin group: " + name);
}

namespace {

void require_subgroup(const FiniteGroup& g, const std::vector<int>& subset) {
    std::vector<char> member(g.order(), 0);
    for (int s : subset) {
        if (s < 0 || s >= g.order()) throw SubgroupError("subset element out of range");
        member[s] = 1;
    }
    if (!member[g.identity()]) throw SubgroupError("subset does not contain the identity");
    for (int a : subset) {
        if (!member[g.inv(a)]) {
            throw SubgroupError("subset not closed under inverses at " + std::to_string(a));
        }
        for (int b : subset) {
            if (!member[g.mul(a, b)]) {
                throw SubgroupError("subset not closed under product at " + witness(a, b));
            }
        }
    }
}

}  // namespace

bool is_normal(const FiniteGroup& g, const std::vector<int>& subset) {
    require_subgroup(g, subset);
    std::vector<char> member(g.order(), 0);
    for (int s : subset) member[s] = 1;
    for (int x = 0; x < g.order(); ++x) {
        for (int u : subset) {
            if (!member[g.mul(g.mul(x, u), g.inv(x))]) return false;
        }
    }
    return true;
}

std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int a = 0; a < g.order(); ++a) {
        bool central = true;
        for (int b = 0; b < g.order() && central; ++b) {
            central = g.mul(a, b) == g.mul(b, a);
        }
        if (central) z.push_back(a);
    }
    return z;
}

QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal_subgroup) {
    if (!is_normal(g, normal_subgroup)) {
        throw SubgroupError("quotient_group: subgroup is not normal");
    }
    const int n = g.order();
    std::vector<int> coset_of(n, -1);
    std::vector<int> section;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        const int c = static_cast<int>(section.size());
        section.push_back(x);  // least index in the coset, by scan order
        for (int u : normal_subgroup) coset_of[g.mul(x, u)] = c;
    }
    const int q = static_cast<int>(section.size());
    std::vector<int> table(static_cast<size_t>(q) * q);
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            table[static_cast<size_t>(a) * q + b] = coset_of[g.mul(section[a], section[b])];
        }
    }
    return {FiniteGroup(q, std::move(table), coset_of[g.identity()]), std::move(coset_of),
            std::move(section)};
}

FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw NotAGroup("relabel: permutation size mismatch");
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            t[static_cast<size_t>(perm[a]) * n + perm[b]] = perm[g.mul(a, b)];
        }
    }
    return FiniteGroup(n, std::move(t), perm[g.identity()]);
}

}  // namespace spinrep
