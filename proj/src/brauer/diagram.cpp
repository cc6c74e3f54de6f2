#include <algorithm>
#include <numeric>
#include <sstream>

#include "ffcenter/brauer.hpp"

namespace ffc {

namespace {

void check_m(int m) {
    if (m < 1 || m > kMaxStrands) throw std::invalid_argument("Brauer diagram size out of range");
}

void check_strands(int m, int i, int j) {
    check_m(m);
    if (i < 0 || j < 0 || i >= m || j >= m || i == j) throw std::invalid_argument("bad strand indices");
}

void join(BrauerDiagram& d, int a, int b) {
    d.partner[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    d.partner[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
}

}  // namespace

BrauerDiagram BrauerDiagram::identity(int m) {
    check_m(m);
    BrauerDiagram d;
    d.m = static_cast<std::uint8_t>(m);
    for (int i = 0; i < m; ++i) join(d, i, m + i);
    return d;
}

BrauerDiagram BrauerDiagram::s(int m, int i, int j) {
    check_strands(m, i, j);
    BrauerDiagram d = identity(m);
    join(d, i, m + j);
    join(d, j, m + i);
    return d;
}

BrauerDiagram BrauerDiagram::eps(int m, int i, int j) {
    check_strands(m, i, j);
    BrauerDiagram d = identity(m);
    join(d, i, j);
    join(d, m + i, m + j);
    return d;
}

BrauerDiagram BrauerDiagram::permutation(const std::vector<int>& perm) {
    int m = static_cast<int>(perm.size());
    check_m(m);
    BrauerDiagram d;
    d.m = static_cast<std::uint8_t>(m);
    for (int i = 0; i < m; ++i) join(d, i, m + perm[static_cast<std::size_t>(i)]);
    return d;
}

BrauerDiagram BrauerDiagram::from_pairs(int m, const std::vector<std::pair<int, int>>& pairs) {
    check_m(m);
    if (static_cast<int>(pairs.size()) != m) throw std::invalid_argument("not a perfect matching");
    BrauerDiagram d;
    d.m = static_cast<std::uint8_t>(m);
    std::vector<bool> seen(static_cast<std::size_t>(2 * m), false);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= 2 * m || b >= 2 * m || a == b || seen[a] || seen[b])
            throw std::invalid_argument("not a perfect matching");
        seen[a] = seen[b] = true;
        join(d, a, b);
    }
    return d;
}

bool BrauerDiagram::is_permutation() const { return hooks() == 0; }

int BrauerDiagram::hooks() const {
    int h = 0;
    for (int i = 0; i < m; ++i)
        if (partner[i] < m) ++h;
    return h / 2;
}

std::vector<std::pair<int, int>> BrauerDiagram::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < 2 * m; ++e)
        if (partner[e] > e) out.emplace_back(e, partner[e]);
    return out;
}

std::string BrauerDiagram::str() const {
    std::ostringstream os;
    for (auto [a, b] : pairs()) os << "(" << a + 1 << " " << b + 1 << ")";
    return os.str();
}

Composite compose(const BrauerDiagram& d1, const BrauerDiagram& d2) {
    if (d1.m != d2.m) throw SizeMismatch();
    const int m = d1.m;
    Composite out;
    out.diagram.m = d1.m;
    std::array<bool, kMaxStrands> middle{};
    // walk from an outer endpoint through the glued middle row until another outer endpoint
    auto walk = [&](int start) {
        bool in_top;
        int x;
        if (start < m) {
            x = d1.partner[start];
            if (x < m) return x;
            in_top = false;
            x -= m;
        } else {
            x = d2.partner[start];
            if (x >= m) return x;
            in_top = true;
        }
        for (;;) {
            middle[x] = true;
            if (in_top) {
                int y = d1.partner[m + x];
                if (y < m) return y;
                x = y - m;
            } else {
                int y = d2.partner[x];
                if (y >= m) return y;
                x = y;
            }
            in_top = !in_top;
        }
    };
    std::array<bool, 2 * kMaxStrands> done{};
    for (int e = 0; e < 2 * m; ++e) {
        if (done[e]) continue;
        int f = walk(e);
        done[e] = done[f] = true;
        out.diagram.partner[e] = static_cast<std::uint8_t>(f);
        out.diagram.partner[f] = static_cast<std::uint8_t>(e);
    }
    // remaining middle points form closed loops alternating between d1 and d2
    for (int k = 0; k < m; ++k) {
        if (middle[k]) continue;
        ++out.loops;
        int x = k;
        bool via_top = true;
        while (!middle[x]) {
            middle[x] = true;
            x = via_top ? d1.partner[m + x] - m : d2.partner[x];
            via_top = !via_top;
        }
    }
    return out;
}

}  // namespace ffc
