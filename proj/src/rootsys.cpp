#include "satkit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

namespace satkit {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void link(std::vector<std::vector<int>>& a, int i, int j, int aij, int aji) {
    a[i - 1][j - 1] = aij;
    a[j - 1][i - 1] = aji;
}

}  // namespace

void validate_component(const SimpleComponent& c) {
    const int n = c.rank;
    bool ok = false;
    switch (c.type) {
        case CartanType::A: ok = n >= 1 && n <= 16; break;
        case CartanType::B: ok = n >= 2 && n <= 16; break;
        case CartanType::C: ok = n >= 2 && n <= 16; break;
        case CartanType::D: ok = n >= 3 && n <= 16; break;
        case CartanType::E: ok = n >= 6 && n <= 8; break;
        case CartanType::F: ok = n == 4; break;
        case CartanType::G: ok = n == 2; break;
    }
    if (!ok) throw UnsupportedType("no supported root system of type " + c.str());
}

std::vector<std::vector<int>> cartan_matrix(const SimpleComponent& c) {
    validate_component(c);
    const int n = c.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    switch (c.type) {
        case CartanType::A:
            for (int i = 1; i < n; ++i) link(a, i, i + 1, -1, -1);
            break;
        case CartanType::B:
            for (int i = 1; i < n - 1; ++i) link(a, i, i + 1, -1, -1);
            link(a, n - 1, n, -1, -2);  // alpha_n short
            break;
        case CartanType::C:
            for (int i = 1; i < n - 1; ++i) link(a, i, i + 1, -1, -1);
            link(a, n - 1, n, -2, -1);  // alpha_n long
            break;
        case CartanType::D:
            for (int i = 1; i < n - 1; ++i) link(a, i, i + 1, -1, -1);
            link(a, n - 2, n, -1, -1);
            break;
        case CartanType::E:
            link(a, 1, 3, -1, -1);
            link(a, 2, 4, -1, -1);
            for (int i = 3; i < n; ++i) link(a, i, i + 1, -1, -1);
            break;
        case CartanType::F:
            link(a, 1, 2, -1, -1);
            link(a, 2, 3, -1, -2);  // alpha_1, alpha_2 long
            link(a, 3, 4, -1, -1);
            break;
        case CartanType::G:
            link(a, 1, 2, -3, -1);  // alpha_1 short
            break;
    }
    return a;
}

std::vector<int> fundamental_degrees(const SimpleComponent& c) {
    validate_component(c);
    const int n = c.rank;
    std::vector<int> d;
    switch (c.type) {
        case CartanType::A:
            for (int i = 2; i <= n + 1; ++i) d.push_back(i);
            break;
        case CartanType::B:
        case CartanType::C:
            for (int i = 1; i <= n; ++i) d.push_back(2 * i);
            break;
        case CartanType::D:
            for (int i = 1; i <= n - 1; ++i) d.push_back(2 * i);
            d.push_back(n);
            break;
        case CartanType::E:
            if (n == 6) d = {2, 5, 6, 8, 9, 12};
            if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
            if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
        case CartanType::F: d = {2, 6, 8, 12}; break;
        case CartanType::G: d = {2, 6}; break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

Integer weyl_group_order(const SimpleComponent& c) {
    validate_component(c);
    const int n = c.rank;
    switch (c.type) {
        case CartanType::A: return factorial(n + 1);
        case CartanType::B:
        case CartanType::C: return (Integer(1) << n) * factorial(n);
        case CartanType::D: return (Integer(1) << (n - 1)) * factorial(n);
        case CartanType::E:
            if (n == 6) return 51840;
            if (n == 7) return 2903040;
            return 696729600;
        case CartanType::F: return 1152;
        case CartanType::G: return 12;
    }
    return 0;
}

namespace {

// Breadth-first closure by height: beta + alpha_i is a root iff the
// alpha_i-string through beta extends upward, q = p - <beta, alpha_i^vee> > 0.
std::vector<RootVector> close_positive_roots(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    std::set<RootVector> known;
    std::vector<RootVector> layer;
    for (int i = 0; i < n; ++i) {
        RootVector e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        known.insert(e);
    }
    std::vector<RootVector> all = layer;
    while (!layer.empty()) {
        std::set<RootVector> next;
        for (const RootVector& beta : layer) {
            for (int i = 0; i < n; ++i) {
                int p = 0;
                RootVector down = beta;
                for (;;) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += beta[j] * a[i][j];
                if (p - pairing > 0) {
                    RootVector up = beta;
                    up[i] += 1;
                    if (!known.count(up)) next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        for (const RootVector& r : layer) {
            known.insert(r);
            all.push_back(r);
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const RootVector& x, const RootVector& y) {
        const int hx = height(x);
        const int hy = height(y);
        return hx != hy ? hx < hy : x < y;
    });
    return all;
}

std::vector<std::vector<int>> submatrix(const std::vector<std::vector<int>>& a, const std::vector<int>& idx) {
    std::vector<std::vector<int>> s(idx.size(), std::vector<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) s[i][j] = a[idx[i] - 1][idx[j] - 1];
    }
    return s;
}

// Connected components of the Dynkin diagram restricted to `nodes`.
std::vector<std::vector<int>> diagram_components(const std::vector<std::vector<int>>& a, const SimpleRootSet& nodes) {
    std::vector<std::vector<int>> comps;
    std::set<int> seen;
    for (int start : nodes) {
        if (seen.count(start)) continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : nodes) {
                if (!seen.count(w) && a[v - 1][w - 1] != 0) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    return comps;
}

}  // namespace

SimpleComponent identify_component(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw UnsupportedType("empty Cartan matrix");
    if (n == 1) return {CartanType::A, 1};

    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    int max_bond = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (a[i][j] == 0 && a[j][i] == 0) continue;
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++edges;
            max_bond = std::max(max_bond, a[i][j] * a[j][i]);
        }
    }
    auto reject = [&]() -> SimpleComponent {
        throw UnsupportedType("Cartan matrix of rank " + std::to_string(n) + " is not of finite type");
    };
    if (edges != n - 1) reject();

    if (max_bond == 3) {
        if (n != 2) reject();
        return {CartanType::G, 2};
    }

    std::vector<int> branch;
    for (int i = 0; i < n; ++i) {
        if (adj[i].size() > 3) reject();
        if (adj[i].size() == 3) branch.push_back(i);
    }

    if (max_bond == 2) {
        if (!branch.empty()) reject();
        if (n == 2) return {CartanType::B, 2};
        int di = -1;
        int dj = -1;
        for (int i = 0; i < n && di < 0; ++i) {
            for (int j : adj[i]) {
                if (a[i][j] * a[j][i] == 2) {
                    di = i;
                    dj = j;
                    break;
                }
            }
        }
        const bool i_end = adj[di].size() == 1;
        const bool j_end = adj[dj].size() == 1;
        if (!i_end && !j_end) {
            if (n != 4) reject();
            return {CartanType::F, 4};
        }
        const int end = i_end ? di : dj;
        const int other = i_end ? dj : di;
        // a_{end,other} == -2 means the end node is the short one: B_n.
        return {a[end][other] == -2 ? CartanType::B : CartanType::C, n};
    }

    if (branch.empty()) return {CartanType::A, n};
    if (branch.size() > 1) reject();
    std::vector<int> legs;
    const int centre = branch.front();
    for (int first : adj[centre]) {
        int len = 1;
        int prev = centre;
        int cur = first;
        while (adj[cur].size() == 2) {
            const int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return {CartanType::D, n};
    if (legs == std::vector<int>{1, 2, 2}) return {CartanType::E, 6};
    if (legs == std::vector<int>{1, 2, 3}) return {CartanType::E, 7};
    if (legs == std::vector<int>{1, 2, 4}) return {CartanType::E, 8};
    return reject();
}

RootSystem::RootSystem(std::vector<SimpleComponent> components) : components_(std::move(components)) {
    int total = 0;
    for (const auto& c : components_) {
        validate_component(c);
        total += c.rank;
    }
    cartan_.assign(total, std::vector<int>(total, 0));
    int offset = 0;
    for (const auto& c : components_) {
        const auto block = cartan_matrix(c);
        for (int i = 0; i < c.rank; ++i) {
            for (int j = 0; j < c.rank; ++j) cartan_[offset + i][offset + j] = block[i][j];
        }
        const auto degs = fundamental_degrees(c);
        degrees_.insert(degrees_.end(), degs.begin(), degs.end());

        // The degree tables are transcribed by hand; check them against the
        // generated roots and the Weyl group order.
        const auto roots = close_positive_roots(block);
        const int exponent_sum = std::accumulate(degs.begin(), degs.end(), 0, [](int s, int d) { return s + d - 1; });
        Integer degree_product = 1;
        for (int d : degs) degree_product *= d;
        if (exponent_sum != static_cast<int>(roots.size()) || degree_product != weyl_group_order(c)) {
            throw InvariantViolation("degree table for " + c.str() + " disagrees with its root system");
        }
        offset += c.rank;
    }
    if (total > 0) positive_roots_ = close_positive_roots(cartan_);
}

RootSystem RootSystem::parse(std::string_view descriptor) {
    const std::string text = trim(descriptor);
    if (text.empty()) throw UnsupportedType("empty root system descriptor");
    std::vector<SimpleComponent> comps;
    for (const std::string& part : split(text, 'x')) {
        if (part.size() < 2 || std::string("ABCDEFG").find(part[0]) == std::string::npos ||
            !std::all_of(part.begin() + 1, part.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
            part.size() > 4) {
            throw UnsupportedType("malformed root system component '" + part + "' in \"" + text + "\"");
        }
        comps.push_back({static_cast<CartanType>(part[0]), std::stoi(part.substr(1))});
    }
    return RootSystem(std::move(comps));
}

Integer RootSystem::weyl_order() const {
    Integer order = 1;
    for (const auto& c : components_) order *= weyl_group_order(c);
    return order;
}

std::vector<RootVector> RootSystem::levi_positive_roots(const SimpleRootSet& levi) const {
    std::vector<RootVector> out;
    for (const RootVector& r : positive_roots_) {
        bool inside = true;
        for (int j = 0; j < rank() && inside; ++j) {
            if (r[j] != 0 && !levi.count(j + 1)) inside = false;
        }
        if (inside) out.push_back(r);
    }
    return out;
}

std::vector<SimpleComponent> RootSystem::levi_components(const SimpleRootSet& levi) const {
    std::vector<SimpleComponent> out;
    for (const auto& comp : diagram_components(cartan_, levi)) {
        out.push_back(identify_component(submatrix(cartan_, comp)));
    }
    return out;
}

std::string RootSystem::str() const {
    std::string s;
    for (const auto& c : components_) {
        if (!s.empty()) s += 'x';
        s += c.str();
    }
    return s;
}

LeviSubset::LeviSubset(const RootSystem& rs, SimpleRootSet subset) : subset_(std::move(subset)) {
    for (int i : subset_) {
        if (i < 1 || i > rs.rank()) {
            throw BadLevi("simple root index " + std::to_string(i) + " outside 1.." + std::to_string(rs.rank()) +
                          " for " + rs.str());
        }
    }
}

SimpleRootSet parse_index_list(std::string_view text) {
    SimpleRootSet out;
    const std::string body = trim(text);
    if (body.empty()) return out;
    auto to_int = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
            s.size() > 6) {
            throw BadLevi("malformed simple root index '" + s + "' in \"" + body + "\"");
        }
        return std::stoi(s);
    };
    for (const std::string& item : split(body, ',')) {
        const std::size_t dots = item.find("..");
        if (dots == std::string::npos) {
            out.insert(to_int(item));
        } else {
            const int lo = to_int(trim(item.substr(0, dots)));
            const int hi = to_int(trim(item.substr(dots + 2)));
            for (int i = lo; i <= hi; ++i) out.insert(i);
        }
    }
    return out;
}

LeviSubset LeviSubset::parse(const RootSystem& rs, std::string_view text) {
    const std::string body = trim(text);
    if (body.empty() || std::isdigit(static_cast<unsigned char>(body[0]))) {
        return LeviSubset(rs, parse_index_list(body));
    }
    // Type form: search subsets of the right size in lexicographic order.
    const RootSystem wanted = [&] {
        try {
            return RootSystem::parse(body);
        } catch (const UnsupportedType& e) {
            throw BadLevi("Levi type " + body + ": " + e.what());
        }
    }();
    auto key = [](std::vector<SimpleComponent> cs) {
        std::vector<std::string> k;
        for (const auto& c : cs) k.push_back(c.str());
        std::sort(k.begin(), k.end());
        return k;
    };
    const auto target = key(wanted.components());
    const int size = wanted.rank();
    const int n = rs.rank();
    if (size > n) throw BadLevi("no Levi subsystem of type " + body + " in " + rs.str());
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 1);
    for (;;) {
        const SimpleRootSet candidate(pick.begin(), pick.end());
        if (key(rs.levi_components(candidate)) == target) return LeviSubset(rs, candidate);
        int i = size - 1;
        while (i >= 0 && pick[i] == n - size + i + 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    throw BadLevi("no Levi subsystem of type " + body + " in " + rs.str());
}

std::vector<RootVector> positive_roots(const RootSystem& rs) { return rs.positive_roots(); }

int height(const RootVector& root) { return std::accumulate(root.begin(), root.end(), 0); }

LaurentPoly flag_poincare_heights(const RootSystem& rs, const LeviSubset& levi) {
    std::map<int, int> height_count;
    for (const RootVector& r : rs.positive_roots()) height_count[height(r)] += 1;
    for (const RootVector& r : rs.levi_positive_roots(levi.indices())) height_count[height(r)] -= 1;

    LaurentPoly num(1);
    LaurentPoly den(1);
    for (const auto& [h, count] : height_count) {
        num *= LaurentPoly::t_power_minus_one(h + 1).pow(count);
        den *= LaurentPoly::t_power_minus_one(h).pow(count);
    }
    try {
        return exact_div(num, den);
    } catch (const NotDivisible& e) {
        throw InternalDivisibility("height product for " + rs.str() + " does not clear: " + e.what());
    }
}

LaurentPoly flag_poincare_degrees(const RootSystem& rs, const LeviSubset& levi) {
    LaurentPoly num(1);
    for (int d : rs.degrees()) num *= LaurentPoly::t_power_minus_one(d);
    LaurentPoly den = LaurentPoly::t_power_minus_one(1).pow(static_cast<unsigned>(rs.rank()) -
                                                            static_cast<unsigned>(levi.indices().size()));
    for (const auto& c : rs.levi_components(levi.indices())) {
        for (int d : fundamental_degrees(c)) den *= LaurentPoly::t_power_minus_one(d);
    }
    try {
        return exact_div(num, den);
    } catch (const NotDivisible& e) {
        throw InternalDivisibility("degree quotient for " + rs.str() + " does not clear: " + e.what());
    }
}

}  // namespace satkit
