#include "graphonlab/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace glab {

namespace {

double flat_circle(int a, int b, int N) {
    int diff = std::abs(a - b);
    return static_cast<double>(std::min(diff, N - diff)) / static_cast<double>(N);
}

// cos(2*pi*m/N) for a residue m, evaluated at min(m, N-m) so that the result
// is bitwise even under negation mod N.
double cos_residue(long long m, int N) {
    m %= N;
    if (m < 0) m += N;
    long long folded = std::min(m, static_cast<long long>(N) - m);
    return std::cos(2.0 * std::numbers::pi * static_cast<double>(folded) /
                    static_cast<double>(N));
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

std::vector<int> GroupMorphism::image() const {
    std::set<int> img(map.begin(), map.end());
    return {img.begin(), img.end()};
}

GroupModel cyclic_group(int N) {
    if (N < 1) throw std::invalid_argument("cyclic_group: N must be >= 1");
    GroupModel G;
    G.order = N;
    G.op = [N](int a, int b) { return (a + b) % N; };
    G.identity = 0;
    G.inv = [N](int a) { return (N - a) % N; };
    G.haar_weights.assign(N, 1.0 / static_cast<double>(N));
    G.metric = [N](int a, int b) { return flat_circle(a, b, N); };
    G.kind = "cyclic";
    G.params = {N};
    return G;
}

int torus_index(const std::vector<int>& digits, int k, int N) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * N + digits[i];
    return idx;
}

std::vector<int> torus_digits(int index, int k, int N) {
    std::vector<int> d(k);
    for (int i = k - 1; i >= 0; --i) {
        d[i] = index % N;
        index /= N;
    }
    return d;
}

GroupModel torus_group(int k, int N) {
    if (k < 1 || N < 1) throw std::invalid_argument("torus_group: need k >= 1 and N >= 1");
    double order_d = std::pow(static_cast<double>(N), k);
    if (order_d > 1 << 24) throw std::invalid_argument("torus_group: carrier too large");
    int order = 1;
    for (int i = 0; i < k; ++i) order *= N;

    GroupModel G;
    G.order = order;
    G.op = [k, N](int a, int b) {
        auto da = torus_digits(a, k, N), db = torus_digits(b, k, N);
        for (int i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % N;
        return torus_index(da, k, N);
    };
    G.identity = 0;
    G.inv = [k, N](int a) {
        auto d = torus_digits(a, k, N);
        for (int i = 0; i < k; ++i) d[i] = (N - d[i]) % N;
        return torus_index(d, k, N);
    };
    G.haar_weights.assign(order, 1.0 / static_cast<double>(order));
    // Euclidean length of componentwise flat distances, diameter rescaled to 1.
    G.metric = [k, N](int a, int b) {
        auto da = torus_digits(a, k, N), db = torus_digits(b, k, N);
        double s = 0.0;
        for (int i = 0; i < k; ++i) {
            double f = flat_circle(da[i], db[i], N);
            s += f * f;
        }
        return std::sqrt(s) / (std::sqrt(static_cast<double>(k)) / 2.0);
    };
    G.kind = "torus";
    G.params = {k, N};
    return G;
}

GroupModel table_group(std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("table_group: empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("table_group: table must be square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("table_group: entry out of range");
    }
    // identity
    int e = -1;
    for (int c = 0; c < n; ++c) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
        if (ok) {
            e = c;
            break;
        }
    }
    if (e < 0) throw std::invalid_argument("table_group: no identity element");
    // inverses
    std::vector<int> inv(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (table[x][y] == e && table[y][x] == e) {
                inv[x] = y;
                break;
            }
        if (inv[x] < 0) throw std::invalid_argument("table_group: element without inverse");
    }
    // associativity, full check at desk scale
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("table_group: operation not associative");

    // Conjugacy classes, merged with inverse classes, give a symmetric class
    // function c with c(e)=0; the induced d(x,y) = c(x y^{-1}) is bi-invariant.
    std::vector<int> cls(n, -1);
    int num_cls = 0;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        std::vector<int> todo{x, inv[x]};
        while (!todo.empty()) {
            int y = todo.back();
            todo.pop_back();
            if (cls[y] >= 0) continue;
            cls[y] = num_cls;
            todo.push_back(inv[y]);
            for (int g = 0; g < n; ++g) todo.push_back(table[table[g][y]][inv[g]]);
        }
        ++num_cls;
    }
    std::vector<double> class_value(num_cls, 0.0);
    int nontrivial = num_cls - 1;
    for (int c = 0, rank = 0; c < num_cls; ++c)
        if (c != cls[e]) class_value[c] = static_cast<double>(++rank) / nontrivial;

    GroupModel G;
    G.order = n;
    G.table = table;
    G.op = [table](int a, int b) { return table[a][b]; };
    G.identity = e;
    G.inv = [inv](int a) { return inv[a]; };
    G.haar_weights.assign(n, 1.0 / static_cast<double>(n));
    G.metric = [table, inv, cls, class_value](int x, int y) {
        return class_value[cls[table[x][inv[y]]]];
    };
    G.kind = "table";
    return G;
}

std::vector<std::vector<int>> symmetric_group_table(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("symmetric_group_table: need 1 <= n <= 6");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    const int m = static_cast<int>(perms.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            table[a][b] = index[c];
        }
    return table;
}

GroupMorphism make_morphism(GroupModel source, GroupModel target, std::vector<int> map) {
    if (static_cast<int>(map.size()) != source.order)
        throw std::invalid_argument("morphism map must cover the source carrier");
    for (int t : map)
        if (t < 0 || t >= target.order)
            throw std::invalid_argument("morphism map value outside target carrier");
    if (map[source.identity] != target.identity)
        throw std::invalid_argument("morphism must send identity to identity");
    for (int a = 0; a < source.order; ++a)
        for (int b = 0; b < source.order; ++b)
            if (map[source.op(a, b)] != target.op(map[a], map[b]))
                throw std::invalid_argument("map is not a group homomorphism");
    return GroupMorphism{std::move(source), std::move(target), std::move(map)};
}

std::vector<double> biinvariant_profile(const GroupModel& G) {
    std::vector<double> f(G.order);
    for (int x = 0; x < G.order; ++x) f[x] = G.metric(x, G.identity);
    return f;
}

Graphon cayley_graphon(const GroupModel& G, const std::vector<double>& profile) {
    if (static_cast<int>(profile.size()) != G.order)
        throw std::invalid_argument("cayley_graphon: profile must cover the carrier");
    for (int x = 0; x < G.order; ++x) {
        if (!(profile[x] >= 0.0 && profile[x] <= 1.0))
            throw std::invalid_argument("cayley_graphon: profile values must lie in [0,1]");
        if (std::abs(profile[x] - profile[G.inv(x)]) > 1e-12)
            throw std::invalid_argument("cayley_graphon: profile must satisfy f(x) = f(x^-1)");
    }
    // Canonical representative per {z, z^-1} pair keeps the kernel exactly
    // symmetric even when f(z) and f(z^-1) differ in the last ulp.
    auto f = [&](int z) { return profile[std::min(z, G.inv(z))]; };
    Eigen::MatrixXd k(G.order, G.order);
    for (int x = 0; x < G.order; ++x)
        for (int y = 0; y < G.order; ++y) k(x, y) = f(G.op(x, G.inv(y)));
    return make_graphon(WeightedGrid::make(G.haar_weights), std::move(k));
}

std::vector<double> winding_kernel_profile(int k, const std::vector<long long>& exponents,
                                           int N) {
    if (N < 1) throw std::invalid_argument("winding_kernel_profile: N must be >= 1");
    if (static_cast<int>(exponents.size()) != k)
        throw std::invalid_argument("winding_kernel_profile: need exactly k exponents");
    for (long long n : exponents)
        if (n <= 0) throw std::invalid_argument("winding_kernel_profile: exponents must be positive");

    std::vector<long long> freq{1};
    long long prod = 1;
    for (long long n : exponents) {
        prod = (prod * (n % N)) % N;
        freq.push_back(prod);
    }
    std::vector<double> f(N);
    for (int j = 0; j < N; ++j) {
        double s = static_cast<double>(k + 1);
        for (long long a : freq) s += cos_residue(a * j, N);
        f[j] = s / (2.0 * (k + 1));
    }
    return f;
}

std::vector<double> torus_limit_profile(int k, int N) {
    if (k < 1) throw std::invalid_argument("torus_limit_profile: k must be >= 1");
    GroupModel T = torus_group(k + 1, N);
    std::vector<double> f(T.order);
    for (int x = 0; x < T.order; ++x) {
        auto digits = torus_digits(x, k + 1, N);
        double s = static_cast<double>(k + 1);
        for (int d : digits) s += cos_residue(d, N);
        f[x] = s / (2.0 * (k + 1));
    }
    return f;
}

GroupMorphism winding_morphism(int N, const std::vector<long long>& exponents) {
    const int k = static_cast<int>(exponents.size());
    GroupModel source = cyclic_group(N);
    GroupModel target = torus_group(k + 1, N);
    std::vector<int> map(N);
    for (int j = 0; j < N; ++j) {
        std::vector<int> digits{j};
        long long prod = 1;
        for (long long n : exponents) {
            prod = (prod * (n % N)) % N;
            digits.push_back(static_cast<int>((prod * j) % N));
        }
        map[j] = torus_index(digits, k + 1, N);
    }
    return make_morphism(std::move(source), std::move(target), std::move(map));
}

GroupMorphism padic_tower(int p, int m, int N) {
    if (!is_prime(p)) throw std::invalid_argument("padic_tower: p must be prime");
    if (m < 0) throw std::invalid_argument("padic_tower: m must be nonnegative");
    long long pm = 1;
    for (int i = 0; i < m; ++i) {
        pm *= p;
        if (pm > N) throw std::invalid_argument("padic_tower: p^m must divide N");
    }
    if (N % pm != 0) throw std::invalid_argument("padic_tower: p^m must divide N");
    const int step = static_cast<int>(N / pm);
    std::vector<int> map(pm);
    for (int j = 0; j < pm; ++j) map[j] = (j * step) % N;
    return make_morphism(cyclic_group(static_cast<int>(pm)), cyclic_group(N), std::move(map));
}

std::vector<double> pushforward_measure(const std::vector<int>& map,
                                        const std::vector<double>& weights, int target_size) {
    if (map.size() != weights.size())
        throw std::invalid_argument("pushforward_measure: map must cover the source weights");
    std::vector<double> out(target_size, 0.0);
    for (std::size_t s = 0; s < map.size(); ++s) {
        if (map[s] < 0 || map[s] >= target_size)
            throw std::invalid_argument("pushforward_measure: map value out of range");
        out[map[s]] += weights[s];
    }
    return out;
}

Graphon pullback_graphon(const GroupMorphism& phi, const Graphon& g) {
    if (static_cast<int>(g.size()) != phi.target.order)
        throw std::invalid_argument("pullback_graphon: graphon must live on the morphism target");
    const int n = phi.source.order;
    Eigen::MatrixXd k(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) k(x, y) = g.kernel(phi.map[x], phi.map[y]);
    WeightedGrid grid = WeightedGrid::make(phi.source.haar_weights);
    return g.is_signed ? make_signed_graphon(std::move(grid), std::move(k))
                       : make_graphon(std::move(grid), std::move(k));
}

Graphon induce_graphon(const Graphon& g, int m) {
    if (m < 1) throw std::invalid_argument("induce_graphon: m must be >= 1");
    const int n = static_cast<int>(g.size());
    std::vector<double> weights(static_cast<std::size_t>(n) * m);
    for (int s = 0; s < m; ++s)
        for (int i = 0; i < n; ++i)
            weights[static_cast<std::size_t>(s) * n + i] = g.grid.weights[i] / m;
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n) * m,
                                              static_cast<Eigen::Index>(n) * m);
    for (int s = 0; s < m; ++s)
        k.block(static_cast<Eigen::Index>(s) * n, static_cast<Eigen::Index>(s) * n, n, n) =
            g.kernel;
    WeightedGrid grid = WeightedGrid::make(std::move(weights));
    return g.is_signed ? make_signed_graphon(std::move(grid), std::move(k))
                       : make_graphon(std::move(grid), std::move(k));
}

}  // namespace glab
