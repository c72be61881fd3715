#pragma once

#include "sct/cyclo.hpp"
#include "sct/group.hpp"

#include <map>
#include <mutex>

namespace sct {

// Exact irreducible character table of a recognized group, plus the class
// data every supercharacter computation leans on: class sizes, the
// inverse-class permutation, and the element-level structure constants of
// the class algebra (class_product below).
//
// Row 0 is always the trivial character.  Class 0 is always {e}.
struct CharacterTable {
    GroupPtr group;
    SetPartition classes;            // conjugacy classes, over elements
    std::vector<int> class_rep;      // minimal element of each class
    std::vector<long> class_size;
    std::vector<int> inverse_class;  // class index of the set of inverses
    std::vector<std::vector<Cyclo>> rows;
    std::vector<long> degrees;
    std::vector<std::string> names;
    std::vector<long long> class_products;  // flat [i][j][k]

    int num_classes() const { return (int)class_rep.size(); }
    int num_rows() const { return (int)rows.size(); }
    int class_of(int element) const { return classes.block_of(element); }
    const Cyclo& value(int row, int cls) const { return rows[row][cls]; }

    // Coefficient of any fixed element of class k in the product of the class
    // sums of classes i and j.
    long long class_product(int i, int j, int k) const {
        int C = num_classes();
        return class_products[(i * C + j) * C + k];
    }

    int row_named(const std::string& name) const {
        for (int r = 0; r < num_rows(); ++r)
            if (names[r] == name) return r;
        return -1;
    }

    int row_of_values(const std::vector<Cyclo>& values) const {
        for (int r = 0; r < num_rows(); ++r)
            if (rows[r] == values) return r;
        return -1;
    }
};

using TablePtr = std::shared_ptr<const CharacterTable>;

namespace detail {

inline void finish_table(CharacterTable& t) {
    const FiniteGroup& g = *t.group;
    int C = t.classes.size();
    t.class_rep.resize(C);
    t.class_size.resize(C);
    for (int c = 0; c < C; ++c) {
        t.class_rep[c] = t.classes.block(c)[0];
        t.class_size[c] = (long)t.classes.block(c).size();
    }
    internal_check(t.class_rep[0] == 0, "table: class 0 must be the identity class");
    t.inverse_class.resize(C);
    for (int c = 0; c < C; ++c) {
        t.inverse_class[c] = t.classes.block_of(g.inv[t.class_rep[c]]);
        for (int e : t.classes.block(c))
            internal_check(t.classes.block_of(g.inv[e]) == t.inverse_class[c],
                           "table: classes not closed under inversion");
    }

    internal_check((int)t.rows.size() == C, "table: row/class count mismatch");
    t.degrees.resize(t.rows.size());
    Int degree_square_sum = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        auto d = t.rows[r][0].as_integer();
        internal_check(d.has_value() && *d > 0, "table: degree is not a positive integer");
        t.degrees[r] = (long)*d;
        degree_square_sum += *d * *d;
    }
    internal_check(degree_square_sum == g.order, "table: sum of squared degrees != |G|");
    internal_check(t.names[0] == "1" && t.degrees[0] == 1, "table: row 0 must be trivial");

    // Element-level class algebra constants: for z in class k, the number of
    // factorizations z = x*y with x in class i, y in class j.  Constancy over
    // the class is rechecked here.
    t.class_products.assign((std::size_t)C * C * C, 0);
    std::vector<long long> coeff(g.order);
    for (int i = 0; i < C; ++i)
        for (int j = 0; j < C; ++j) {
            std::fill(coeff.begin(), coeff.end(), 0);
            for (int x : t.classes.block(i))
                for (int y : t.classes.block(j)) ++coeff[g.at(x, y)];
            for (int k = 0; k < C; ++k) {
                long long v = coeff[t.class_rep[k]];
                for (int e : t.classes.block(k))
                    internal_check(coeff[e] == v, "table: class product not class-constant");
                t.class_products[(i * C + j) * C + k] = v;
            }
        }
}

inline TablePtr build_cyclic_table(const GroupPtr& g) {
    long n = g->n;
    auto t = std::make_shared<CharacterTable>();
    t->group = g;
    t->classes = conjugacy_classes(*g);  // all singletons
    t->rows.resize(n);
    t->names.resize(n);
    for (long m = 0; m < n; ++m) {
        t->rows[m].resize(n);
        for (long k = 0; k < n; ++k) t->rows[m][k] = Cyclo::zeta_pow(n, m * k);
        t->names[m] = m == 0 ? "1" : "xi_" + std::to_string(m);
    }
    finish_table(*t);
    return t;
}

inline TablePtr build_dihedral_table(const GroupPtr& g) {
    long n = g->n;
    int N = (int)n;
    auto t = std::make_shared<CharacterTable>();
    t->group = g;
    t->classes = conjugacy_classes(*g);

    // Value of each named character on a single element, straight from the
    // closed forms; 2cos(2 pi km / n) is realized exactly as z^km + z^-km.
    auto push_row = [&](const std::string& name, const std::function<Cyclo(int)>& f) {
        std::vector<Cyclo> row(t->classes.size());
        for (int c = 0; c < t->classes.size(); ++c) {
            row[c] = f(t->classes.block(c)[0]);
            for (int e : t->classes.block(c))
                internal_check(f(e) == row[c], "dihedral table: value not class-constant");
        }
        t->rows.push_back(std::move(row));
        t->names.push_back(name);
    };
    auto one = Cyclo::integer(1);
    auto neg_one = Cyclo::integer(-1);
    push_row("1", [&](int) { return one; });
    push_row("lambda", [&](int e) { return e < N ? one : neg_one; });
    if (n % 2 == 0) {
        auto sign = [&](long k) { return k % 2 == 0 ? one : neg_one; };
        push_row("mu0", [&](int e) { return e < N ? sign(e) : sign(e - N); });
        push_row("mu1", [&](int e) { return e < N ? sign(e) : sign(e - N + 1); });
    }
    long top = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
    for (long m = 1; m <= top; ++m)
        push_row("chi_" + std::to_string(m), [&](int e) {
            if (e >= N) return Cyclo::integer(0);
            return Cyclo::zeta_pow(n, (long)e * m) + Cyclo::zeta_pow(n, -(long)e * m);
        });
    finish_table(*t);
    return t;
}

}  // namespace detail

inline TablePtr table_cyclic(long n) { return detail::build_cyclic_table(make_cyclic(n)); }
inline TablePtr table_dihedral(long n) { return detail::build_dihedral_table(make_dihedral(n)); }

// Table for an already-constructed cyclic or dihedral group.  Memoized by
// family and parameter; tables are immutable so sharing is safe.
inline TablePtr standard_table(const GroupPtr& g) {
    static std::mutex mtx;
    static std::map<std::pair<int, long>, TablePtr> cache;
    detail::require(is_cyclic(*g) || is_dihedral(*g),
                    "standard_table: cyclic or dihedral group required");
    std::pair<int, long> key{is_cyclic(*g) ? 0 : 1, g->n};
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TablePtr t = is_cyclic(*g) ? detail::build_cyclic_table(g) : detail::build_dihedral_table(g);
    cache.emplace(key, t);
    return t;
}

// Kronecker product of tables over the direct product group: rows and
// classes are pairs, values multiply.  Row (i, j) sits at index i * |rows of
// TH| + j, so row 0 stays trivial.
inline TablePtr table_product(const TablePtr& TG, const TablePtr& TH,
                              const DirectProduct* prebuilt = nullptr) {
    DirectProduct dp = prebuilt ? *prebuilt : direct_product(TG->group, TH->group);
    auto t = std::make_shared<CharacterTable>();
    t->group = dp.group;
    t->classes = conjugacy_classes(*dp.group);
    int C = t->classes.size();
    detail::internal_check(C == TG->num_classes() * TH->num_classes(),
                           "table_product: class count mismatch");
    int nH = TH->group->order;
    for (int i = 0; i < TG->num_rows(); ++i)
        for (int j = 0; j < TH->num_rows(); ++j) {
            std::vector<Cyclo> row(C);
            for (int c = 0; c < C; ++c) {
                int rep = t->classes.block(c)[0];
                row[c] = TG->value(i, TG->class_of(rep / nH)) * TH->value(j, TH->class_of(rep % nH));
            }
            t->rows.push_back(std::move(row));
            t->names.push_back(i == 0 && j == 0 ? "1" : TG->names[i] + "*" + TH->names[j]);
        }
    detail::finish_table(*t);
    return t;
}

// |G| <a, b> = sum over classes K of |K| a(K) b(K^-1-class), exactly.  For
// irreducible rows this is |G| times the usual inner product, so it stays in
// the cyclotomic integers.
inline Cyclo inner_product_scaled(const CharacterTable& t, const std::vector<Cyclo>& a,
                                  const std::vector<Cyclo>& b) {
    detail::require((int)a.size() == t.num_classes() && (int)b.size() == t.num_classes(),
                    "inner_product_scaled: vector length mismatch");
    Cyclo sum;
    for (int c = 0; c < t.num_classes(); ++c)
        sum += Int(t.class_size[c]) * (a[c] * b[t.inverse_class[c]]);
    return sum;
}

// Restriction of a row of the parent table to a standard subgroup, as a
// value vector over the subgroup's classes.
inline std::vector<Cyclo> restrict_row(const CharacterTable& parent, const Subgroup& N,
                                       const CharacterTable& sub_table, int row) {
    detail::require(same_group(parent.group, N.parent), "restrict_row: group mismatch");
    std::vector<Cyclo> v(sub_table.num_classes());
    for (int c = 0; c < sub_table.num_classes(); ++c)
        v[c] = parent.value(row, parent.class_of(N.embed.map[sub_table.class_rep[c]]));
    return v;
}

// Inflation of a row of the quotient table along the projection, as a value
// vector over the parent's classes.
inline std::vector<Cyclo> inflate_row(const CharacterTable& parent, const Quotient& Q,
                                      const CharacterTable& quot_table, int row) {
    detail::require(same_group(parent.group, Q.parent), "inflate_row: group mismatch");
    std::vector<Cyclo> v(parent.num_classes());
    for (int c = 0; c < parent.num_classes(); ++c)
        v[c] = quot_table.value(row, quot_table.class_of(Q.proj.map[parent.class_rep[c]]));
    return v;
}

// Rows of the parent with nonzero inner product against the given character
// of a standard subgroup -- Frobenius reciprocity, never direct induction.
inline std::vector<int> induced_constituents(const CharacterTable& parent, const Subgroup& N,
                                             const CharacterTable& sub_table, int chi_row) {
    std::vector<int> result;
    for (int r = 0; r < parent.num_rows(); ++r) {
        Cyclo ip = inner_product_scaled(sub_table, restrict_row(parent, N, sub_table, r),
                                        sub_table.rows[chi_row]);
        auto as_int = ip.as_integer();
        detail::internal_check(as_int.has_value() && *as_int % N.std_group->order == 0,
                               "induced_constituents: reciprocity value not integral");
        if (*as_int != 0) result.push_back(r);
    }
    return result;
}

// Extended index convention for chi_a on a dihedral table: a is normalized
// to min(a mod n, n - a mod n); index 0 resolves to {1, lambda} and n/2 (for
// even n) to {mu0, mu1}, matching chi_0 = 1 + lambda and chi_{n/2} = mu0 + mu1.
inline std::vector<int> resolve_chi(const CharacterTable& t, long a) {
    detail::require(is_dihedral(*t.group), "resolve_chi: dihedral table required");
    long n = t.group->n;
    long m = mod_norm(a, n);
    m = std::min(m, n - m);
    if (m == 0) return {0, 1};
    if (n % 2 == 0 && m == n / 2) return {2, 3};
    int base = n % 2 == 0 ? 4 : 2;
    return {base + (int)m - 1};
}

}  // namespace sct
