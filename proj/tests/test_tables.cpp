#include "sct/character_table.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sct;

namespace {

// Element-level orthogonality oracle: sum over group elements, not classes.
Cyclo element_inner_product(const CharacterTable& t, int r1, int r2) {
    const FiniteGroup& g = *t.group;
    Cyclo sum;
    for (int e = 0; e < g.order; ++e)
        sum += t.value(r1, t.class_of(e)) * t.value(r2, t.class_of(g.inv[e]));
    return sum;
}

void check_orthogonality(const CharacterTable& t) {
    for (int r1 = 0; r1 < t.num_rows(); ++r1)
        for (int r2 = 0; r2 < t.num_rows(); ++r2) {
            Cyclo expected = Cyclo::integer(r1 == r2 ? t.group->order : 0);
            CHECK(element_inner_product(t, r1, r2) == expected);
            CHECK(inner_product_scaled(t, t.rows[r1], t.rows[r2]) == expected);
        }
}

std::vector<Cyclo> row_product(const CharacterTable& t, int r1, int r2) {
    std::vector<Cyclo> v(t.num_classes());
    for (int c = 0; c < t.num_classes(); ++c) v[c] = t.value(r1, c) * t.value(r2, c);
    return v;
}

std::vector<Cyclo> chi_extended(const CharacterTable& t, long a) {
    std::vector<Cyclo> v(t.num_classes(), Cyclo());
    for (int r : resolve_chi(t, a))
        for (int c = 0; c < t.num_classes(); ++c) v[c] += t.value(r, c);
    return v;
}

std::vector<Cyclo> vec_sum(const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
    std::vector<Cyclo> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
    return v;
}

}  // namespace

TEST_CASE("cyclic tables") {
    auto t1 = table_cyclic(1);
    CHECK(t1->num_rows() == 1);
    CHECK(t1->value(0, 0) == Cyclo::integer(1));

    auto t4 = table_cyclic(4);
    CHECK(t4->value(2, 2) == Cyclo::integer(1));  // zeta_4^4 = 1

    check_orthogonality(*table_cyclic(5));
}

TEST_CASE("dihedral tables match the closed forms") {
    auto t5 = table_dihedral(5);
    int s_class = t5->class_of(5);
    CHECK(t5->names[2] == "chi_1");
    CHECK(t5->value(2, s_class) == Cyclo::integer(0));
    CHECK(t5->value(1, s_class) == Cyclo::integer(-1));  // lambda
    CHECK(t5->value(2, t5->class_of(1)) == Cyclo::zeta_pow(5, 1) + Cyclo::zeta_pow(5, 4));

    auto t6 = table_dihedral(6);
    int mu0 = t6->row_named("mu0");
    for (int k = 0; k < 6; ++k)
        CHECK(t6->value(mu0, t6->class_of(k)) == Cyclo::integer(k % 2 == 0 ? 1 : -1));
    CHECK(t6->value(mu0, t6->class_of(7)) == Cyclo::integer(-1));  // class of rs
    CHECK(t6->degrees == std::vector<long>{1, 1, 1, 1, 2, 2});

    // n = 2 degenerates to the Klein table: four linear rows, no chi rows.
    auto t2 = table_dihedral(2);
    CHECK(t2->num_rows() == 4);
    for (int r = 0; r < 4; ++r) {
        CHECK(t2->degrees[r] == 1);
        for (int c = 0; c < 4; ++c) {
            auto v = t2->value(r, c).as_integer();
            REQUIRE(v.has_value());
            CHECK((*v == 1 || *v == -1));
        }
    }

    for (long n = 1; n <= 12; ++n) check_orthogonality(*table_dihedral(n));
}

TEST_CASE("product tables") {
    auto t3 = table_cyclic(3);
    auto prod_with_trivial = table_product(t3, table_cyclic(1));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(prod_with_trivial->value(r, c) == t3->value(r, c));

    // Z_2 x Z_3 equals Z_6 after the CRT relabeling of columns; rows match by
    // value vectors (exhaustive matching).
    auto tp = table_product(table_cyclic(2), table_cyclic(3));
    auto t6 = table_cyclic(6);
    std::vector<int> crt(6);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 6; ++z)
                if (z % 2 == x && z % 3 == y) crt[x * 3 + y] = z;
    std::vector<char> row_used(6, 0);
    for (int r = 0; r < 6; ++r) {
        std::vector<Cyclo> relabeled(6);
        for (int p = 0; p < 6; ++p) relabeled[crt[p]] = tp->value(r, tp->class_of(p));
        int match = t6->row_of_values(relabeled);
        REQUIRE(match >= 0);
        CHECK(!row_used[match]);
        row_used[match] = 1;
    }

    // Klein group: all values +-1.
    auto klein = table_product(table_cyclic(2), table_cyclic(2));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK((*klein->value(r, c).as_integer() == 1 ||
                                           *klein->value(r, c).as_integer() == -1));
    check_orthogonality(*klein);
}

TEST_CASE("restriction, inflation, induced constituents") {
    auto td5 = table_dihedral(5);
    auto G5 = td5->group;
    Subgroup R5 = divisor_subgroup(G5, 1);
    auto tr5 = standard_table(R5.std_group);

    // <Res chi_1, xi_1> scaled by |<r>| = 5.
    std::vector<Cyclo> res = restrict_row(*td5, R5, *tr5, td5->row_named("chi_1"));
    CHECK(inner_product_scaled(*tr5, res, tr5->rows[1]) == Cyclo::integer(5));

    // induced_constituents(D_2n, <r>, xi_m) = {chi_m} for 0 < m < n/2.
    for (long n : {5L, 6L, 7L}) {
        auto td = table_dihedral(n);
        Subgroup R = divisor_subgroup(td->group, 1);
        auto tr = standard_table(R.std_group);
        for (long m = 1; 2 * m < n; ++m) {
            auto cons = induced_constituents(*td, R, *tr, (int)m);
            REQUIRE(cons.size() == 1);
            CHECK(td->names[cons[0]] == "chi_" + std::to_string(m));
        }
        // the trivial character of <r> induces 1 + lambda
        auto cons0 = induced_constituents(*td, R, *tr, 0);
        CHECK(cons0 == std::vector<int>{0, 1});
        if (n % 2 == 0) {
            auto consh = induced_constituents(*td, R, *tr, (int)(n / 2));
            CHECK(consh == std::vector<int>{td->row_named("mu0"), td->row_named("mu1")});
        }
    }

    // dimension count: Ind(xi) has degree [G:N] * deg(xi), distributed over
    // the constituents with reciprocity multiplicities.
    for (long n : {4L, 6L, 8L}) {
        auto td = table_dihedral(n);
        for (long d : divisors(n)) {
            Subgroup N = divisor_subgroup(td->group, d);
            auto tn = standard_table(N.std_group);
            long index = td->group->order / N.std_group->order;
            for (int chi = 0; chi < tn->num_rows(); ++chi) {
                Int total = 0;
                for (int r = 0; r < td->num_rows(); ++r) {
                    Cyclo ip = inner_product_scaled(*tn, restrict_row(*td, N, *tn, r),
                                                    tn->rows[chi]);
                    total += *ip.as_integer() / N.std_group->order * td->degrees[r];
                }
                CHECK(total == index);
            }
        }
    }

    // inflating lambda from D_2n/<r^d> gives lambda of D_2n
    for (long d : {1L, 2L, 3L}) {
        auto td6 = table_dihedral(6);
        Quotient q = quotient_by_divisor(td6->group, d);
        auto tq = standard_table(q.group);
        int lam_q = d == 1 ? 1 : tq->row_named("lambda");
        REQUIRE(lam_q >= 0);
        CHECK(td6->row_of_values(inflate_row(*td6, q, *tq, lam_q)) == td6->row_named("lambda"));
    }
}

TEST_CASE("character multiplication identities for even n") {
    for (long n = 2; n <= 12; n += 2) {
        auto t = table_dihedral(n);
        int mu0 = t->row_named("mu0"), mu1 = t->row_named("mu1");
        CHECK(row_product(*t, mu0, mu0) == t->rows[0]);
        CHECK(row_product(*t, mu1, mu1) == t->rows[0]);
        CHECK(row_product(*t, mu0, mu1) == t->rows[1]);           // mu0 mu1 = lambda
        CHECK(row_product(*t, mu0, 1) == t->rows[mu1]);           // mu_i lambda = mu_{1-i}
        CHECK(row_product(*t, mu1, 1) == t->rows[mu0]);
        for (long m = 1; 2 * m < n; ++m) {
            int chim = t->row_named("chi_" + std::to_string(m));
            CHECK(row_product(*t, mu0, chim) == chi_extended(*t, n / 2 - m));
            CHECK(row_product(*t, mu1, chim) == chi_extended(*t, n / 2 - m));
            for (long l = 1; 2 * l < n; ++l) {
                int chil = t->row_named("chi_" + std::to_string(l));
                CHECK(row_product(*t, chil, chim) ==
                      vec_sum(chi_extended(*t, l + m), chi_extended(*t, std::labs(l - m))));
            }
        }
    }
}

TEST_CASE("extended chi index convention") {
    auto t = table_dihedral(6);
    CHECK(resolve_chi(*t, 0) == std::vector<int>{0, 1});
    CHECK(resolve_chi(*t, 3) == std::vector<int>{2, 3});
    CHECK(resolve_chi(*t, 1) == std::vector<int>{4});
    CHECK(resolve_chi(*t, -1) == resolve_chi(*t, 1));
    CHECK(resolve_chi(*t, 7) == resolve_chi(*t, 1));
    CHECK(resolve_chi(*t, 5) == resolve_chi(*t, 1));

    auto t5 = table_dihedral(5);
    CHECK(resolve_chi(*t5, 2) == std::vector<int>{3});
    CHECK(resolve_chi(*t5, 3) == std::vector<int>{3});
}
