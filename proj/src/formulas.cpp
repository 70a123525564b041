#include "sandpiles/formulas.hpp"

#include <algorithm>

#include "sandpiles/errors.hpp"

namespace sandpiles {

Int f_recursive(const Args& x) {
    if (x.empty())
        throw EmptyArgsError("tree-count recurrence needs at least one "
                             "argument");
    // u = F_j(x_1..x_j), v = F_j(x_1..x_j - 1). Expanding one step of the
    // recurrence shows both advance from just (u, v):
    //   F_{j+1}(.., y)     = v + (y - 1) u
    //   F_{j+1}(.., y - 1) = v + (y - 2) u
    Int u = x[0];
    Int v = x[0] - 1;
    for (std::size_t j = 1; j < x.size(); ++j) {
        Int nu = v + (x[j] - 1) * u;
        Int nv = v + (x[j] - 2) * u;
        u = std::move(nu);
        v = std::move(nv);
    }
    return u;
}

std::vector<IndexSet> enumerate_C(int i, int j) {
    std::vector<IndexSet> out;
    if (i < 0 || j < 0) return out;
    if (i == 0) {
        out.push_back({});
        return out;
    }

    // Build sets downward from their maximum: the parity conditions say
    // max(I) is j, j-2, j-4, ... and each further element steps down by an
    // odd amount, so candidates below b are b-1, b-3, b-5, ...
    IndexSet stack;
    auto descend = [&](auto&& self, int b, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(stack.rbegin(), stack.rend());
            return;
        }
        for (int c = b - 1; c >= 1; c -= 2) {
            stack.push_back(c);
            self(self, c, remaining - 1);
            stack.pop_back();
        }
    };
    for (int m = j; m >= 1; m -= 2) {
        stack.push_back(m);
        descend(descend, m, i - 1);
        stack.pop_back();
    }

    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::vector<IndexSet>, std::vector<IndexSet>> split_AB(int i,
                                                                 int j) {
    std::vector<IndexSet> a, b;
    for (IndexSet& s : enumerate_C(i, j)) {
        if (!s.empty() && s.back() == j)
            b.push_back(std::move(s));
        else
            a.push_back(std::move(s));
    }
    return {std::move(a), std::move(b)};
}

namespace {

void check_arity(int j, const Args& x, int expected) {
    if (static_cast<int>(x.size()) != expected)
        throw ArityMismatchError("index " + std::to_string(j) + " needs " +
                                 std::to_string(expected) + " arguments, got " +
                                 std::to_string(x.size()));
}

// down[c][b] = sum over descending odd-gap chains of length c starting
// strictly below b, of the product of x over the chain. The same table
// serves gamma, alpha and beta: they differ only in the allowed maximums.
std::vector<std::vector<Int>> down_table(int depth, int j, const Args& x) {
    std::vector<std::vector<Int>> down(
        depth + 1, std::vector<Int>(j + 1));
    for (int b = 0; b <= j; ++b) down[0][b] = 1;
    for (int c = 1; c <= depth; ++c)
        for (int b = 1; b <= j; ++b)
            for (int e = b - 1; e >= 1; e -= 2)
                down[c][b] += x[e - 1] * down[c - 1][e];
    return down;
}

}  // namespace

Int eval_gamma(int i, int j, const Args& x) {
    check_arity(j, x, j);
    if (i < 0) return 0;
    if (i == 0) return 1;
    auto down = down_table(i - 1, j, x);
    Int total = 0;
    for (int m = j; m >= 1; m -= 2) total += x[m - 1] * down[i - 1][m];
    return total;
}

Int eval_alpha(int i, int j, const Args& x) {
    check_arity(j, x, j);
    if (i < 0) return 0;
    if (i == 0) return 1;
    auto down = down_table(i - 1, j, x);
    Int total = 0;
    for (int m = j - 2; m >= 1; m -= 2) total += x[m - 1] * down[i - 1][m];
    return total;
}

Int eval_beta(int i, int j, const Args& x) {
    check_arity(j, x, j);
    if (i <= 0 || j <= 0) return 0;  // members of B contain j
    auto down = down_table(i - 1, j, x);
    return x[j - 1] * down[i - 1][j];
}

Int eval_beta_prime(int i, int j, const Args& x) {
    check_arity(j, x, j > 0 ? j - 1 : 0);
    if (i <= 0 || j <= 0) return 0;
    // beta with x_j fixed to 1: the table only reads coordinates below j,
    // so the j-1 supplied ones suffice and the top factor is just dropped.
    auto down = down_table(i - 1, j, x);
    return down[i - 1][j];
}

Int g_closed_form(const Args& x) {
    if (x.empty())
        throw EmptyArgsError("closed form needs at least one argument");
    const int n = static_cast<int>(x.size());
    Int total = 0;
    bool plus = true;
    for (int i = n; i >= 0; i -= 2) {
        if (plus)
            total += eval_gamma(i, n, x);
        else
            total -= eval_gamma(i, n, x);
        plus = !plus;
    }
    return total;
}

}  // namespace sandpiles
