#include "fschur/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fschur {

namespace {

// Entry -> 0-based (row, col), for tableaux with distinct entries.
std::map<Int, std::pair<std::size_t, std::size_t>>
position_index(const std::vector<std::vector<Int>>& rows) {
    std::map<Int, std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            pos[rows[r][c]] = {r, c};
    return pos;
}

// Descent positions (1-based ranks) of the standardization of a
// distinct-entry tableau: rank i is a descent when the entry of rank i+1
// sits in a strictly lower row.
std::vector<Int> descents_of_rows(const std::vector<std::vector<Int>>& rows) {
    std::vector<std::pair<Int, std::size_t>> by_value; // (entry, row)
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (Int x : rows[r])
            by_value.emplace_back(x, r);
    std::sort(by_value.begin(), by_value.end());
    std::vector<Int> descents;
    for (std::size_t i = 0; i + 1 < by_value.size(); ++i)
        if (by_value[i + 1].second > by_value[i].second)
            descents.push_back(static_cast<Int>(i + 1));
    return descents;
}

Composition composition_from_descents(const std::vector<Int>& descents, Int n) {
    if (n == 0)
        return Composition();
    std::vector<Int> parts;
    Int prev = 0;
    for (Int d : descents) {
        parts.push_back(d - prev);
        prev = d;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

DescentData descent_data_of_rows(const std::vector<std::vector<Int>>& rows) {
    Int n = 0;
    for (const auto& row : rows)
        n += static_cast<Int>(row.size());
    DescentData dd;
    dd.descents = descents_of_rows(rows);
    dd.composition = composition_from_descents(dd.descents, n);
    return dd;
}

// Builds the standard two-run tableau T_j of shape (s1, s2): first run
// 1..j in row 1, then j+1..j+s2 in row 2 and the rest back in row 1.
std::vector<std::vector<Int>> two_run_rows(Int s1, Int s2, Int j) {
    std::vector<Int> row1, row2;
    for (Int x = 1; x <= j; ++x)
        row1.push_back(x);
    for (Int x = j + 1; x <= j + s2; ++x)
        row2.push_back(x);
    for (Int x = j + s2 + 1; x <= s1 + s2; ++x)
        row1.push_back(x);
    return {std::move(row1), std::move(row2)};
}

} // namespace

Tableau::Tableau(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty())
        rows_.pop_back();
    std::vector<Int> seen;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty())
            throw std::invalid_argument("tableau row " + std::to_string(r + 1) +
                                        " is empty");
        if (r > 0 && rows_[r - 1].size() < row.size())
            throw std::invalid_argument("tableau row lengths must be weakly decreasing");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1)
                throw std::invalid_argument("tableau entries must be positive");
            if (c > 0 && row[c - 1] >= row[c])
                throw std::invalid_argument("row " + std::to_string(r + 1) +
                                            " is not strictly increasing");
            if (r > 0 && rows_[r - 1][c] >= row[c])
                throw std::invalid_argument("column " + std::to_string(c + 1) +
                                            " is not strictly increasing");
            seen.push_back(row[c]);
        }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("tableau entries must be distinct");
}

Partition Tableau::shape() const {
    std::vector<Int> parts;
    for (const auto& row : rows_)
        parts.push_back(static_cast<Int>(row.size()));
    return Partition(std::move(parts));
}

Int Tableau::size() const {
    Int n = 0;
    for (const auto& row : rows_)
        n += static_cast<Int>(row.size());
    return n;
}

StandardTableau::StandardTableau(Tableau t) : tableau_(std::move(t)) {
    Int n = tableau_.size();
    std::vector<Int> seen;
    for (const auto& row : tableau_.rows())
        for (Int x : row)
            seen.push_back(x);
    std::sort(seen.begin(), seen.end());
    for (Int i = 0; i < n; ++i)
        if (seen[i] != i + 1)
            throw std::invalid_argument("standard tableau entries must be exactly 1.." +
                                        std::to_string(n));
}

StandardTableau::StandardTableau(std::vector<std::vector<Int>> rows)
    : StandardTableau(Tableau(std::move(rows))) {}

DescentData descent_data(const StandardTableau& t) {
    return descent_data_of_rows(t.rows());
}

DescentData descent_data_general(const Tableau& t) {
    return descent_data_of_rows(t.rows());
}

std::vector<std::vector<Cell>> runs(const StandardTableau& t) {
    DescentData dd = descent_data(t);
    auto pos = position_index(t.rows());
    std::vector<std::vector<Cell>> out;
    Int n = t.size();
    Int prev = 0;
    std::vector<Int> bounds = dd.descents;
    if (n > 0)
        bounds.push_back(n);
    for (Int d : bounds) {
        std::vector<Cell> run;
        for (Int x = prev + 1; x <= d; ++x) {
            auto [r, c] = pos.at(x);
            run.push_back(Cell{r, c, x});
        }
        out.push_back(std::move(run));
        prev = d;
    }
    return out;
}

void for_each_syt(const Partition& shape,
                  const std::function<void(const StandardTableau&)>& fn) {
    const auto& sh = shape.parts();
    Int n = shape.size();
    std::vector<std::vector<Int>> rows(sh.size());
    for (std::size_t r = 0; r < sh.size(); ++r)
        rows[r].reserve(static_cast<std::size_t>(sh[r]));

    std::function<void(Int)> place = [&](Int entry) {
        if (entry > n) {
            fn(StandardTableau(rows));
            return;
        }
        for (std::size_t r = 0; r < sh.size(); ++r) {
            bool addable = static_cast<Int>(rows[r].size()) < sh[r] &&
                           (r == 0 || rows[r - 1].size() > rows[r].size());
            if (!addable)
                continue;
            rows[r].push_back(entry);
            place(entry + 1);
            rows[r].pop_back();
        }
    };
    place(1);
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); });
    // Backtracking order and row-reading-word order disagree from shape
    // (3,2,1) on; the listed order is the reading-word one.
    std::sort(out.begin(), out.end(),
              [](const StandardTableau& a, const StandardTableau& b) {
                  return std::lexicographical_compare(
                      a.rows().begin(), a.rows().end(), b.rows().begin(),
                      b.rows().end());
              });
    return out;
}

Int count_syt(const Partition& shape) {
    const auto& sh = shape.parts();
    Int n = shape.size();
    // n! over the product of hook lengths; the quotient is exact.
    Int num = 1;
    for (Int i = 2; i <= n; ++i)
        num = checked_mul(num, i);
    Int den = 1;
    std::vector<Int> col_len(sh.empty() ? 0 : static_cast<std::size_t>(sh[0]), 0);
    for (std::size_t r = 0; r < sh.size(); ++r)
        for (Int c = 0; c < sh[r]; ++c)
            ++col_len[static_cast<std::size_t>(c)];
    for (std::size_t r = 0; r < sh.size(); ++r) {
        for (Int c = 0; c < sh[r]; ++c) {
            Int hook = (sh[r] - c) + (col_len[static_cast<std::size_t>(c)] -
                                      static_cast<Int>(r)) - 1;
            den = checked_mul(den, hook);
        }
    }
    return num / den;
}

StandardTableau superstandard(const Partition& shape) {
    std::vector<std::vector<Int>> rows;
    Int next = 1;
    for (Int len : shape.parts()) {
        std::vector<Int> row;
        for (Int c = 0; c < len; ++c)
            row.push_back(next++);
        rows.push_back(std::move(row));
    }
    return StandardTableau(std::move(rows));
}

bool is_superstandard(const StandardTableau& t) {
    Int next = 1;
    for (const auto& row : t.rows())
        for (Int x : row)
            if (x != next++)
                return false;
    return true;
}

std::size_t superstandard_prefix_length(const StandardTableau& t) {
    if (is_superstandard(t))
        throw std::domain_error("superstandard tableau has no proper prefix length");
    std::size_t k = 0;
    Int next = 1;
    for (const auto& row : t.rows()) {
        bool consecutive = true;
        for (Int x : row) {
            if (x != next) {
                consecutive = false;
                break;
            }
            ++next;
        }
        if (!consecutive)
            break;
        ++k;
    }
    // A standard tableau whose first k rows are superstandard but which is
    // not superstandard itself must continue for at least two more rows.
    if (t.rows().size() < k + 2)
        throw std::logic_error("superstandard prefix invariant violated");
    return k;
}

std::size_t two_run_index(const Tableau& t) {
    if (t.rows().size() != 2)
        throw std::domain_error("two_run_index requires exactly two rows");
    DescentData dd = descent_data_general(t);
    if (dd.descents.size() != 1)
        throw std::domain_error("two_run_index requires exactly two runs, got " +
                                std::to_string(dd.descents.size() + 1));
    return static_cast<std::size_t>(dd.descents[0]);
}

Tableau theta_two_run(const Tableau& t) {
    std::size_t j = two_run_index(t);
    Int s1 = static_cast<Int>(t.rows()[0].size());
    Int s2 = static_cast<Int>(t.rows()[1].size());
    Int n = s1 + s2;
    if (static_cast<Int>(j) == s1)
        throw std::domain_error("superstandard two-run tableau: theta undefined");

    // Relabel order-isomorphically: sorted original entries stand in for
    // 1..n, so building T_{n-j-1} with standard entries and mapping back
    // extends the involution to arbitrary distinct entries.
    std::vector<Int> sorted;
    for (const auto& row : t.rows())
        sorted.insert(sorted.end(), row.begin(), row.end());
    std::sort(sorted.begin(), sorted.end());

    Int j2 = n - static_cast<Int>(j) - 1;
    auto rows = two_run_rows(s1, s2, j2);
    for (auto& row : rows)
        for (Int& x : row)
            x = sorted[static_cast<std::size_t>(x - 1)];
    return Tableau(std::move(rows));
}

namespace {

// The two-run move on the first two runs after the superstandard prefix:
// the preferred pairing move. Returns nothing when the fragment is the
// superstandard two-run tableau of its shape (second run entirely inside
// the second row), where the move is not defined.
std::optional<StandardTableau> two_run_move(const StandardTableau& t, std::size_t k) {
    std::vector<std::vector<Int>> sub(t.rows().begin() + static_cast<long>(k),
                                      t.rows().end());
    DescentData dd = descent_data_of_rows(sub);
    assert(!dd.descents.empty());
    std::vector<Int> sorted;
    for (const auto& row : sub)
        sorted.insert(sorted.end(), row.begin(), row.end());
    std::sort(sorted.begin(), sorted.end());

    Int d1 = dd.descents[0];
    Int d2 = dd.descents.size() > 1 ? dd.descents[1]
                                    : static_cast<Int>(sorted.size());
    auto pos = position_index(sub);

    // The first two runs must form a straight two-row fragment: run one a
    // prefix of the first row, run two a prefix of the second row plus the
    // following cells of the first. Anything else is a hard error.
    std::size_t row1_cells = 0, row2_cells = 0;
    for (Int rank = 1; rank <= d2; ++rank) {
        auto [r, c] = pos.at(sorted[static_cast<std::size_t>(rank - 1)]);
        if (rank <= d1) {
            if (r != 0 || c != static_cast<std::size_t>(rank - 1))
                throw std::logic_error("theta: first run is not a first-row prefix");
        } else if (r > 1) {
            throw std::logic_error("theta: second run leaves the first two rows");
        }
        if (r == 0)
            ++row1_cells;
        else
            ++row2_cells;
    }
    if (row1_cells == static_cast<std::size_t>(d1))
        return std::nullopt; // superstandard fragment, no two-run move
    if (sub.size() < 2 || row2_cells > row1_cells || row2_cells == 0)
        throw std::logic_error("theta: first two runs are not a straight two-row shape");
    for (Int rank = d1 + 1; rank <= d2; ++rank) {
        auto [r, c] = pos.at(sorted[static_cast<std::size_t>(rank - 1)]);
        if (r == 1 && c >= row2_cells)
            throw std::logic_error("theta: second run is not a second-row prefix");
        if (r == 0 && (c < static_cast<std::size_t>(d1) || c >= row1_cells))
            throw std::logic_error("theta: second run misaligned in the first row");
    }

    std::vector<std::vector<Int>> fragment = {
        {sub[0].begin(), sub[0].begin() + static_cast<long>(row1_cells)},
        {sub[1].begin(), sub[1].begin() + static_cast<long>(row2_cells)}};
    Tableau flipped = theta_two_run(Tableau(std::move(fragment)));

    std::vector<std::vector<Int>> rows = t.rows();
    for (std::size_t c = 0; c < row1_cells; ++c)
        rows[k][c] = flipped.rows()[0][c];
    for (std::size_t c = 0; c < row2_cells; ++c)
        rows[k + 1][c] = flipped.rows()[1][c];
    return StandardTableau(std::move(rows));
}

// Row values of a composition; raising at i swaps values i-1, i.
std::vector<Int> row_values(const Composition& c) {
    std::vector<Int> v(c.length());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = c.parts()[i] - static_cast<Int>(i + 1);
    return v;
}

// Indices i with raise(c, i) == target; empty when not raise-adjacent.
std::vector<std::size_t> raise_witnesses(const Composition& c, const Composition& target) {
    std::vector<std::size_t> out;
    for (std::size_t i = 2; i <= c.length(); ++i)
        if (c.parts()[i - 1] >= 2 && raise(c, i) == target)
            out.push_back(i);
    return out;
}

bool raise_fixed_eligible(const Composition& c) {
    for (std::size_t i = 2; i <= c.length(); ++i)
        if (c.parts()[i - 1] >= 2 && raise(c, i) == c)
            return true;
    return false;
}

// Class key for the pairing: the multiset of row values, which every raise
// preserves. Side: raises flip the parity of strict inversions, so each
// class is bipartite by it.
struct NodeClass {
    std::vector<Int> sorted_values;
    int side = 0;
};

NodeClass node_class(const Composition& c) {
    std::vector<Int> v = row_values(c);
    int inversions = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] < v[j])
                ++inversions;
    std::sort(v.begin(), v.end());
    return NodeClass{std::move(v), inversions % 2};
}

// Deterministic augmenting-path matcher over one raise-class. Nodes whose
// composition admits an identity raise may stay uncovered (they become
// fixed points), so an alternating path may also end by releasing such a
// node; every other node must end up matched.
struct ClassMatcher {
    std::vector<std::size_t> nodes;              // global indices
    std::map<std::size_t, std::size_t> local_of; // global -> local
    std::vector<int> side;                       // per local
    std::vector<char> releasable;                // per local: may stay fixed
    std::vector<std::vector<std::size_t>> adj;   // local -> locals
    std::vector<long> match;                     // local -> local or -1

    // Covers u, keeping every currently covered non-releasable node
    // covered. A step may free a releasable node.
    bool try_cover(std::size_t u, std::vector<char>& visited) {
        for (std::size_t v : adj[u]) {
            if (visited[v])
                continue;
            visited[v] = 1;
            long w = match[v];
            if (w < 0 || try_cover(static_cast<std::size_t>(w), visited)) {
                match[v] = static_cast<long>(u);
                match[u] = static_cast<long>(v);
                return true;
            }
            if (releasable[static_cast<std::size_t>(w)]) {
                match[static_cast<std::size_t>(w)] = -1;
                match[v] = static_cast<long>(u);
                match[u] = static_cast<long>(v);
                return true;
            }
        }
        return false;
    }
};

} // namespace

ThetaResult theta(const StandardTableau& t) {
    if (is_superstandard(t))
        throw std::domain_error("superstandard: theta undefined");
    PairingReport report = cancellation_pairing(t.shape());
    for (const auto& entry : report.entries) {
        if (!(entry.tableau == t))
            continue;
        ThetaResult result;
        result.raise_index = entry.raise_index.value();
        result.image = entry.cls == PairingClass::Paired
                           ? report.entries[*entry.partner].tableau
                           : t;
        return result;
    }
    throw std::logic_error("theta: tableau not found in its shape enumeration");
}

PairingReport cancellation_pairing(const Partition& shape) {
    PairingReport report;
    report.shape = shape;
    auto tableaux = enumerate_syt(shape);
    const std::size_t n = tableaux.size();

    std::vector<DescentData> descents(n);
    std::vector<SignedPartition> straightened(n);
    std::vector<char> superstd(n, 0);
    std::map<std::vector<std::vector<Int>>, std::size_t> index_of;
    for (std::size_t i = 0; i < n; ++i) {
        descents[i] = descent_data(tableaux[i]);
        straightened[i] = straighten(descents[i].composition);
        superstd[i] = is_superstandard(tableaux[i]) ? 1 : 0;
        index_of[tableaux[i].rows()] = i;
        if (!straightened[i].is_zero()) {
            Int coeff = straightened[i].sign();
            auto [it, inserted] =
                report.telescoped.try_emplace(straightened[i].shape(), coeff);
            if (!inserted && (it->second = checked_add(it->second, coeff)) == 0)
                report.telescoped.erase(it);
        }
    }

    // The pairing: within each raise-class, match tableaux whose descent
    // compositions are one raise apart. The paper's two-run move seeds the
    // matching (its fixed points are left unseeded and stay fixed unless
    // another tableau needs them); augmenting paths reroute a seeded edge
    // only when a perfect matching needs it.
    std::vector<long> partner(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (superstd[i] || partner[i] != -1)
            continue;
        std::size_t k = superstandard_prefix_length(tableaux[i]);
        auto moved = two_run_move(tableaux[i], k);
        if (!moved || *moved == tableaux[i])
            continue;
        std::size_t other = index_of.at(moved->rows());
        if (partner[other] == -1) {
            partner[i] = static_cast<long>(other);
            partner[other] = static_cast<long>(i);
        }
    }

    std::map<std::vector<Int>, ClassMatcher> classes;
    for (std::size_t i = 0; i < n; ++i) {
        if (superstd[i])
            continue;
        NodeClass nc = node_class(descents[i].composition);
        auto& matcher = classes[nc.sorted_values];
        matcher.local_of[i] = matcher.nodes.size();
        matcher.nodes.push_back(i);
        matcher.side.push_back(nc.side);
        matcher.releasable.push_back(
            raise_fixed_eligible(descents[i].composition) ? 1 : 0);
    }

    for (auto& [values, matcher] : classes) {
        const std::size_t m = matcher.nodes.size();
        matcher.adj.resize(m);
        matcher.match.assign(m, -1);
        for (std::size_t u = 0; u < m; ++u) {
            const Composition& cu = descents[matcher.nodes[u]].composition;
            for (std::size_t v = 0; v < m; ++v) {
                if (matcher.side[v] == matcher.side[u])
                    continue;
                if (!raise_witnesses(cu, descents[matcher.nodes[v]].composition).empty())
                    matcher.adj[u].push_back(v);
            }
        }
        for (std::size_t u = 0; u < m; ++u) {
            long p = partner[matcher.nodes[u]];
            if (p >= 0)
                matcher.match[u] =
                    static_cast<long>(matcher.local_of.at(static_cast<std::size_t>(p)));
        }
        for (std::size_t u = 0; u < m; ++u) {
            if (matcher.releasable[u] || matcher.match[u] >= 0)
                continue;
            std::vector<char> visited(m, 0);
            matcher.try_cover(u, visited);
        }
        for (std::size_t u = 0; u < m; ++u) {
            partner[matcher.nodes[u]] =
                matcher.match[u] >= 0
                    ? static_cast<long>(matcher.nodes[static_cast<std::size_t>(matcher.match[u])])
                    : -1;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        PairingEntry entry;
        entry.tableau = tableaux[i];
        entry.descent = descents[i];
        entry.straightened = straightened[i];
        if (superstd[i]) {
            entry.cls = PairingClass::Superstandard;
        } else if (partner[i] >= 0) {
            entry.cls = PairingClass::Paired;
            entry.partner = static_cast<std::size_t>(partner[i]);
            auto witnesses = raise_witnesses(
                descents[i].composition,
                descents[static_cast<std::size_t>(partner[i])].composition);
            assert(!witnesses.empty());
            entry.raise_index = witnesses.front();
        } else {
            // Unmatched tableaux must be fixable in place: some raise has
            // to leave the descent composition unchanged (which forces the
            // straightened value to zero). Anything else means no valid
            // involution exists, which must surface, not pass silently.
            if (!raise_fixed_eligible(descents[i].composition))
                throw std::logic_error(
                    "cancellation pairing: tableau " + to_string(tableaux[i]) +
                    " with descent composition " + to_string(descents[i].composition) +
                    " has no partner and no identity raise");
            entry.cls = PairingClass::Fixed;
            for (std::size_t idx = 2; idx <= descents[i].composition.length(); ++idx) {
                if (descents[i].composition.parts()[idx - 1] >= 2 &&
                    raise(descents[i].composition, idx) == descents[i].composition) {
                    entry.raise_index = idx;
                    break;
                }
            }
        }
        report.entries.push_back(std::move(entry));
    }

    std::map<Partition, Int, PartitionLess> expected;
    expected.emplace(shape, 1);
    report.ok = report.telescoped == expected;
    return report;
}

std::string to_string(const Tableau& t) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r)
            os << ",";
        os << "[";
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (c)
                os << ",";
            os << t.rows()[r][c];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string to_string(const StandardTableau& t) { return to_string(t.tableau()); }

} // namespace fschur
