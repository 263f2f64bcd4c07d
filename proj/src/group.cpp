#include "supergraph/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "supergraph/errors.hpp"

namespace supergraph {

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::Dihedral: return "d2n";
    case Family::Quaternion: return "q4n";
    case Family::Semidihedral: return "sd8n";
    case Family::Cyclic: return "cyclic";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    if (name == "d2n" || name == "dihedral") return Family::Dihedral;
    if (name == "q4n" || name == "quaternion") return Family::Quaternion;
    if (name == "sd8n" || name == "semidihedral") return Family::Semidihedral;
    if (name == "cyclic" || name == "zn") return Family::Cyclic;
    throw ParameterOutOfRange("unknown group family '" + std::string(name) + "'");
}

unsigned family_minimum(Family f)
{
    switch (f) {
    case Family::Dihedral: return 3;
    case Family::Quaternion: return 2;
    case Family::Semidihedral: return 2;
    case Family::Cyclic: return 1;
    }
    return 1;
}

unsigned rotation_count(Family f, unsigned n)
{
    switch (f) {
    case Family::Dihedral: return n;
    case Family::Quaternion: return 2 * n;
    case Family::Semidihedral: return 4 * n;
    case Family::Cyclic: return n;
    }
    return n;
}

unsigned group_order(Family f, unsigned n)
{
    return f == Family::Cyclic ? n : 2 * rotation_count(f, n);
}

GroupTable::GroupTable(Family family, unsigned parameter, std::vector<Element> product,
                       std::vector<std::string> labels)
    : family_(family),
      parameter_(parameter),
      order_(labels.size()),
      rotations_(rotation_count(family, parameter)),
      product_(std::move(product)),
      inverse_(order_, 0),
      labels_(std::move(labels))
{
    if (product_.size() != order_ * order_)
        throw DimensionMismatch("group table size does not match label count");
    for (Element x = 0; x < order_; ++x) {
        for (Element y = 0; y < order_; ++y) {
            if (multiply(x, y) == 0) {
                inverse_[x] = y;
                break;
            }
        }
    }
}

bool GroupTable::satisfies_axioms() const
{
    const std::size_t n = order_;
    std::vector<char> seen(n);
    for (Element x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Element y = 0; y < n; ++y) {
            Element p = multiply(x, y);
            if (p >= n || seen[p]) return false;
            seen[p] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (Element y = 0; y < n; ++y) {
            Element p = multiply(y, x);
            if (p >= n || seen[p]) return false;
            seen[p] = 1;
        }
        if (multiply(0, x) != x || multiply(x, 0) != x) return false;
        if (multiply(x, inverse_[x]) != 0 || multiply(inverse_[x], x) != 0) return false;
    }
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            const Element xy = multiply(x, y);
            for (Element z = 0; z < n; ++z)
                if (multiply(xy, z) != multiply(x, multiply(y, z))) return false;
        }
    return true;
}

Partition::Partition(std::vector<ElementSet> blocks) : blocks_(std::move(blocks))
{
    std::size_t total = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw DimensionMismatch("partition block is empty");
        std::sort(b.begin(), b.end());
        total += b.size();
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const ElementSet& l, const ElementSet& r) { return l.front() < r.front(); });
    block_of_.assign(total, total);
    for (std::size_t id = 0; id < blocks_.size(); ++id) {
        for (Element x : blocks_[id]) {
            if (x >= total || block_of_[x] != total)
                throw DimensionMismatch("partition blocks overlap or leave gaps");
            block_of_[x] = id;
        }
    }
}

Partition Partition::singletons(std::size_t n)
{
    std::vector<ElementSet> blocks(n);
    for (Element x = 0; x < n; ++x) blocks[x] = {x};
    return Partition(std::move(blocks));
}

bool Partition::refines(const Partition& coarser) const
{
    if (coarser.ground_size() != ground_size()) return false;
    for (const auto& b : blocks_) {
        const std::size_t target = coarser.block_of(b.front());
        for (Element x : b)
            if (coarser.block_of(x) != target) return false;
    }
    return true;
}

namespace {

std::string rotation_label(unsigned i)
{
    if (i == 0) return "e";
    if (i == 1) return "a";
    return "a^" + std::to_string(i);
}

std::string reflection_label(unsigned i)
{
    if (i == 0) return "b";
    if (i == 1) return "a*b";
    return "a^" + std::to_string(i) + "*b";
}

} // namespace

GroupTable build_group(Family family, unsigned n)
{
    if (n < family_minimum(family))
        throw ParameterOutOfRange("n = " + std::to_string(n) + " is below the minimum " +
                                  std::to_string(family_minimum(family)) + " for " +
                                  std::string(family_name(family)));

    const unsigned k = rotation_count(family, n);
    const unsigned order = group_order(family, n);

    // b a^j = a^(twist*j) b, and b^2 = a^square.
    unsigned twist = k - 1;
    unsigned square = 0;
    if (family == Family::Quaternion) square = n;
    if (family == Family::Semidihedral) twist = 2 * n - 1;

    std::vector<Element> product(static_cast<std::size_t>(order) * order);
    for (Element x = 0; x < order; ++x) {
        const bool xr = x >= k;
        const std::uint64_t i = x % k;
        for (Element y = 0; y < order; ++y) {
            const bool yr = y >= k;
            const std::uint64_t j = y % k;
            Element p;
            if (!xr) {
                p = static_cast<Element>((i + j) % k) + (yr ? k : 0);
            } else {
                const std::uint64_t e = (i + twist * j) % k;
                p = yr ? static_cast<Element>((e + square) % k) : static_cast<Element>(e) + k;
            }
            product[static_cast<std::size_t>(x) * order + y] = p;
        }
    }

    std::vector<std::string> labels;
    labels.reserve(order);
    for (unsigned i = 0; i < k; ++i) labels.push_back(rotation_label(i));
    if (family != Family::Cyclic)
        for (unsigned i = 0; i < k; ++i) labels.push_back(reflection_label(i));

    return GroupTable(family, n, std::move(product), std::move(labels));
}

unsigned element_order(const GroupTable& g, Element x)
{
    if (x >= g.order()) throw ParameterOutOfRange("element index out of range");
    unsigned k = 1;
    for (Element p = x; p != g.identity(); p = g.multiply(p, x)) ++k;
    return k;
}

ElementSet center(const GroupTable& g)
{
    ElementSet z;
    for (Element x = 0; x < g.order(); ++x) {
        bool central = true;
        for (Element y = 0; y < g.order() && central; ++y)
            central = g.multiply(x, y) == g.multiply(y, x);
        if (central) z.push_back(x);
    }
    return z;
}

Partition conjugacy_classes(const GroupTable& g)
{
    const std::size_t n = g.order();
    std::vector<char> assigned(n, 0);
    std::vector<ElementSet> classes;
    for (Element x = 0; x < n; ++x) {
        if (assigned[x]) continue;
        ElementSet cls;
        for (Element h = 0; h < n; ++h) {
            const Element c = g.multiply(g.multiply(h, x), g.inverse(h));
            if (!assigned[c]) {
                assigned[c] = 1;
                cls.push_back(c);
            }
        }
        classes.push_back(std::move(cls));
    }
    return Partition(std::move(classes));
}

Partition order_partition(const GroupTable& g)
{
    std::vector<ElementSet> by_order(g.order() + 1);
    for (Element x = 0; x < g.order(); ++x) by_order[element_order(g, x)].push_back(x);
    std::vector<ElementSet> blocks;
    for (auto& b : by_order)
        if (!b.empty()) blocks.push_back(std::move(b));
    return Partition(std::move(blocks));
}

ElementSet cyclic_subgroup(const GroupTable& g, Element x)
{
    ElementSet s{g.identity()};
    for (Element p = x; p != g.identity(); p = g.multiply(p, x)) s.push_back(p);
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<ElementSet> cyclic_subgroups(const GroupTable& g)
{
    std::set<ElementSet> distinct;
    for (Element x = 0; x < g.order(); ++x) distinct.insert(cyclic_subgroup(g, x));
    return {distinct.begin(), distinct.end()};
}

std::vector<ElementSet> maximal_cyclic_subgroups(const GroupTable& g)
{
    const auto all = cyclic_subgroups(g);
    std::vector<ElementSet> maximal;
    for (const auto& s : all) {
        const bool contained = std::any_of(all.begin(), all.end(), [&](const ElementSet& t) {
            return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
        });
        if (!contained) maximal.push_back(s);
    }
    return maximal;
}

std::string format_set(const GroupTable& g, const ElementSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += g.label(s[i]);
    }
    return out + "}";
}

} // namespace supergraph
